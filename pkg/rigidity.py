from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, Optional, Set, Tuple

from exceptions import Impossible, VerificationFailed
from fusion import RootOfUnity, omega_member
from group_core import LETTER_B_INVERSE, BsPresentation, NormalForm
from hecke import coset_profile, in_ratio_group


class Verdict(Enum):
	NO_OBSTRUCTION = "no_obstruction"
	N_MISMATCH = "n_mismatch"
	ABS_M_MISMATCH = "abs_m_mismatch"
	SIGN_MISMATCH = "sign_mismatch"


@dataclass(frozen=True)
class SignWitness:
	t: int
	omega: RootOfUnity
	mu: RootOfUnity

	def to_json(self) -> Dict[str, object]:
		return {"t": self.t, "omega": str(self.omega), "mu": str(self.mu)}


@dataclass(frozen=True)
class RigidityVerdict:
	"""
	An obstruction to stable isomorphism of the two group von Neumann algebras.
	NO_OBSTRUCTION rules nothing in or out.
	"""

	verdict: Verdict
	witness: Optional[SignWitness] = None

	@property
	def obstructed(self) -> bool:
		return self.verdict is not Verdict.NO_OBSTRUCTION

	def to_json(self) -> Dict[str, object]:
		document: Dict[str, object] = {"verdict": self.verdict.value}
		if self.witness is not None:
			document["witness"] = self.witness.to_json()
		return document


def _require_nonzero(*values: int) -> None:
	if any(value == 0 for value in values):
		raise Impossible(f"Baumslag-Solitar parameters must be nonzero, got {values}")


def canonicalize(n: int, m: int) -> Tuple[int, int]:
	_require_nonzero(n, m)
	if abs(n) <= abs(m):
		return (n, m) if n > 0 else (-n, -m)
	# BS(n,m) = BS(m,n) by b <-> b^-1
	return (m, n) if m > 0 else (-m, -n)


def is_isomorphic(n1: int, m1: int, n2: int, m2: int) -> bool:
	_require_nonzero(n1, m1, n2, m2)
	return any(sorted((n1, m1)) == sorted((sign * n2, sign * m2)) for sign in (1, -1))


def is_amenable(n: int, m: int) -> bool:
	_require_nonzero(n, m)
	return abs(n) == 1 or abs(m) == 1


def recover_parameters(profiles: Iterable[Tuple[int, int]]) -> Tuple[int, int]:
	profiles = set(profiles)
	l_values = [l for l, _ in profiles if l > 1]
	if not l_values:
		raise Impossible("profile sample carries no l-value above 1")
	n = min(l_values)

	# the ratios l/r form the cyclic group (n/|m|)^Z, generated by its largest member below 1
	below_one = set()
	for l, r in profiles:
		ratio = Fraction(l, r)
		if ratio != 1:
			below_one.add(ratio if ratio < 1 else 1 / ratio)
	generator = max(below_one) if below_one else Fraction(1)
	abs_m = n / generator
	if abs_m.denominator != 1:
		raise Impossible(f"ratio {generator} does not divide n = {n}")
	return n, int(abs_m)


def forced_signed_index(l: int, r: int, group: BsPresentation) -> int:
	"""The sign of L(g) is forced by r/L lying in (n/m)^Z, unless n = |m|."""
	options = [L for L in (l, -l) if in_ratio_group(Fraction(r, L), group)]
	if len(options) != 1:
		raise Impossible(f"dimensions ({l}, {r}) do not force a signed index in {group}")
	return options[0]


def w_relation(w: RootOfUnity, u: RootOfUnity, g: NormalForm, group: BsPresentation) -> bool:
	for root in (w, u):
		if not omega_member(root, group):
			raise Impossible(f"{root} has order outside the root group of {group}")
	profile = coset_profile(g, group)
	return w ** profile.r == u ** profile.L


def _verify_witness(witness: SignWitness, group: BsPresentation) -> None:
	n0, m0 = group.n0, group.m0
	checks = {
		"|n0^t m0^t| > 2": abs(n0 ** witness.t * m0 ** witness.t) > 2,
		"omega^n = mu^m": witness.omega ** group.n == witness.mu ** group.m,
		"mu^2m != 1": not (witness.mu ** (2 * group.m)).is_trivial,
		"omega in the root group": omega_member(witness.omega, group),
		"mu in the root group": omega_member(witness.mu, group),
	}
	failed = [name for name, passed in checks.items() if not passed]
	if failed:
		raise VerificationFailed(f"sign witness for {group} fails: {', '.join(failed)}")


def sign_witness(n: int, m: int) -> SignWitness:
	group = BsPresentation(n, m)
	group.require_standing_hypothesis("a sign witness")
	if n == abs(m):
		raise Impossible(f"no sign witness exists for n = |m|, got {group}")
	k, n0, abs_m0 = group.k, group.n0, abs(group.m0)
	sign = 1 if group.m0 > 0 else -1

	t = next(t for t in itertools.count(1) if n0 ** t * abs_m0 ** t > 2)
	omega = RootOfUnity.from_angle(Fraction(1, k * n0 ** (t + 1) * abs_m0 ** t))
	mu = RootOfUnity.from_angle(Fraction(sign, k * n0 ** t * abs_m0 ** (t + 1)))
	witness = SignWitness(t, omega, mu)
	_verify_witness(witness, group)
	return witness


def _require_chamber(n: int, m: int) -> BsPresentation:
	_require_nonzero(n, m)
	group = BsPresentation(n, m)
	if not group.standing_hypothesis:
		raise Impossible(f"{group} is outside 2 <= n <= |m|, canonicalize it first")
	return group


def theorem_b_obstruction(n1: int, m1: int, n2: int, m2: int) -> RigidityVerdict:
	first = _require_chamber(n1, m1)
	second = _require_chamber(n2, m2)
	if n1 != n2:
		return RigidityVerdict(Verdict.N_MISMATCH)
	if abs(m1) != abs(m2):
		return RigidityVerdict(Verdict.ABS_M_MISMATCH)
	if n1 == abs(m1) or m1 == m2:
		return RigidityVerdict(Verdict.NO_OBSTRUCTION)

	witness = sign_witness(n1, m1)
	# b^-1 has dimensions (|m|, n) on both sides, but its signed index differs
	profile = coset_profile(LETTER_B_INVERSE, first)
	forced = forced_signed_index(profile.l, profile.r, second)
	if forced != m2 or forced == profile.L:
		raise VerificationFailed(f"signed index of b^-1 is not separated between {first} and {second}")
	if not w_relation(witness.omega, witness.mu, LETTER_B_INVERSE, first):
		raise VerificationFailed(f"witness pair does not satisfy the exchange relation in {first}")
	if w_relation(witness.omega, witness.mu, LETTER_B_INVERSE, second):
		raise VerificationFailed(f"witness pair does not separate {first} from {second}")
	return RigidityVerdict(Verdict.SIGN_MISMATCH, witness)


def dimension_spectrum(group: BsPresentation, max_b_length: int) -> Set[Tuple[int, int]]:
	if max_b_length < 0:
		raise Impossible(f"b-length bound must be nonnegative, got {max_b_length}")
	spectrum: Set[Tuple[int, int]] = set()
	for length in range(max_b_length + 1):
		for signs in itertools.product((1, -1), repeat=length):
			prefix = []
			realisable = True
			for index, sign in enumerate(signs):
				backtrack = index > 0 and signs[index - 1] == -sign
				room = group.abs_m if sign == 1 else group.abs_n
				if backtrack and room < 2:
					realisable = False
					break
				# a nonzero a-power keeps b a^s b^-1 from pinching
				prefix.append((1 if backtrack else 0, sign))
			if realisable:
				profile = coset_profile(NormalForm(tuple(prefix), 0), group)
				spectrum.add((profile.l, profile.r))
	return spectrum
