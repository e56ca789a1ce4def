from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union

from sympy import multiplicity, primefactors

from exceptions import Impossible, VerificationFailed
from group_core import BsPresentation, NormalForm, a_power, invert, product
from hecke import DoubleCoset, HeckeElement, coset_profile, double_coset


@dataclass(frozen=True)
class RootOfUnity:
	num: int
	den: int

	def __post_init__(self) -> None:
		if self.den <= 0 or not 0 <= self.num < self.den or math.gcd(self.num, self.den) != 1:
			raise Impossible(f"{self.num}/{self.den} is not a reduced angle in [0, 1)")

	@classmethod
	def from_angle(cls, angle: Union[Fraction, int]) -> RootOfUnity:
		angle = Fraction(angle) % 1
		return cls(angle.numerator, angle.denominator)

	@classmethod
	def parse(cls, text: str) -> RootOfUnity:
		# "p/q" or a bare integer, read mod 1
		try:
			return cls.from_angle(Fraction(text.strip()))
		except (ValueError, ZeroDivisionError):
			raise Impossible(f"{text!r} is not a root of unity angle p/q")

	@property
	def angle(self) -> Fraction:
		return Fraction(self.num, self.den)

	@property
	def is_trivial(self) -> bool:
		return self.num == 0

	def __mul__(self, other: RootOfUnity) -> RootOfUnity:
		return RootOfUnity.from_angle(self.angle + other.angle)

	def __pow__(self, exponent: int) -> RootOfUnity:
		return RootOfUnity.from_angle(self.angle * exponent)

	def inverse(self) -> RootOfUnity:
		return RootOfUnity.from_angle(-self.angle)

	def __str__(self) -> str:
		return f"{self.num}/{self.den}"


TRIVIAL_ROOT = RootOfUnity(0, 1)


@dataclass(frozen=True)
class Irreducible:
	kind: Union[DoubleCoset, RootOfUnity]

	@classmethod
	def of_coset(cls, coset: DoubleCoset) -> Irreducible:
		# K_e and K_1 are the same bimodule, spelled as the trivial character
		if coset.is_unit:
			return cls(TRIVIAL_ROOT)
		return cls(coset)

	@classmethod
	def of_char(cls, root: RootOfUnity) -> Irreducible:
		return cls(root)

	@property
	def is_char(self) -> bool:
		return isinstance(self.kind, RootOfUnity)

	@property
	def left_dim(self) -> int:
		return 1 if self.is_char else self.kind.profile.l

	@property
	def right_dim(self) -> int:
		return 1 if self.is_char else self.kind.profile.r

	def sort_key(self):
		if self.is_char:
			return (0, self.kind.angle, ())
		return (1, Fraction(0), self.kind.sort_key())

	def to_json(self) -> Dict[str, object]:
		if self.is_char:
			return {"char": str(self.kind)}
		return {"coset": str(self.kind), "l": self.left_dim, "r": self.right_dim}

	def __str__(self) -> str:
		if self.is_char:
			return f"Char({self.kind})"
		return f"Coset({self.kind})"


@dataclass(frozen=True)
class BimoduleSum:
	terms: Tuple[Irreducible, ...] = ()

	@classmethod
	def of(cls, terms: Iterable[Irreducible]) -> BimoduleSum:
		return cls(tuple(sorted(terms, key=Irreducible.sort_key)))

	@property
	def left_dim(self) -> int:
		return sum(term.left_dim for term in self.terms)

	@property
	def right_dim(self) -> int:
		return sum(term.right_dim for term in self.terms)

	def __len__(self) -> int:
		return len(self.terms)

	def to_json(self) -> List[Dict[str, object]]:
		return [term.to_json() for term in self.terms]

	def __str__(self) -> str:
		return " + ".join(str(term) for term in self.terms) if self.terms else "0"


def omega_member(root: RootOfUnity, group: BsPresentation) -> bool:
	group.require_standing_hypothesis("the root group")
	residue = root.den
	for prime in primefactors(group.n0 * abs(group.m0)):
		residue //= prime ** multiplicity(prime, residue)
	return group.k % residue == 0


def char_of(g: NormalForm, group: BsPresentation) -> RootOfUnity:
	return RootOfUnity.from_angle(Fraction(1, coset_profile(g, group).r))


def isomorphic(x: Irreducible, y: Irreducible, group: BsPresentation) -> bool:
	x_kind = TRIVIAL_ROOT if not x.is_char and x.kind.is_unit else x.kind
	y_kind = TRIVIAL_ROOT if not y.is_char and y.kind.is_unit else y.kind
	if isinstance(x_kind, RootOfUnity) or isinstance(y_kind, RootOfUnity):
		return x_kind == y_kind
	return double_coset(x_kind.representative, group) == double_coset(y_kind.representative, group)


def tensor_dims(x: BimoduleSum, y: BimoduleSum) -> Tuple[int, int]:
	return x.left_dim * y.left_dim, x.right_dim * y.right_dim


def decompose_self_inverse(g: NormalForm, group: BsPresentation) -> BimoduleSum:
	"""K_g (x) K_g^-1 as r(g) characters plus the l(g) - 1 cosets of g a^i g^-1."""
	group.require_standing_hypothesis("the self-inverse decomposition")
	profile = coset_profile(g, group)
	omega = char_of(g, group)
	g_inverse = invert(g, group)
	terms = [Irreducible.of_char(omega ** i) for i in range(profile.r)]
	terms.extend(
		Irreducible.of_coset(double_coset(product(group, g, a_power(i), g_inverse), group))
		for i in range(1, profile.l)
	)
	result = BimoduleSum.of(terms)
	expected = profile.l * profile.r
	# some g a^i g^-1 can collapse to a smaller r, the sum then misses part of K_g (x) K_g^-1
	if result.left_dim != expected or result.right_dim != expected:
		raise Impossible(
			f"terms for {g} have dimensions ({result.left_dim}, {result.right_dim}), "
			f"not l(g) r(g) = {expected}; the self-inverse formula does not cover it"
		)
	return result


def exchange_partners(root: RootOfUnity, g: NormalForm, group: BsPresentation) -> Tuple[RootOfUnity, ...]:
	"""All mu in the root group with mu^L(g) = root^r(g), in increasing angle."""
	if not omega_member(root, group):
		raise Impossible(f"{root} has order outside the root group of {group}")
	profile = coset_profile(g, group)
	target = root.angle * profile.r
	sign = 1 if profile.L > 0 else -1
	candidates = {
		RootOfUnity.from_angle(sign * (target + shift) / profile.l)
		for shift in range(profile.l)
	}
	return tuple(sorted((mu for mu in candidates if omega_member(mu, group)), key=lambda mu: mu.angle))


def char_product(w: RootOfUnity, u: RootOfUnity) -> RootOfUnity:
	return w * u


def coset_shadow(bimodule: BimoduleSum, group: BsPresentation) -> HeckeElement:
	unit = double_coset(NormalForm(), group)
	counts: Dict[DoubleCoset, int] = {}
	for term in bimodule.terms:
		coset = unit if term.is_char else term.kind
		counts[coset] = counts.get(coset, 0) + 1
	return HeckeElement.from_mapping(counts)


def twisted_dims(root: RootOfUnity, g: NormalForm, group: BsPresentation) -> Tuple[int, int]:
	twist = BimoduleSum.of([Irreducible.of_char(root)])
	coset = BimoduleSum.of([Irreducible.of_coset(double_coset(g, group))])
	left_twisted = tensor_dims(twist, coset)
	right_twisted = tensor_dims(coset, twist)
	if left_twisted != right_twisted:
		raise VerificationFailed(f"K_w (x) K_g and K_g (x) K_w differ in dimension for {g}")
	return left_twisted


def l2_decomposition(gs: Iterable[NormalForm], group: BsPresentation) -> List[Irreducible]:
	seen = {Irreducible.of_coset(double_coset(g, group)) for g in gs}
	return sorted(seen, key=Irreducible.sort_key)
