from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, TYPE_CHECKING

import numpy as np

import color
from exceptions import Impossible, VerificationFailed
import oracles
import procgen
from bass_serre import (
	BASE_VERTEX,
	Elliptic,
	Hyperbolic,
	ball,
	classify,
	common_fixed_vertex,
	fixes_vertex,
	power_classify_consistency,
)
from fusion import (
	BimoduleSum,
	Irreducible,
	RootOfUnity,
	decompose_self_inverse,
	exchange_partners,
	isomorphic,
)
from group_core import (
	LETTER_B,
	LETTER_B_INVERSE,
	BsPresentation,
	abelianization_image,
	element,
	invert,
	multiply,
	normalize,
	power,
)
from hecke import coset_profile, double_coset, f_set_member, index_two_split, qc_member, verify_profile
from rigidity import Verdict, canonicalize, is_isomorphic, sign_witness, theorem_b_obstruction

if TYPE_CHECKING:
	from message_log import MessageLog

CHAMBER = [(n, m) for n in range(2, 7) for abs_m in range(n, 7) for m in (abs_m, -abs_m)]
PARAMETERS = [p for p in range(-6, 7) if p != 0]


@dataclass
class CheckResult:
	name: str
	passed: bool
	detail: str = ""


@dataclass
class SelftestReport:
	results: List[CheckResult] = field(default_factory=list)

	@property
	def passed(self) -> int:
		return sum(1 for result in self.results if result.passed)

	@property
	def failed(self) -> int:
		return len(self.results) - self.passed

	def to_json(self) -> Dict[str, object]:
		return {
			"passed": self.passed,
			"failed": self.failed,
			"checks": [
				{"name": result.name, "passed": result.passed, "detail": result.detail}
				for result in self.results
			],
		}


def check_word_problem(rng: np.random.Generator, samples: int) -> Optional[str]:
	for n, m in [(2, 3), (2, -2), (3, 6), (1, 2)]:
		group = BsPresentation(n, m)
		for _ in range(samples):
			word = procgen.random_word(rng, 6, 10 ** 6)
			form = normalize(word, group)
			if normalize(form.to_word(), group) != form:
				return f"{group}: normal form of {word} is not idempotent"
			signs, a_sum = oracles.reduced_signature(word, group, rng)
			if signs != tuple(sign for _, sign in form.prefix):
				return f"{group}: b-signs of {word} disagree with the pinch oracle"
			if not signs and a_sum != form.tail:
				return f"{group}: a-exponent of {word} disagrees with the pinch oracle"
			if abelianization_image(word, group) != abelianization_image(form.to_word(), group):
				return f"{group}: {word} changes its abelian image under reduction"
			if normalize(procgen.insert_relator(word, rng, group), group) != form:
				return f"{group}: inserting a relator into {word} changed the element"
	return None


def check_profiles(rng: np.random.Generator, samples: int) -> Optional[str]:
	for n, m in CHAMBER:
		group = BsPresentation(n, m)
		sign = 1 if m > 0 else -1
		if coset_profile(LETTER_B, group).to_json() != {"l": n, "r": abs(m), "L": sign * n}:
			return f"{group}: wrong profile for b"
		if coset_profile(LETTER_B_INVERSE, group).to_json() != {"l": abs(m), "r": n, "L": m}:
			return f"{group}: wrong profile for b^-1"
	group = BsPresentation(2, 3)
	for _ in range(samples):
		g = procgen.random_element(rng, group, 4, 20)
		profile = coset_profile(g, group)
		if profile.l != coset_profile(invert(g, group), group).r:
			return f"l({g}) != r of its inverse"
		if not verify_profile(g, profile, group):
			return f"profile {profile} of {g} fails g a^L g^-1 = a^r"
	return None


def check_l_values(rng: np.random.Generator, samples: int) -> Optional[str]:
	group = BsPresentation(2, 3)
	values = {coset_profile(g, group).l for g in oracles.normal_form_prefixes(group, 4)}
	stray = sorted(v for v in values if v != 1 and not f_set_member(v, group))
	if stray:
		return f"l-values {stray} fall outside the l-value set"
	missing = {1, 2, 3, 4, 6, 9} - values
	if missing:
		return f"l-values {sorted(missing)} never appear"
	return None


def check_self_inverse(rng: np.random.Generator, samples: int) -> Optional[str]:
	for group in (BsPresentation(2, 3), BsPresentation(2, -3)):
		covered = 0
		for _ in range(samples):
			g = procgen.random_element(rng, group, 2, 12)
			try:
				decomposition = decompose_self_inverse(g, group)
			except Impossible:
				continue
			covered += 1
			profile = coset_profile(g, group)
			if decomposition.left_dim != profile.l * profile.r or decomposition.right_dim != profile.l * profile.r:
				return f"{group}: dimensions of the decomposition of {g} are off"
			terms = decomposition.terms
			for i, x in enumerate(terms):
				if any(isomorphic(x, y, group) for y in terms[i + 1:]):
					return f"{group}: decomposition of {g} repeats {x}"
		if not covered:
			return f"{group}: no sampled element is covered by the self-inverse formula"
	group = BsPresentation(2, 3)
	expected = BimoduleSum.of([
		Irreducible.of_char(RootOfUnity(0, 1)),
		Irreducible.of_char(RootOfUnity(1, 3)),
		Irreducible.of_char(RootOfUnity(2, 3)),
		Irreducible.of_coset(double_coset(element("b a B", group), group)),
	])
	if decompose_self_inverse(LETTER_B, group) != expected:
		return "decomposition of b in BS(2,3) differs from the known four terms"
	return None


def check_exchange(rng: np.random.Generator, samples: int) -> Optional[str]:
	group = BsPresentation(2, 3)
	max_den = 216
	for _ in range(samples):
		root = procgen.random_root(rng, group, 2)
		g = procgen.random_element(rng, group, 2, 6)
		fast = {mu for mu in exchange_partners(root, g, group) if mu.den <= max_den}
		if fast != oracles.brute_exchange(root, g, group, max_den):
			return f"exchange partners of ({root}, {g}) disagree with enumeration"
	return None


def _expected_verdict(n1: int, m1: int, n2: int, m2: int) -> Verdict:
	if n1 != n2:
		return Verdict.N_MISMATCH
	if abs(m1) != abs(m2):
		return Verdict.ABS_M_MISMATCH
	if n1 != abs(m1) and m1 != m2:
		return Verdict.SIGN_MISMATCH
	return Verdict.NO_OBSTRUCTION


def check_rigidity(rng: np.random.Generator, samples: int) -> Optional[str]:
	for first in CHAMBER:
		for second in CHAMBER:
			if theorem_b_obstruction(*first, *second).verdict is not _expected_verdict(*first, *second):
				return f"verdict for {first} vs {second} is wrong"
	verdict = theorem_b_obstruction(2, 3, 2, -3)
	if verdict.witness != sign_witness(2, 3) or verdict.witness.to_json() != {"t": 1, "omega": "1/12", "mu": "1/18"}:
		return "witness for (2,3) vs (2,-3) is not t=1, 1/12, 1/18"
	if theorem_b_obstruction(2, 2, 2, -2).verdict is not Verdict.NO_OBSTRUCTION:
		return "(2,2) vs (2,-2) should carry no obstruction"
	return None


def check_isomorphism(rng: np.random.Generator, samples: int) -> Optional[str]:
	for n1 in PARAMETERS:
		for m1 in PARAMETERS:
			canonical = canonicalize(n1, m1)
			if canonicalize(*canonical) != canonical:
				return f"canonicalize is not idempotent on ({n1},{m1})"
			for n2 in PARAMETERS:
				for m2 in PARAMETERS:
					if is_isomorphic(n1, m1, n2, m2) != (canonical == canonicalize(n2, m2)):
						return f"isomorphism test disagrees with canonical forms on ({n1},{m1}), ({n2},{m2})"
	return None


def check_tree(rng: np.random.Generator, samples: int) -> Optional[str]:
	group = BsPresentation(2, 3)
	if classify(LETTER_B, group) != Hyperbolic(1):
		return "b should be hyperbolic of translation length 1"
	if classify(element("b a B", group), group) != Elliptic(LETTER_B):
		return "b a b^-1 should be elliptic with witness b"
	if len(ball(BASE_VERTEX, 1, group)) != 1 + group.abs_n + group.abs_m:
		return "radius one ball has the wrong size"
	for _ in range(samples):
		g = procgen.random_hyperbolic(rng, group)
		for z in (-3, -2, -1, 1, 2, 3):
			if not power_classify_consistency(g, z, group):
				return f"{g}^{z} is not hyperbolic"
	for _ in range(samples):
		h = procgen.random_elliptic(rng, group, 2, 6)
		g = procgen.random_elliptic(rng, group, 2, 6)
		if isinstance(classify(multiply(h, g, group), group), Hyperbolic):
			continue
		found = common_fixed_vertex([h, g], group, 8)
		if found is None or not all(fixes_vertex(x, found[0], group) for x in (h, g)):
			return f"no common fixed vertex for {h} and {g} within radius 8"
	return None


def check_quasi_centralizer(rng: np.random.Generator, samples: int) -> Optional[str]:
	group = BsPresentation(2, -2)
	if qc_member(LETTER_B, group) or not qc_member(power(LETTER_B, 2, group), group):
		return "BS(2,-2): expected b outside and b^2 inside the quasi-centralizer"
	members = []
	for _ in range(samples):
		g = procgen.random_element(rng, group, 4, 8)
		if qc_member(g, group):
			members.append(g)
		try:
			index_two_split(g, group)
		except VerificationFailed as exc:
			return str(exc)
	for g in members[:10]:
		for h in members[:10]:
			if not qc_member(multiply(g, invert(h, group), group), group):
				return f"quasi-centralizer not closed under {g} * ({h})^-1"
	for g in members[:10]:
		conjugate_by = procgen.random_element(rng, group, 2, 4)
		if not qc_member(multiply(multiply(invert(conjugate_by, group), g, group), conjugate_by, group), group):
			return f"quasi-centralizer not normal at {g}"
	return None


CHECKS: Dict[str, Callable[[np.random.Generator, int], Optional[str]]] = {
	"word problem": check_word_problem,
	"coset profiles": check_profiles,
	"l-value set": check_l_values,
	"self-inverse fusion": check_self_inverse,
	"exchange criterion": check_exchange,
	"rigidity matrix": check_rigidity,
	"isomorphism criterion": check_isomorphism,
	"tree action": check_tree,
	"quasi-centralizer": check_quasi_centralizer,
}

# draws per check at --samples 100; the exhaustive checks ignore the count
FULL_SAMPLES: Dict[str, int] = {
	"word problem": 10_000,
	"coset profiles": 1_000,
	"l-value set": 1,
	"self-inverse fusion": 100,
	"exchange criterion": 50,
	"rigidity matrix": 1,
	"isomorphism criterion": 1,
	"tree action": 100,
	"quasi-centralizer": 100,
}


def scaled_samples(name: str, percent: int) -> int:
	return max(1, FULL_SAMPLES[name] * percent // 100)


def run_selftest(percent: int = 100, seed: int = 0, log: Optional[MessageLog] = None) -> SelftestReport:
	rng = procgen.make_rng(seed)
	report = SelftestReport()
	for name, check in CHECKS.items():
		problem = check(rng, scaled_samples(name, percent))
		report.results.append(CheckResult(name, problem is None, problem or ""))
		if log is not None:
			if problem is None:
				log.add_message(f"{name}: ok", color.verified)
			else:
				log.add_message(f"{name}: {problem}", color.failed)
	return report
