from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Set, Tuple

from sympy import ilcm

from exceptions import Impossible, VerificationFailed
from group_core import (
	BsPresentation,
	GroupWord,
	IDENTITY,
	LETTER_B,
	NormalForm,
	a_power,
	invert,
	multiply,
	product,
)


@dataclass(frozen=True)
class CosetProfile:
	"""(l, r, L) for one element: g a^L g^-1 = a^r with |L| = l."""

	l: int
	r: int
	L: int

	def to_json(self) -> Dict[str, int]:
		return {"l": self.l, "r": self.r, "L": self.L}


UNIT_PROFILE = CosetProfile(1, 1, 1)


@lru_cache(maxsize=4096)
def coset_profile(g: NormalForm, group: BsPresentation) -> CosetProfile:
	# A counts the a-exponent fed in, E the a-exponent that comes out on the left
	A, E = 1, 1
	for _, sign in reversed(g.prefix):
		if sign == 1:
			j = group.abs_n // math.gcd(group.abs_n, E)
			A *= j
			E = (E * j // group.n) * group.m
		else:
			j = group.abs_m // math.gcd(group.abs_m, E)
			A *= j
			E = (E * j // group.m) * group.n
	return CosetProfile(A, abs(E), A if E > 0 else -A)


def verify_profile(g: NormalForm, profile: CosetProfile, group: BsPresentation) -> bool:
	conjugated = product(group, g, a_power(profile.L), invert(g, group))
	return conjugated == a_power(profile.r)


def _strip(z: int, factor: int) -> Tuple[int, int]:
	count = 0
	if factor > 1:
		while z % factor == 0:
			z //= factor
			count += 1
	return z, count


def f_set_member(z: int, group: BsPresentation) -> bool:
	"""z in {k n0^s |m0|^t : s + t > 0}."""
	group.require_standing_hypothesis("the l-value set")
	if z <= 0:
		raise Impossible(f"l-values are positive, got {z}")
	if z % group.k:
		return False
	rest, s = _strip(z // group.k, group.n0)
	rest, t = _strip(rest, abs(group.m0))
	if rest != 1:
		return False
	# with n0 = 1 or |m0| = 1 the exponent of the trivial factor is free
	return s + t > 0 or group.n0 == 1 or abs(group.m0) == 1


def f_set(depth: int, group: BsPresentation) -> Set[int]:
	group.require_standing_hypothesis("the l-value set")
	if depth < 0:
		raise Impossible(f"depth must be nonnegative, got {depth}")
	return {
		group.k * group.n0 ** s * abs(group.m0) ** t
		for s in range(depth + 1)
		for t in range(depth + 1 - s)
		if s + t > 0
	}


@dataclass(frozen=True)
class DoubleCoset:
	"""<a> g <a>, held by its least tail-free representative."""

	representative: NormalForm
	profile: CosetProfile

	@property
	def is_unit(self) -> bool:
		return self.representative.is_identity

	def sort_key(self):
		return self.representative.sort_key()

	def __str__(self) -> str:
		return str(self.representative)


def left_translates(g: NormalForm, group: BsPresentation) -> Iterator[NormalForm]:
	# the r(g) left cosets a^i g<a> making up <a> g <a>
	for i in range(coset_profile(g, group).r):
		yield multiply(a_power(i), g, group).drop_tail()


@lru_cache(maxsize=4096)
def double_coset(g: NormalForm, group: BsPresentation) -> DoubleCoset:
	representative = min(left_translates(g, group), key=NormalForm.sort_key)
	return DoubleCoset(representative, coset_profile(g, group))


def same_double_coset(g: NormalForm, h: NormalForm, group: BsPresentation) -> bool:
	return double_coset(g, group) == double_coset(h, group)


def centralizes(g: NormalForm, z: int, group: BsPresentation) -> bool:
	if z == 0:
		raise Impossible("centralizer of a^0 is the whole group")
	commutator = product(group, g, a_power(z), invert(g, group), a_power(-z))
	return commutator.is_identity


def qc_member(g: NormalForm, group: BsPresentation) -> bool:
	profile = coset_profile(g, group)
	return profile.L == profile.l and profile.r == profile.l


def lcm_l_values(gs: Iterable[NormalForm], group: BsPresentation) -> int:
	values = [coset_profile(g, group).l for g in gs]
	if not values:
		raise Impossible("lcm of an empty set of l-values")
	result = 1
	for value in values:
		result = ilcm(result, value)
	return int(result)


def signed_ratio(g: NormalForm, group: BsPresentation) -> Fraction:
	profile = coset_profile(g, group)
	return Fraction(profile.r, profile.L)


def in_ratio_group(q: Fraction, group: BsPresentation) -> bool:
	base = Fraction(group.n, group.m)
	if abs(base) == 1:
		return q == 1 or q == base
	step = base if abs(base) > 1 else 1 / base
	x = Fraction(q)
	while abs(x) > 1:
		x /= step
	if abs(x) == 1:
		return x == 1
	while abs(x) < 1:
		x *= step
	return x == 1


def amalgam_embed(word: GroupWord, group: BsPresentation) -> GroupWord:
	# c -> a, d -> b^-1 a b
	group.require_standing_hypothesis("the amalgam embedding")
	if group.abs_m == 2:
		raise Impossible(f"the amalgam embedding needs |m| != 2, got {group}")
	syllables: List[Tuple[str, int]] = []
	for letter, exponent in word.syllables:
		if letter == "c":
			syllables.append(("a", exponent))
		elif letter == "d":
			syllables.extend([("b", -1), ("a", exponent), ("b", 1)])
		else:
			raise Impossible(f"letter {letter!r} outside {{c, d}}")
	return GroupWord.from_syllables(syllables)


def free_pair_embed(word: GroupWord, group: BsPresentation) -> GroupWord:
	# x -> b, y -> a b a^-1
	if group.abs_n < 2 or group.abs_m < 2:
		raise Impossible(f"<b, aba^-1> is free only when |n|, |m| >= 2, got {group}")
	syllables: List[Tuple[str, int]] = []
	for letter, exponent in word.syllables:
		if letter == "x":
			syllables.append(("b", exponent))
		elif letter == "y":
			syllables.extend([("a", 1), ("b", exponent), ("a", -1)])
		else:
			raise Impossible(f"letter {letter!r} outside {{x, y}}")
	return GroupWord.from_syllables(syllables)


def index_two_split(g: NormalForm, group: BsPresentation) -> NormalForm:
	# BS(2,-2) is C u Cb for C the centralizer of <a^2>
	if (group.n, group.m) != (2, -2):
		raise Impossible(f"the index two split is specific to BS(2,-2), got {group}")
	shifted = multiply(g, LETTER_B, group)
	g_centralizes = centralizes(g, 2, group)
	if g_centralizes == centralizes(shifted, 2, group):
		raise VerificationFailed(f"expected exactly one of {g} and {shifted} to centralize a^2")
	return g if g_centralizes else shifted


@dataclass(frozen=True)
class HeckeElement:
	terms: Tuple[Tuple[DoubleCoset, int], ...] = ()

	@classmethod
	def from_mapping(cls, coefficients: Dict[DoubleCoset, int]) -> HeckeElement:
		kept = [(coset, coeff) for coset, coeff in coefficients.items() if coeff != 0]
		kept.sort(key=lambda term: term[0].sort_key())
		return cls(tuple(kept))

	@classmethod
	def basis(cls, g: NormalForm, group: BsPresentation) -> HeckeElement:
		return cls(((double_coset(g, group), 1),))

	@classmethod
	def unit(cls, group: BsPresentation) -> HeckeElement:
		return cls.basis(IDENTITY, group)

	@property
	def coefficients(self) -> Dict[DoubleCoset, int]:
		return dict(self.terms)

	def __add__(self, other: HeckeElement) -> HeckeElement:
		total = self.coefficients
		for coset, coeff in other.terms:
			total[coset] = total.get(coset, 0) + coeff
		return HeckeElement.from_mapping(total)

	def scale(self, factor: int) -> HeckeElement:
		return HeckeElement.from_mapping({coset: coeff * factor for coset, coeff in self.terms})

	def to_json(self) -> List[Dict[str, object]]:
		return [{"coset": str(coset), "coeff": coeff} for coset, coeff in self.terms]

	def __str__(self) -> str:
		if not self.terms:
			return "0"
		return " + ".join(f"{coeff}*T[{coset}]" for coset, coeff in self.terms)


def _basis_product(D: DoubleCoset, E: DoubleCoset, group: BsPresentation) -> Dict[DoubleCoset, int]:
	d, e = D.representative, E.representative
	d_inverse = invert(d, group)
	support = {double_coset(product(group, d, a_power(j), e), group) for j in range(D.profile.l)}
	coefficients: Dict[DoubleCoset, int] = {}
	for F in support:
		f = F.representative
		# left cosets a^i d<a> of D whose inverse carries f into E
		coefficients[F] = sum(
			1
			for i in range(D.profile.r)
			if double_coset(product(group, d_inverse, a_power(-i), f), group) == E
		)
	return coefficients


def hecke_convolve(x: HeckeElement, y: HeckeElement, group: BsPresentation) -> HeckeElement:
	total: Dict[DoubleCoset, int] = {}
	for D, x_coeff in x.terms:
		for E, y_coeff in y.terms:
			for F, c in _basis_product(D, E, group).items():
				total[F] = total.get(F, 0) + x_coeff * y_coeff * c
	return HeckeElement.from_mapping(total)
