from __future__ import annotations

from fractions import Fraction
from typing import List, Optional

import numpy as np

from bass_serre import Hyperbolic, classify
from exceptions import Impossible
from fusion import RootOfUnity
from group_core import BsPresentation, GroupWord, NormalForm, Syllable, a_power, conjugate, normalize


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
	return np.random.default_rng(seed)


def _exponent(rng: np.random.Generator, max_exponent: int) -> int:
	# numpy ints are fixed width, exponents leave as Python ints
	return int(rng.integers(-max_exponent, max_exponent + 1))


def random_word(rng: np.random.Generator, max_b_length: int, max_exponent: int) -> GroupWord:
	"""a^x0 b^e1 a^x1 ... b^ek a^xk with k <= max_b_length."""
	syllables: List[Syllable] = []
	for _ in range(int(rng.integers(0, max_b_length + 1))):
		syllables.append(("a", _exponent(rng, max_exponent)))
		syllables.append(("b", 1 if rng.random() < 0.5 else -1))
	syllables.append(("a", _exponent(rng, max_exponent)))
	return GroupWord.from_syllables(syllables)


def relator(group: BsPresentation) -> GroupWord:
	return GroupWord.from_syllables([("b", 1), ("a", group.n), ("b", -1), ("a", -group.m)])


def insert_relator(word: GroupWord, rng: np.random.Generator, group: BsPresentation) -> GroupWord:
	r = relator(group)
	if rng.random() < 0.5:
		r = r.inverse()
	shift = GroupWord.from_syllables([("a", _exponent(rng, 3))])
	r = shift * r * shift.inverse()
	cut = int(rng.integers(0, len(word.syllables) + 1))
	head = GroupWord.from_syllables(word.syllables[:cut])
	tail = GroupWord.from_syllables(word.syllables[cut:])
	return head * r * tail


def random_element(
	rng: np.random.Generator,
	group: BsPresentation,
	max_b_length: int = 4,
	max_exponent: int = 12,
) -> NormalForm:
	return normalize(random_word(rng, max_b_length, max_exponent), group)


def random_elliptic(
	rng: np.random.Generator,
	group: BsPresentation,
	max_b_length: int = 3,
	max_exponent: int = 12,
) -> NormalForm:
	h = random_element(rng, group, max_b_length, max_exponent)
	z = _exponent(rng, max_exponent) or 1
	return conjugate(a_power(z), h, group)


def random_hyperbolic(
	rng: np.random.Generator,
	group: BsPresentation,
	max_b_length: int = 4,
	max_exponent: int = 12,
	attempts: int = 200,
) -> NormalForm:
	for _ in range(attempts):
		g = random_element(rng, group, max_b_length, max_exponent)
		if isinstance(classify(g, group), Hyperbolic):
			return g
	raise Impossible(f"no hyperbolic element drawn in {attempts} attempts")


def random_root(rng: np.random.Generator, group: BsPresentation, max_power: int = 3) -> RootOfUnity:
	group.require_standing_hypothesis("the root group")
	s = int(rng.integers(0, max_power + 1))
	t = int(rng.integers(0, max_power + 1))
	den = group.k * group.n0 ** s * abs(group.m0) ** t
	return RootOfUnity.from_angle(Fraction(int(rng.integers(0, den)), den))
