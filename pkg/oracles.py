"""
Slow, independently written references the fast code is checked against.
The pinch reducer never touches the right-pushed normal form; the searches below
use it only to decide the word problem.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterator, List, Optional, Set, Tuple

import numpy as np

from fusion import RootOfUnity, omega_member
from group_core import BsPresentation, GroupWord, NormalForm, a_power, invert, product
from hecke import CosetProfile


def _pinch_sites(syllables: List[Tuple[str, int]], group: BsPresentation) -> List[int]:
	# index of the opening b-letter of every b^e a^t b^-e (or b^e b^-e) that collapses
	sites = []
	for i, (letter, exponent) in enumerate(syllables):
		if letter != "b":
			continue
		if i + 1 < len(syllables) and syllables[i + 1][0] == "b" and syllables[i + 1][1] == -exponent:
			sites.append(i)
		elif i + 2 < len(syllables) and syllables[i + 1][0] == "a" and syllables[i + 2] == ("b", -exponent):
			t = syllables[i + 1][1]
			if t % (group.n if exponent == 1 else group.m) == 0:
				sites.append(i)
	return sites


def britton_reduce(word: GroupWord, group: BsPresentation, rng: np.random.Generator) -> GroupWord:
	# spell b-powers as single letters so every pinch is visible
	syllables: List[Tuple[str, int]] = []
	for letter, exponent in word.syllables:
		if letter == "b":
			syllables.extend([("b", 1 if exponent > 0 else -1)] * abs(exponent))
		else:
			syllables.append((letter, exponent))

	while True:
		sites = _pinch_sites(syllables, group)
		if not sites:
			return GroupWord(tuple(syllables))
		i = sites[int(rng.integers(0, len(sites)))]
		sign = syllables[i][1]
		if syllables[i + 1][0] == "b":
			replacement, end = [], i + 2
		else:
			t = syllables[i + 1][1]
			replacement = [("a", t // group.n * group.m if sign == 1 else t // group.m * group.n)]
			end = i + 3
		# keep b letters separate, merge only the a syllables around the cut
		merged = syllables[:i] + replacement + syllables[end:]
		syllables = []
		for letter, exponent in merged:
			if letter == "a" and syllables and syllables[-1][0] == "a":
				total = syllables[-1][1] + exponent
				syllables.pop()
				if total:
					syllables.append(("a", total))
			elif exponent:
				syllables.append((letter, exponent))


def reduced_signature(word: GroupWord, group: BsPresentation, rng: np.random.Generator) -> Tuple[Tuple[int, ...], Optional[int]]:
	"""
	The b-sign sequence of any reduced spelling, plus the a-exponent when that sequence
	is empty. Both are invariants of the element.
	"""
	reduced = britton_reduce(word, group, rng)
	signs = tuple(exponent for letter, exponent in reduced.syllables if letter == "b")
	if signs:
		return signs, None
	return signs, reduced.letter_sum("a")


def words_equal(u: GroupWord, v: GroupWord, group: BsPresentation, rng: np.random.Generator) -> bool:
	signs, a_sum = reduced_signature(u * v.inverse(), group, rng)
	return not signs and a_sum == 0


def brute_profile(g: NormalForm, group: BsPresentation, bound: int = 10_000) -> CosetProfile:
	"""Smallest |L| with g a^L g^-1 a power of a, found by trying L = 1, -1, 2, -2, ..."""
	# uses the word problem, but not the profile recursion
	g_inverse = invert(g, group)
	for size in range(1, bound + 1):
		for L in (size, -size):
			image = product(group, g, a_power(L), g_inverse)
			if image.b_length == 0 and image.tail > 0:
				return CosetProfile(size, image.tail, L)
	raise ValueError(f"no profile for {g} below {bound}")


def distinct_left_cosets(g: NormalForm, group: BsPresentation, span: int) -> int:
	return len({product(group, a_power(i), g).drop_tail() for i in range(span)})


def brute_exchange(root: RootOfUnity, g: NormalForm, group: BsPresentation, max_den: int) -> Set[RootOfUnity]:
	profile = brute_profile(g, group)
	target = root ** profile.r
	return {mu for mu in root_group_members(group, max_den) if mu ** profile.L == target}


def root_group_members(group: BsPresentation, max_den: int) -> Iterator[RootOfUnity]:
	for den in range(1, max_den + 1):
		# membership depends on the order alone
		if not omega_member(RootOfUnity.from_angle(Fraction(1, den)), group):
			continue
		for num in range(den):
			if math.gcd(num, den) == 1:
				yield RootOfUnity(num, den)


def normal_form_prefixes(group: BsPresentation, max_b_length: int) -> Iterator[NormalForm]:
	letters = [(s, 1) for s in range(group.abs_m)] + [(s, -1) for s in range(group.abs_n)]
	for length in range(max_b_length + 1):
		for prefix in itertools.product(letters, repeat=length):
			if any(
				prefix[i + 1][1] == -prefix[i][1] and prefix[i + 1][0] == 0
				for i in range(length - 1)
			):
				continue
			yield NormalForm(prefix, 0)
