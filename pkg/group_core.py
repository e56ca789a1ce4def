from __future__ import annotations

import math
import re
import sys
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from exceptions import Impossible, WordSyntaxError

# exponents are unbounded and so is their decimal text
if hasattr(sys, "set_int_max_str_digits"):
	sys.set_int_max_str_digits(0)

Syllable = Tuple[str, int]

# one term of the word grammar: letter, optional ^ and signed digits
TERM_PATTERN = re.compile(r"([A-Za-z])(?:\^(-?[0-9]+))?")
POWER_PATTERN = re.compile(r"\^(-?[0-9]*)")

GRAMMAR_SYNOPSIS = (
	"word  := term*            terms separated by optional whitespace\n"
	"term  := letter power?\n"
	"letter:= 'a' | 'b' | 'A' | 'B'   ('A' = a^-1, 'B' = b^-1)\n"
	"power := '^' '-'? digits\n"
	"identity prints as 'e'"
)


@dataclass(frozen=True)
class BsPresentation:
	n: int
	m: int

	def __post_init__(self) -> None:
		if self.n == 0 or self.m == 0:
			raise Impossible(f"BS({self.n},{self.m}) needs n and m nonzero")

	@property
	def k(self) -> int:
		return math.gcd(abs(self.n), abs(self.m))

	@property
	def n0(self) -> int:
		return self.n // self.k

	@property
	def m0(self) -> int:
		return self.m // self.k

	@property
	def abs_n(self) -> int:
		return abs(self.n)

	@property
	def abs_m(self) -> int:
		return abs(self.m)

	@property
	def standing_hypothesis(self) -> bool:
		return 2 <= self.n <= abs(self.m)

	def require_standing_hypothesis(self, what: str) -> None:
		if not self.standing_hypothesis:
			raise Impossible(f"{what} needs 2 <= n <= |m|, got {self}")

	def __str__(self) -> str:
		return f"BS({self.n},{self.m})"


@dataclass(frozen=True)
class GroupWord:
	syllables: Tuple[Syllable, ...] = ()

	@classmethod
	def from_syllables(cls, syllables: Iterable[Syllable]) -> GroupWord:
		merged: List[Syllable] = []
		for letter, exponent in syllables:
			if exponent == 0:
				continue
			if merged and merged[-1][0] == letter:
				total = merged[-1][1] + exponent
				merged.pop()
				if total != 0:
					merged.append((letter, total))
			else:
				merged.append((letter, exponent))
		return cls(tuple(merged))

	def __mul__(self, other: GroupWord) -> GroupWord:
		return GroupWord.from_syllables(self.syllables + other.syllables)

	def inverse(self) -> GroupWord:
		return GroupWord(tuple((letter, -exponent) for letter, exponent in reversed(self.syllables)))

	def letter_sum(self, letter: str) -> int:
		return sum(exponent for name, exponent in self.syllables if name == letter)

	@property
	def is_empty(self) -> bool:
		return not self.syllables

	def __str__(self) -> str:
		return format_syllables(self.syllables)


@dataclass(frozen=True)
class NormalForm:
	"""
	a^s1 b^e1 a^s2 b^e2 ... a^sk b^ek a^tail with every a-power pushed to the right:
	0 <= s < |m| in front of b, 0 <= s < |n| in front of b^-1, and no b a^0 b^-1 or
	b^-1 a^0 b left over.
	"""

	prefix: Tuple[Tuple[int, int], ...] = ()
	tail: int = 0

	@property
	def b_length(self) -> int:
		return len(self.prefix)

	@property
	def is_identity(self) -> bool:
		return not self.prefix and self.tail == 0

	def drop_tail(self) -> NormalForm:
		# canonical representative of the left coset g<a>
		return NormalForm(self.prefix, 0)

	def with_tail(self, tail: int) -> NormalForm:
		return NormalForm(self.prefix, tail)

	def sort_key(self) -> Tuple[int, Tuple[Tuple[int, int], ...], int]:
		return (self.b_length, self.prefix, self.tail)

	def to_word(self) -> GroupWord:
		syllables: List[Syllable] = []
		for s, e in self.prefix:
			syllables.append(("a", s))
			syllables.append(("b", e))
		syllables.append(("a", self.tail))
		return GroupWord.from_syllables(syllables)

	def __str__(self) -> str:
		return str(self.to_word())


IDENTITY = NormalForm()
LETTER_B = NormalForm(((0, 1),), 0)
LETTER_B_INVERSE = NormalForm(((0, -1),), 0)


def format_syllables(syllables: Iterable[Syllable]) -> str:
	terms = [letter if exponent == 1 else f"{letter}^{exponent}" for letter, exponent in syllables]
	return " ".join(terms) if terms else "e"


def _byte_offset(text: str, index: int) -> int:
	return len(text[:index].encode("utf-8"))


def parse_word(text: str, alphabet: str = "ab") -> GroupWord:
	# uppercase letters denote inverses, the group is never consulted here
	syllables: List[Syllable] = []
	index = 0
	while index < len(text):
		char = text[index]
		if char.isspace():
			index += 1
			continue
		if not (char.isascii() and char.isalpha() and char.lower() in alphabet):
			raise WordSyntaxError(f"unexpected character {char!r}", _byte_offset(text, index))
		match = TERM_PATTERN.match(text, index)
		power = POWER_PATTERN.match(text, match.end(1))
		if power and not re.fullmatch(r"-?[0-9]+", power.group(1)):
			raise WordSyntaxError("malformed power", _byte_offset(text, power.end()))
		try:
			exponent = int(match.group(2)) if match.group(2) is not None else 1
		except ValueError:
			raise WordSyntaxError("exponent cannot be read", _byte_offset(text, match.start(2)))
		if char.isupper():
			exponent = -exponent
		syllables.append((char.lower(), exponent))
		index = match.end()
	return GroupWord.from_syllables(syllables)


class _Reducer:
	def __init__(self, group: BsPresentation, start: NormalForm = IDENTITY):
		self.group = group
		self.prefix: List[Tuple[int, int]] = list(start.prefix)
		self.tail = start.tail

	def push_a(self, exponent: int) -> None:
		self.tail += exponent

	def push_b(self, sign: int) -> None:
		n, m = self.group.n, self.group.m
		if self.prefix and self.prefix[-1][1] == -sign:
			s, last = self.prefix[-1]
			# b a^tail b^-1 with n | tail, or b^-1 a^tail b with m | tail
			if last == 1 and self.tail % n == 0:
				self.prefix.pop()
				self.tail = s + m * (self.tail // n)
				return
			if last == -1 and self.tail % m == 0:
				self.prefix.pop()
				self.tail = s + n * (self.tail // m)
				return
		if sign == 1:
			s = self.tail % abs(m)
			self.prefix.append((s, 1))
			self.tail = n * ((self.tail - s) // m)
		else:
			s = self.tail % abs(n)
			self.prefix.append((s, -1))
			self.tail = m * ((self.tail - s) // n)

	def feed(self, word: GroupWord) -> _Reducer:
		for letter, exponent in word.syllables:
			if letter == "a":
				self.push_a(exponent)
			elif letter == "b":
				sign = 1 if exponent > 0 else -1
				for _ in range(abs(exponent)):
					self.push_b(sign)
			else:
				raise Impossible(f"letter {letter!r} is not a generator of {self.group}")
		return self

	def form(self) -> NormalForm:
		return NormalForm(tuple(self.prefix), self.tail)


def normalize(word: GroupWord, group: BsPresentation) -> NormalForm:
	return _Reducer(group).feed(word).form()


def element(text: str, group: BsPresentation) -> NormalForm:
	return normalize(parse_word(text), group)


def is_identity(word: GroupWord, group: BsPresentation) -> bool:
	return normalize(word, group).is_identity


def multiply(u: NormalForm, v: NormalForm, group: BsPresentation) -> NormalForm:
	return _Reducer(group, u).feed(v.to_word()).form()


def invert(u: NormalForm, group: BsPresentation) -> NormalForm:
	return normalize(u.to_word().inverse(), group)


def product(group: BsPresentation, *factors: NormalForm) -> NormalForm:
	reducer = _Reducer(group)
	for factor in factors:
		reducer.feed(factor.to_word())
	return reducer.form()


def conjugate(g: NormalForm, h: NormalForm, group: BsPresentation) -> NormalForm:
	# h^-1 g h
	return product(group, invert(h, group), g, h)


def power(g: NormalForm, z: int, group: BsPresentation) -> NormalForm:
	base = g if z >= 0 else invert(g, group)
	result = IDENTITY
	for _ in range(abs(z)):
		result = multiply(result, base, group)
	return result


def a_power(z: int) -> NormalForm:
	return NormalForm((), z)


def b_length(word: GroupWord, group: BsPresentation) -> int:
	return normalize(word, group).b_length


def _wraps_to_pinch(g: NormalForm, group: BsPresentation) -> bool:
	if len(g.prefix) < 2:
		return False
	first_s, first_e = g.prefix[0]
	last_e = g.prefix[-1][1]
	if last_e != -first_e:
		return False
	joined = g.tail + first_s
	if last_e == 1:
		return joined % group.n == 0
	return joined % group.m == 0


def cyclically_reduce(g: NormalForm, group: BsPresentation) -> Tuple[NormalForm, NormalForm]:
	"""Returns (c, core) with c^-1 g c = core and no pinch left around the cycle."""
	conjugator = IDENTITY
	core = g
	while core.prefix and _wraps_to_pinch(core, group):
		s, e = core.prefix[0]
		step = NormalForm(((s, e),), 0)
		core = conjugate(core, step, group)
		conjugator = multiply(conjugator, step, group)
	return conjugator, core


@dataclass(frozen=True)
class AbelianImage:
	"""Image in Z x Z/|m-n|; modulus 0 means the a-part is free."""

	b_sum: int
	a_residue: int
	modulus: int

	def __add__(self, other: AbelianImage) -> AbelianImage:
		a_total = self.a_residue + other.a_residue
		if self.modulus:
			a_total %= self.modulus
		return AbelianImage(self.b_sum + other.b_sum, a_total, self.modulus)

	@property
	def is_zero(self) -> bool:
		return self.b_sum == 0 and self.a_residue == 0


def abelianization_image(word: GroupWord, group: BsPresentation) -> AbelianImage:
	modulus = abs(group.m - group.n)
	a_sum = word.letter_sum("a")
	return AbelianImage(word.letter_sum("b"), a_sum % modulus if modulus else a_sum, modulus)
