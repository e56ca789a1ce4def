import pytest

import oracles
import procgen
from exceptions import Impossible, WordSyntaxError
from group_core import (
	IDENTITY,
	LETTER_B,
	BsPresentation,
	GroupWord,
	a_power,
	abelianization_image,
	b_length,
	conjugate,
	cyclically_reduce,
	element,
	invert,
	is_identity,
	multiply,
	normalize,
	parse_word,
	power,
)


def test_pinch_collapses_to_a_power(bs23):
	assert str(element("b a^2 B", bs23)) == "a^3"
	assert str(element("b a^4 b^-1", bs23)) == "a^6"


def test_negative_m_flips_the_pinch(bs2m2):
	assert str(element("b a^2 B", bs2m2)) == "a^-2"


def test_identity_prints_as_e(bs23):
	assert str(IDENTITY) == "e"
	assert str(element("b^2 B^2", bs23)) == "e"
	assert str(element("", bs23)) == "e"


def test_a_powers_are_pushed_right(bs23):
	assert str(element("a^3 b", bs23)) == "b a^2"
	assert str(element("a b", bs23)) == "a b"
	assert str(multiply(a_power(3), LETTER_B, bs23)) == "b a^2"


def test_relator_is_trivial(bs23, bs2m3):
	assert is_identity(parse_word("b a^2 B a^-3"), bs23)
	assert is_identity(parse_word("b a^2 B a^3"), bs2m3)
	assert not is_identity(parse_word("b a B a^-3"), bs23)


def test_uppercase_letters_are_inverses():
	assert parse_word("A B") == parse_word("a^-1 b^-1")
	assert parse_word("A^2") == GroupWord((("a", -2),))
	assert parse_word("ab") == GroupWord((("a", 1), ("b", 1)))


def test_syntax_errors_carry_offsets():
	with pytest.raises(WordSyntaxError) as info:
		parse_word("b x")
	assert info.value.offset == 2
	with pytest.raises(WordSyntaxError) as info:
		parse_word("a^")
	assert info.value.offset == 2
	with pytest.raises(Impossible):
		parse_word("a^-")


def test_zero_parameter_rejected():
	with pytest.raises(Impossible):
		BsPresentation(0, 3)


def test_gcd_parts():
	group = BsPresentation(4, -6)
	assert (group.k, group.n0, group.m0) == (2, 2, -3)
	assert group.standing_hypothesis
	assert not BsPresentation(3, 2).standing_hypothesis


def test_b_length_counts_unpinched_letters(bs23):
	assert b_length(parse_word("b a B"), bs23) == 2
	assert b_length(parse_word("b a^2 B"), bs23) == 0
	assert power(LETTER_B, 3, bs23).b_length == 3


def test_inverse_and_conjugate(bs23, rng):
	for _ in range(50):
		g = procgen.random_element(rng, bs23)
		h = procgen.random_element(rng, bs23)
		assert multiply(g, invert(g, bs23), bs23).is_identity
		assert conjugate(g, h, bs23) == normalize(
			invert(h, bs23).to_word() * g.to_word() * h.to_word(), bs23
		)


def test_normal_form_is_idempotent(bs2m3, rng):
	for _ in range(50):
		g = procgen.random_element(rng, bs2m3, 5, 1000)
		assert normalize(g.to_word(), bs2m3) == g


def test_relator_insertion_keeps_the_element(bs23, rng):
	for _ in range(50):
		word = procgen.random_word(rng, 4, 50)
		noisy = procgen.insert_relator(word, rng, bs23)
		assert normalize(noisy, bs23) == normalize(word, bs23)


def test_normal_form_agrees_with_pinch_oracle(bs23, rng):
	for _ in range(50):
		word = procgen.random_word(rng, 5, 20)
		g = normalize(word, bs23)
		signs, a_sum = oracles.reduced_signature(word, bs23, rng)
		assert signs == tuple(e for _, e in g.prefix)
		if not signs:
			assert a_sum == g.tail


def test_abelianization_is_invariant(bs23, rng):
	for _ in range(30):
		word = procgen.random_word(rng, 4, 30)
		g = normalize(word, bs23)
		assert abelianization_image(word, bs23) == abelianization_image(g.to_word(), bs23)
	assert abelianization_image(parse_word("a"), bs23).modulus == 1


def test_cyclic_reduction_exposes_ellipticity(bs23):
	conjugator, core = cyclically_reduce(element("b a B", bs23), bs23)
	assert conjugator == LETTER_B
	assert core == a_power(1)
	conjugator, core = cyclically_reduce(LETTER_B, bs23)
	assert conjugator == IDENTITY
	assert core == LETTER_B


def test_exponents_are_not_bounded_by_int_conversion():
	digits = "7" * 5000
	assert parse_word(f"a^{digits}") == GroupWord((("a", int(digits)),))
	assert str(parse_word(f"b^-{digits}")) == f"b^-{digits}"
