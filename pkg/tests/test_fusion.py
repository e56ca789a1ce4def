from fractions import Fraction

import pytest

import oracles
from exceptions import Impossible
from fusion import (
	TRIVIAL_ROOT,
	BimoduleSum,
	Irreducible,
	RootOfUnity,
	char_of,
	char_product,
	coset_shadow,
	decompose_self_inverse,
	exchange_partners,
	isomorphic,
	l2_decomposition,
	omega_member,
	tensor_dims,
	twisted_dims,
)
from group_core import LETTER_B, LETTER_B_INVERSE, BsPresentation, a_power, element
from hecke import HeckeElement, double_coset, hecke_convolve


def roots(*angles):
	return tuple(RootOfUnity.parse(angle) for angle in angles)


def test_roots_are_reduced_mod_one():
	assert RootOfUnity.from_angle(Fraction(13, 12)) == RootOfUnity(1, 12)
	assert RootOfUnity.parse("-1/3") == RootOfUnity(2, 3)
	assert RootOfUnity.parse("1") == TRIVIAL_ROOT
	assert str(TRIVIAL_ROOT) == "0/1"
	assert RootOfUnity(1, 3) ** 3 == TRIVIAL_ROOT
	assert RootOfUnity(1, 3).inverse() == RootOfUnity(2, 3)
	for bad in ("x", "1/0", ""):
		with pytest.raises(Impossible):
			RootOfUnity.parse(bad)
	with pytest.raises(Impossible):
		RootOfUnity(2, 4)


def test_root_group_membership(bs23):
	assert omega_member(RootOfUnity(1, 12), bs23)
	assert omega_member(TRIVIAL_ROOT, bs23)
	assert not omega_member(RootOfUnity(1, 5), bs23)
	bs46 = BsPresentation(4, 6)
	assert omega_member(RootOfUnity(1, 4), bs46)
	assert not omega_member(RootOfUnity(1, 5), bs46)
	bs22 = BsPresentation(2, 2)
	assert omega_member(RootOfUnity(1, 2), bs22)
	assert not omega_member(RootOfUnity(1, 4), bs22)
	with pytest.raises(Impossible):
		omega_member(TRIVIAL_ROOT, BsPresentation(3, 2))


def test_characters_of_cosets(bs23):
	assert char_of(LETTER_B, bs23) == RootOfUnity(1, 3)
	assert char_of(LETTER_B_INVERSE, bs23) == RootOfUnity(1, 2)
	assert char_of(a_power(1), bs23).is_trivial


def test_unit_coset_is_the_trivial_character(bs23):
	unit = Irreducible.of_coset(double_coset(a_power(4), bs23))
	assert unit == Irreducible.of_char(TRIVIAL_ROOT)
	assert str(unit) == "Char(0/1)"
	assert isomorphic(
		Irreducible.of_coset(double_coset(LETTER_B, bs23)),
		Irreducible.of_coset(double_coset(element("a b a^3", bs23), bs23)),
		bs23,
	)
	assert not isomorphic(unit, Irreducible.of_coset(double_coset(LETTER_B, bs23)), bs23)


def test_tensor_dimensions(bs23):
	k_b = BimoduleSum.of([Irreducible.of_coset(double_coset(LETTER_B, bs23))])
	k_b_inverse = BimoduleSum.of([Irreducible.of_coset(double_coset(LETTER_B_INVERSE, bs23))])
	assert tensor_dims(k_b, k_b_inverse) == (6, 6)
	assert tensor_dims(k_b, k_b) == (4, 9)
	assert twisted_dims(RootOfUnity(1, 3), LETTER_B, bs23) == (2, 3)


def test_self_inverse_fusion_of_b(bs23):
	result = decompose_self_inverse(LETTER_B, bs23)
	assert str(result) == "Char(0/1) + Char(1/3) + Char(2/3) + Coset(b a b^-1)"
	assert (result.left_dim, result.right_dim) == (6, 6)
	assert result.to_json()[-1] == {"coset": "b a b^-1", "l": 3, "r": 3}


def test_self_inverse_fusion_of_b_inverse(bs23):
	result = decompose_self_inverse(LETTER_B_INVERSE, bs23)
	assert str(result) == "Char(0/1) + Char(1/2) + Coset(b^-1 a b) + Coset(b^-1 a^2 b)"
	assert len(result) == 4


def test_self_inverse_fusion_of_a_power(bs23):
	assert str(decompose_self_inverse(a_power(3), bs23)) == "Char(0/1)"


def test_self_inverse_fusion_refuses_uncovered_elements(bs23):
	# b^2 a^2 b^-2 collapses to b a^3 b^-1, so the terms fall short of l r = 36
	with pytest.raises(Impossible):
		decompose_self_inverse(element("b^2", bs23), bs23)
	with pytest.raises(Impossible):
		decompose_self_inverse(LETTER_B, BsPresentation(3, 2))


def test_fusion_shadow_is_the_hecke_product(bs23):
	shadow = coset_shadow(decompose_self_inverse(LETTER_B, bs23), bs23)
	expected = hecke_convolve(HeckeElement.basis(LETTER_B, bs23), HeckeElement.basis(LETTER_B_INVERSE, bs23), bs23)
	assert shadow == expected


def test_exchange_partners(bs23, bs2m3):
	assert exchange_partners(RootOfUnity(1, 3), LETTER_B_INVERSE, bs23) == roots("2/9", "5/9", "8/9")
	assert exchange_partners(RootOfUnity(1, 3), LETTER_B_INVERSE, bs2m3) == roots("1/9", "4/9", "7/9")
	assert exchange_partners(RootOfUnity(1, 3), a_power(1), bs23) == roots("1/3")
	with pytest.raises(Impossible):
		exchange_partners(RootOfUnity(1, 5), LETTER_B, bs23)


def test_exchange_partners_solve_the_relation(bs2m3):
	w = RootOfUnity(1, 3)
	for mu in exchange_partners(w, LETTER_B_INVERSE, bs2m3):
		assert mu ** -3 == w ** 2


def test_exchange_matches_search(bs23, bs2m3):
	for group in (bs23, bs2m3):
		for word in ("b", "B", "b a B"):
			g = element(word, group)
			for angle in ("0", "1/2", "1/3", "1/6"):
				w = RootOfUnity.parse(angle)
				assert set(exchange_partners(w, g, group)) == oracles.brute_exchange(w, g, group, 108)


def test_character_product():
	assert char_product(RootOfUnity(1, 12), RootOfUnity(1, 18)) == RootOfUnity(5, 36)
	assert char_product(RootOfUnity(1, 3), RootOfUnity(2, 3)).is_trivial


def test_l2_decomposition(bs23):
	terms = l2_decomposition([a_power(1), LETTER_B, element("a b A", bs23), LETTER_B_INVERSE], bs23)
	assert len(terms) == 3
	assert terms[0] == Irreducible.of_char(TRIVIAL_ROOT)
	assert {str(term) for term in terms} == {"Char(0/1)", "Coset(b)", "Coset(b^-1)"}
