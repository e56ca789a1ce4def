import pytest

from exceptions import Impossible
from fusion import TRIVIAL_ROOT, RootOfUnity
from group_core import LETTER_B_INVERSE, BsPresentation
from rigidity import (
	RigidityVerdict,
	Verdict,
	canonicalize,
	dimension_spectrum,
	forced_signed_index,
	is_amenable,
	is_isomorphic,
	recover_parameters,
	sign_witness,
	theorem_b_obstruction,
	w_relation,
)
from selftest import CHAMBER


@pytest.mark.parametrize(
	"pair, expected",
	[((-2, -3), (2, 3)), ((3, 2), (2, 3)), ((-3, 2), (2, -3)), ((3, -2), (2, -3)), ((2, 2), (2, 2))],
)
def test_canonicalize(pair, expected):
	assert canonicalize(*pair) == expected


def test_isomorphism_and_amenability():
	assert is_isomorphic(2, 3, 3, 2)
	assert is_isomorphic(2, 3, -2, -3)
	assert is_isomorphic(2, -3, -3, 2)
	assert not is_isomorphic(2, 3, 2, -3)
	assert is_amenable(1, 5)
	assert is_amenable(-1, 7)
	assert not is_amenable(2, 3)
	with pytest.raises(Impossible):
		is_isomorphic(0, 3, 2, 3)


def test_recover_parameters():
	assert recover_parameters({(2, 3), (3, 2), (4, 9), (1, 1)}) == (2, 3)
	assert recover_parameters({(2, 2), (4, 4)}) == (2, 2)
	assert recover_parameters({(4, 6), (6, 4)}) == (4, 6)
	with pytest.raises(Impossible):
		recover_parameters({(1, 1)})
	with pytest.raises(Impossible):
		recover_parameters({(3, 2)})


def test_spectrum_of_short_elements(bs23):
	assert dimension_spectrum(bs23, 1) == {(1, 1), (2, 3), (3, 2)}
	assert (4, 9) in dimension_spectrum(bs23, 2)
	with pytest.raises(Impossible):
		dimension_spectrum(bs23, -1)


@pytest.mark.parametrize("n, m", CHAMBER)
def test_spectrum_recovers_n_and_abs_m(n, m):
	assert recover_parameters(dimension_spectrum(BsPresentation(n, m), 3)) == (n, abs(m))


def test_forced_signed_index(bs23, bs2m3, bs2m2):
	assert forced_signed_index(3, 2, bs23) == 3
	assert forced_signed_index(3, 2, bs2m3) == -3
	with pytest.raises(Impossible):
		forced_signed_index(2, 2, bs2m2)


def test_sign_witness():
	witness = sign_witness(2, 3)
	assert (witness.t, witness.omega, witness.mu) == (1, RootOfUnity(1, 12), RootOfUnity(1, 18))
	witness = sign_witness(2, 4)
	assert (witness.t, witness.omega, witness.mu) == (2, RootOfUnity(1, 8), RootOfUnity(1, 16))
	assert sign_witness(2, -3).mu == RootOfUnity(17, 18)
	with pytest.raises(Impossible):
		sign_witness(2, 2)
	with pytest.raises(Impossible):
		sign_witness(3, 2)


def test_witness_relation_depends_on_the_sign(bs23, bs2m3):
	omega, mu = RootOfUnity(1, 12), RootOfUnity(1, 18)
	assert w_relation(omega, mu, LETTER_B_INVERSE, bs23)
	assert not w_relation(omega, mu, LETTER_B_INVERSE, bs2m3)
	assert w_relation(TRIVIAL_ROOT, TRIVIAL_ROOT, LETTER_B_INVERSE, bs23)
	with pytest.raises(Impossible):
		w_relation(RootOfUnity(1, 5), mu, LETTER_B_INVERSE, bs23)


def test_obstruction_verdicts():
	assert theorem_b_obstruction(2, 3, 2, 5) == RigidityVerdict(Verdict.ABS_M_MISMATCH)
	assert theorem_b_obstruction(2, 3, 3, 3) == RigidityVerdict(Verdict.N_MISMATCH)
	assert theorem_b_obstruction(2, 3, 2, 3) == RigidityVerdict(Verdict.NO_OBSTRUCTION)
	assert theorem_b_obstruction(2, 2, 2, -2) == RigidityVerdict(Verdict.NO_OBSTRUCTION)
	assert not theorem_b_obstruction(2, 3, 2, 3).obstructed
	with pytest.raises(Impossible):
		theorem_b_obstruction(3, 2, 2, 3)


def test_sign_mismatch_carries_its_witness():
	verdict = theorem_b_obstruction(2, 3, 2, -3)
	assert verdict.obstructed
	assert verdict.to_json() == {
		"verdict": "sign_mismatch",
		"witness": {"t": 1, "omega": "1/12", "mu": "1/18"},
	}
	assert theorem_b_obstruction(2, -3, 2, 3).witness.mu == RootOfUnity(17, 18)


def test_every_chamber_pair_gets_a_verdict():
	for n1, m1 in CHAMBER:
		for n2, m2 in CHAMBER:
			verdict = theorem_b_obstruction(n1, m1, n2, m2).verdict
			if n1 != n2:
				assert verdict is Verdict.N_MISMATCH
			elif abs(m1) != abs(m2):
				assert verdict is Verdict.ABS_M_MISMATCH
			elif m1 != m2 and n1 != abs(m1):
				assert verdict is Verdict.SIGN_MISMATCH
			else:
				assert verdict is Verdict.NO_OBSTRUCTION
