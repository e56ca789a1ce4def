import pytest

import procgen
from bass_serre import (
	BASE_VERTEX,
	Elliptic,
	Hyperbolic,
	TreeEdge,
	ball,
	classify,
	common_fixed_vertex,
	distance,
	edge_of,
	export_ball,
	fixes_vertex,
	incoming_edges,
	neighbours,
	outgoing_edges,
	power_classify_consistency,
	range_of,
	source,
	translate,
	vertex_of,
)
from exceptions import Impossible
from group_core import IDENTITY, LETTER_B, a_power, conjugate, element, invert, multiply


def test_vertices_and_edges_of_the_base(bs23):
	assert vertex_of(a_power(7), bs23) == BASE_VERTEX
	assert str(BASE_VERTEX) == "e"
	assert edge_of(a_power(2), bs23) == edge_of(IDENTITY, bs23)
	assert source(TreeEdge(IDENTITY), bs23) == BASE_VERTEX
	assert str(range_of(TreeEdge(IDENTITY), bs23)) == "b^-1"
	assert str(range_of(edge_of(a_power(1), bs23), bs23)) == "a b^-1"


def test_edges_do_not_depend_on_the_representative(bs23, rng):
	for _ in range(30):
		g = procgen.random_element(rng, bs23)
		z = procgen._exponent(rng, 5)
		shifted = multiply(g, a_power(bs23.n * z), bs23)
		assert edge_of(shifted, bs23) == edge_of(g, bs23)
		assert source(edge_of(shifted, bs23), bs23) == vertex_of(g, bs23)


def test_incidence(bs23, rng):
	for _ in range(10):
		v = vertex_of(procgen.random_element(rng, bs23), bs23)
		assert all(source(e, bs23) == v for e in outgoing_edges(v, bs23))
		assert all(range_of(e, bs23) == v for e in incoming_edges(v, bs23))
		assert len(set(neighbours(v, bs23))) == bs23.abs_n + bs23.abs_m


def test_ball_sizes(bs23):
	assert len(ball(BASE_VERTEX, 0, bs23)) == 1
	assert len(ball(BASE_VERTEX, 1, bs23)) == 6
	assert len(ball(BASE_VERTEX, 2, bs23)) == 26
	with pytest.raises(Impossible):
		ball(BASE_VERTEX, -1, bs23)


def test_distance_is_b_length(bs23):
	assert distance(BASE_VERTEX, vertex_of(element("b a B", bs23), bs23), bs23) == 2
	assert distance(vertex_of(LETTER_B, bs23), vertex_of(element("b a b", bs23), bs23), bs23) == 1
	assert translate(LETTER_B, BASE_VERTEX, bs23) == vertex_of(LETTER_B, bs23)


def test_fixed_vertices(bs23):
	b_inverse_vertex = vertex_of(element("B", bs23), bs23)
	assert fixes_vertex(a_power(2), b_inverse_vertex, bs23)
	assert not fixes_vertex(a_power(1), b_inverse_vertex, bs23)
	assert fixes_vertex(a_power(3), vertex_of(LETTER_B, bs23), bs23)


def test_fixing_is_equivariant(bs23, rng):
	for _ in range(30):
		g = procgen.random_elliptic(rng, bs23, 2, 6)
		h = procgen.random_element(rng, bs23, 2, 6)
		v = vertex_of(procgen.random_element(rng, bs23, 2, 6), bs23)
		h_g_h_inverse = conjugate(g, invert(h, bs23), bs23)
		assert fixes_vertex(g, v, bs23) == fixes_vertex(h_g_h_inverse, translate(h, v, bs23), bs23)


def test_classification(bs23):
	assert classify(a_power(5), bs23) == Elliptic(IDENTITY)
	assert classify(LETTER_B, bs23) == Hyperbolic(1)
	assert classify(element("b^2", bs23), bs23) == Hyperbolic(2)
	assert classify(element("b a B", bs23), bs23) == Elliptic(LETTER_B)
	assert str(classify(LETTER_B, bs23)) == "hyperbolic 1"
	assert str(classify(element("b a B", bs23), bs23)) == "elliptic b"


def test_elliptic_elements_fix_their_witness(bs23, rng):
	for _ in range(30):
		g = procgen.random_elliptic(rng, bs23)
		kind = classify(g, bs23)
		assert isinstance(kind, Elliptic)
		assert fixes_vertex(g, vertex_of(kind.witness, bs23), bs23)


def test_powers_keep_the_classification(bs23, rng):
	for _ in range(20):
		g = procgen.random_hyperbolic(rng, bs23)
		for z in (-2, -1, 2, 3):
			assert power_classify_consistency(g, z, bs23)
	with pytest.raises(Impossible):
		power_classify_consistency(LETTER_B, 0, bs23)


def test_common_fixed_vertex(bs23):
	assert common_fixed_vertex([a_power(1), a_power(3)], bs23, 8) == (BASE_VERTEX, IDENTITY)
	assert common_fixed_vertex([element("b a B", bs23)], bs23, 8) == (vertex_of(LETTER_B, bs23), LETTER_B)
	found = common_fixed_vertex([a_power(6), element("b a^3 B", bs23)], bs23, 8)
	assert found == (vertex_of(LETTER_B, bs23), LETTER_B)


def test_no_common_fixed_vertex_when_the_product_is_hyperbolic(bs23):
	gs = [a_power(2), element("b a^3 B", bs23)]
	assert isinstance(classify(multiply(*gs, bs23), bs23), Hyperbolic)
	assert common_fixed_vertex(gs, bs23, 3) is None


def test_common_fixed_vertex_rejects_bad_input(bs23):
	with pytest.raises(Impossible):
		common_fixed_vertex([], bs23, 8)
	with pytest.raises(Impossible):
		common_fixed_vertex([LETTER_B], bs23, 8)
	with pytest.raises(Impossible):
		common_fixed_vertex([a_power(1)], bs23, -1)


def test_export_ball(bs23):
	assert export_ball(BASE_VERTEX, 0, bs23) == 'digraph "BS(2,3)" {\n\t"e";\n}\n'
	dot = export_ball(BASE_VERTEX, 1, bs23)
	lines = dot.splitlines()
	assert lines[0] == 'digraph "BS(2,3)" {'
	assert lines[-1] == "}"
	assert sum(1 for line in lines if "->" in line) == 5
	assert sum(1 for line in lines if line.endswith('";') and "->" not in line) == 6
	assert '\t"e" -> "b^-1" [label="e"];' in lines
	assert '\t"b" -> "e" [label="b"];' in lines
