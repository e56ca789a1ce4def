from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from exceptions import Impossible, VerificationFailed
from group_core import (
	BsPresentation,
	IDENTITY,
	LETTER_B,
	LETTER_B_INVERSE,
	NormalForm,
	a_power,
	conjugate,
	cyclically_reduce,
	invert,
	multiply,
	power,
	product,
)


@dataclass(frozen=True)
class TreeVertex:
	coset_rep: NormalForm

	def __str__(self) -> str:
		return str(self.coset_rep)


@dataclass(frozen=True)
class TreeEdge:
	coset_rep: NormalForm

	def __str__(self) -> str:
		return str(self.coset_rep)


BASE_VERTEX = TreeVertex(IDENTITY)


def vertex_of(g: NormalForm, group: BsPresentation) -> TreeVertex:
	return TreeVertex(g.drop_tail())


def edge_of(g: NormalForm, group: BsPresentation) -> TreeEdge:
	return TreeEdge(g.with_tail(g.tail % group.abs_n))


def source(edge: TreeEdge, group: BsPresentation) -> TreeVertex:
	return vertex_of(edge.coset_rep, group)


def range_of(edge: TreeEdge, group: BsPresentation) -> TreeVertex:
	return vertex_of(multiply(edge.coset_rep, LETTER_B_INVERSE, group), group)


def translate(h: NormalForm, vertex: TreeVertex, group: BsPresentation) -> TreeVertex:
	return vertex_of(multiply(h, vertex.coset_rep, group), group)


def outgoing_edges(vertex: TreeVertex, group: BsPresentation) -> List[TreeEdge]:
	return [TreeEdge(vertex.coset_rep.with_tail(i)) for i in range(group.abs_n)]


def incoming_edges(vertex: TreeVertex, group: BsPresentation) -> List[TreeEdge]:
	return [
		edge_of(product(group, vertex.coset_rep, a_power(j), LETTER_B), group)
		for j in range(group.abs_m)
	]


def neighbours(vertex: TreeVertex, group: BsPresentation) -> Iterator[TreeVertex]:
	for edge in outgoing_edges(vertex, group):
		yield range_of(edge, group)
	for edge in incoming_edges(vertex, group):
		yield source(edge, group)


def distance(u: TreeVertex, v: TreeVertex, group: BsPresentation) -> int:
	# tree distance is the b-length of u^-1 v
	return multiply(invert(u.coset_rep, group), v.coset_rep, group).b_length


def fixes_vertex(g: NormalForm, vertex: TreeVertex, group: BsPresentation) -> bool:
	return conjugate(g, vertex.coset_rep, group).b_length == 0


@dataclass(frozen=True)
class Elliptic:
	witness: NormalForm

	def __str__(self) -> str:
		return f"elliptic {self.witness}"


@dataclass(frozen=True)
class Hyperbolic:
	translation_length: int

	def __str__(self) -> str:
		return f"hyperbolic {self.translation_length}"


Classification = Union[Elliptic, Hyperbolic]


def classify(g: NormalForm, group: BsPresentation) -> Classification:
	conjugator, core = cyclically_reduce(g, group)
	if core.b_length == 0:
		return Elliptic(conjugator)
	return Hyperbolic(core.b_length)


def power_classify_consistency(g: NormalForm, z: int, group: BsPresentation) -> bool:
	if z == 0:
		raise Impossible("powers are taken with a nonzero exponent")
	if isinstance(classify(g, group), Elliptic):
		return True
	return isinstance(classify(power(g, z, group), group), Hyperbolic)


def ball(center: TreeVertex, radius: int, group: BsPresentation) -> Dict[TreeVertex, int]:
	if radius < 0:
		raise Impossible(f"radius must be nonnegative, got {radius}")
	seen: Dict[TreeVertex, int] = {center: 0}
	queue = deque([center])
	while queue:
		vertex = queue.popleft()
		depth = seen[vertex]
		if depth == radius:
			continue
		for neighbour in neighbours(vertex, group):
			if neighbour not in seen:
				seen[neighbour] = depth + 1
				queue.append(neighbour)
	return seen


def parent(vertex: TreeVertex) -> TreeVertex:
	"""Next vertex on the geodesic to <a>; the base vertex is its own parent."""
	return TreeVertex(NormalForm(vertex.coset_rep.prefix[:-1], 0))


def _nearest_common(
	start: TreeVertex,
	gs: Sequence[NormalForm],
	group: BsPresentation,
	radius: int,
) -> Optional[TreeVertex]:
	# breadth first through the fixed subtree of gs[0], stopping at the first vertex all of gs fix
	def fixed_by_all(vertex: TreeVertex) -> bool:
		return all(fixes_vertex(g, vertex, group) for g in gs[1:])

	if fixed_by_all(start):
		return start
	seen = {start}
	queue = deque([(start, 0)])
	while queue:
		vertex, depth = queue.popleft()
		if depth == radius:
			continue
		for neighbour in neighbours(vertex, group):
			if neighbour in seen or not fixes_vertex(gs[0], neighbour, group):
				continue
			if fixed_by_all(neighbour):
				return neighbour
			seen.add(neighbour)
			queue.append((neighbour, depth + 1))
	return None


def common_fixed_vertex(
	gs: Sequence[NormalForm],
	group: BsPresentation,
	radius_bound: int,
) -> Optional[Tuple[TreeVertex, NormalForm]]:
	"""
	The vertex of least b-length fixed by every g in gs, among those within radius_bound
	of the first element's witness vertex. None means nothing was found inside that ball.

	Fixed point sets and balls are subtrees, so their intersection is convex and its
	vertex nearest to <a> is reached by walking toward <a> from any of its vertices.
	"""
	if not gs:
		raise Impossible("common fixed vertex of an empty set")
	if radius_bound < 0:
		raise Impossible(f"radius must be nonnegative, got {radius_bound}")
	witnesses = []
	for g in gs:
		kind = classify(g, group)
		if isinstance(kind, Hyperbolic):
			raise Impossible(f"{g} is hyperbolic and fixes no vertex")
		witnesses.append(kind.witness)

	start = vertex_of(witnesses[0], group)
	best = _nearest_common(start, gs, group, radius_bound)
	if best is None:
		return None
	while best.coset_rep.b_length:
		step = parent(best)
		if distance(start, step, group) > radius_bound:
			break
		if not all(fixes_vertex(g, step, group) for g in gs):
			break
		best = step

	g0 = best.coset_rep
	for g in gs:
		if conjugate(g, g0, group).b_length != 0:
			raise VerificationFailed(f"{g} is not in {g0}<a>{g0}^-1")
	return best, g0


def export_ball(center: TreeVertex, radius: int, group: BsPresentation) -> str:
	region = ball(center, radius, group)
	edges = set()
	for vertex in region:
		for edge in outgoing_edges(vertex, group):
			target = range_of(edge, group)
			if target in region:
				edges.add((str(vertex), str(target), str(edge)))

	lines = [f"digraph \"{group}\" {{"]
	for label in sorted(str(v) for v in region):
		lines.append(f"\t\"{label}\";")
	for tail_label, head_label, edge_label in sorted(edges):
		lines.append(f"\t\"{tail_label}\" -> \"{head_label}\" [label=\"{edge_label}\"];")
	lines.append("}")
	return "\n".join(lines) + "\n"
