from __future__ import annotations
import argparse
from dataclasses import dataclass
from typing import Dict, List, Tuple, Type, TYPE_CHECKING

import color
import exceptions
from bass_serre import BASE_VERTEX, Elliptic, classify, common_fixed_vertex, export_ball, vertex_of
from fusion import RootOfUnity, decompose_self_inverse, exchange_partners
from hecke import HeckeElement, coset_profile, double_coset, hecke_convolve, left_translates, qc_member, verify_profile
from render_functions import render_bool, render_json
from rigidity import (
	canonicalize,
	dimension_spectrum,
	is_amenable,
	is_isomorphic,
	recover_parameters,
	sign_witness,
	theorem_b_obstruction,
)
from selftest import run_selftest

if TYPE_CHECKING:
	from engine import Engine

def parse_pair(text: str) -> Tuple[int, int]:
	# "n,m" with both nonzero, negatives allowed
	parts = text.split(",")
	try:
		n, m = (int(part) for part in parts)
	except ValueError:
		raise argparse.ArgumentTypeError(f"expected two integers n,m, got {text!r}")
	if n == 0 or m == 0:
		raise argparse.ArgumentTypeError(f"parameters must be nonzero, got {text!r}")
	return n, m

@dataclass(frozen=True)
class Report:
	text: str
	document: object
	exit_code: int = 0

# Generic action class which all other inherit
class Action:
	name = ""
	help = ""

	def __init__(self, engine: Engine, args: argparse.Namespace) -> None:
		super().__init__()
		self.engine = engine
		self.args = args

	@classmethod
	def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
		pass

	def perform(self) -> Report:
		# Override this method in subclasses
		raise NotImplementedError()

# actions taking a single word
class WordAction(Action):

	@classmethod
	def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
		parser.add_argument("word")

	@property
	def g(self):
		return self.engine.element(self.args.word)

# actions taking two words
class WordPairAction(Action):

	@classmethod
	def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
		parser.add_argument("left")
		parser.add_argument("right")

	@property
	def operands(self):
		return self.engine.element(self.args.left), self.engine.element(self.args.right)

class ReduceAction(WordAction):
	name = "reduce"
	help = "normal form of a word"

	def perform(self) -> Report:
		g = self.g
		return Report(str(g), {"normal_form": str(g), "b_length": g.b_length})

class EqualAction(WordPairAction):
	name = "eq"
	help = "decide whether two words are the same element"

	def perform(self) -> Report:
		u, v = self.operands
		return Report(render_bool(u == v), {"equal": u == v})

class BLengthAction(WordAction):
	name = "blength"
	help = "number of b letters in the normal form"

	def perform(self) -> Report:
		length = self.g.b_length
		return Report(str(length), {"b_length": length})

class ProfileAction(WordAction):
	name = "profile"
	help = "the coset profile (l, r, L) of an element"

	def perform(self) -> Report:
		g = self.g
		profile = coset_profile(g, self.engine.group)
		if not verify_profile(g, profile, self.engine.group):
			raise exceptions.VerificationFailed(f"profile of {g} fails g a^L g^-1 = a^r")
		self.engine.message_log.add_message(f"checked {g} a^{profile.L} {g}^-1 = a^{profile.r}", color.verified)
		return Report(render_json(profile.to_json()), profile.to_json())

class QuasiCentralizerAction(WordAction):
	name = "qc"
	help = "quasi-centralizer membership"

	def perform(self) -> Report:
		g = self.g
		member = qc_member(g, self.engine.group)
		profile = coset_profile(g, self.engine.group)
		return Report(render_bool(member), {"qc": member, "profile": profile.to_json()})

class ClassifyAction(WordAction):
	name = "classify"
	help = "elliptic or hyperbolic on the Bass-Serre tree"

	def perform(self) -> Report:
		kind = classify(self.g, self.engine.group)
		if isinstance(kind, Elliptic):
			document = {"kind": "elliptic", "witness": str(kind.witness)}
		else:
			document = {"kind": "hyperbolic", "translation_length": kind.translation_length}
		return Report(str(kind), document)

class FixedVertexAction(Action):
	name = "fixed"
	help = "common fixed vertex of elliptic elements"

	@classmethod
	def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
		parser.add_argument("--radius", type=int, default=8)
		parser.add_argument("words", nargs="+")

	def perform(self) -> Report:
		gs = [self.engine.element(word) for word in self.args.words]
		found = common_fixed_vertex(gs, self.engine.group, self.args.radius)
		if found is None:
			text = f"none within radius {self.args.radius}"
			return Report(text, {"vertex": None, "g0": None, "radius": self.args.radius})
		vertex, g0 = found
		self.engine.message_log.add_message(f"every element lies in {g0}<a>{g0}^-1", color.verified)
		return Report(f"vertex {vertex}", {"vertex": str(vertex), "g0": str(g0), "radius": self.args.radius})

class TreeBallAction(Action):
	name = "tree-ball"
	help = "DOT export of a ball in the Bass-Serre tree"

	@classmethod
	def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
		parser.add_argument("--radius", type=int, default=1)
		parser.add_argument("word", nargs="?")

	def perform(self) -> Report:
		group = self.engine.group
		center = BASE_VERTEX if self.args.word is None else vertex_of(self.engine.element(self.args.word), group)
		dot = export_ball(center, self.args.radius, group)
		return Report(dot, {"dot": dot})

class CosetAction(WordAction):
	name = "coset"
	help = "canonical double coset and its left cosets"

	def perform(self) -> Report:
		g = self.g
		group = self.engine.group
		coset = double_coset(g, group)
		cosets = sorted({str(h) for h in left_translates(coset.representative, group)})
		profile = coset.profile
		text = f"{coset} l={profile.l} r={profile.r} L={profile.L}"
		return Report(text, {"coset": str(coset), **profile.to_json(), "left_cosets": cosets})

class ConvolveAction(WordPairAction):
	name = "convolve"
	help = "product of two double coset basis elements in the Hecke algebra"

	def perform(self) -> Report:
		u, v = self.operands
		group = self.engine.group
		result = hecke_convolve(HeckeElement.basis(u, group), HeckeElement.basis(v, group), group)
		return Report(str(result), result.to_json())

class SelfInverseFusionAction(WordAction):
	name = "fuse-selfinv"
	help = "decompose K_g (x) K_g^-1 into irreducibles"

	def perform(self) -> Report:
		decomposition = decompose_self_inverse(self.g, self.engine.group)
		document = {
			"terms": decomposition.to_json(),
			"left_dim": decomposition.left_dim,
			"right_dim": decomposition.right_dim,
		}
		return Report(str(decomposition), document)

class ExchangeAction(Action):
	name = "exchange"
	help = "roots mu with K_w (x) K_g = K_g (x) K_mu"

	@classmethod
	def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
		parser.add_argument("root")
		parser.add_argument("word")

	def perform(self) -> Report:
		root = RootOfUnity.parse(self.args.root)
		partners = exchange_partners(root, self.engine.element(self.args.word), self.engine.group)
		names = [str(mu) for mu in partners]
		return Report(" ".join(names), {"partners": names})

class InvariantsAction(Action):
	name = "invariants"
	help = "(l, r) spectrum and the parameters it determines"

	@classmethod
	def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
		parser.add_argument("--depth", type=int, default=3)

	def perform(self) -> Report:
		self.engine.group.require_standing_hypothesis("parameter recovery")
		spectrum = sorted(dimension_spectrum(self.engine.group, self.args.depth))
		n, abs_m = recover_parameters(spectrum)
		pairs = " ".join(f"({l},{r})" for l, r in spectrum)
		text = f"spectrum {pairs}\nn={n} |m|={abs_m}"
		return Report(text, {"spectrum": [list(pair) for pair in spectrum], "n": n, "abs_m": abs_m})

class IsomorphismAction(Action):
	name = "iso"
	help = "isomorphism of two Baumslag-Solitar groups"

	@classmethod
	def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
		parser.add_argument("first", type=parse_pair)
		parser.add_argument("second", type=parse_pair)

	def perform(self) -> Report:
		first, second = self.args.first, self.args.second
		answer = is_isomorphic(*first, *second)
		document = {
			"isomorphic": answer,
			"canonical": [list(canonicalize(*first)), list(canonicalize(*second))],
			"amenable": [is_amenable(*first), is_amenable(*second)],
		}
		return Report(render_bool(answer), document)

class ObstructionAction(Action):
	name = "obstruction"
	help = "what the Hecke invariants rule out between two groups"

	@classmethod
	def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
		parser.add_argument("first", type=parse_pair)
		parser.add_argument("second", type=parse_pair)

	def canonical(self, pair: Tuple[int, int]) -> Tuple[int, int]:
		result = canonicalize(*pair)
		if result != pair:
			self.engine.message_log.add_message(f"BS{pair} is isomorphic to BS{result}", color.trace)
		return result

	def perform(self) -> Report:
		verdict = theorem_b_obstruction(*self.canonical(self.args.first), *self.canonical(self.args.second))
		text = verdict.verdict.value
		if verdict.witness is not None:
			witness = verdict.witness
			text += f" t={witness.t} omega={witness.omega} mu={witness.mu}"
			self.engine.message_log.add_message("witness satisfies omega^n = mu^m and mu^2m != 1", color.verified)
		return Report(text, verdict.to_json())

class WitnessAction(Action):
	name = "witness"
	help = "the root pair separating BS(n,m) from BS(n,-m)"

	@classmethod
	def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
		parser.add_argument("pair", type=parse_pair)

	def perform(self) -> Report:
		witness = sign_witness(*self.args.pair)
		return Report(f"t={witness.t} omega={witness.omega} mu={witness.mu}", witness.to_json())

class SelftestAction(Action):
	name = "selftest"
	help = "run the acceptance checks"

	@classmethod
	def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
		parser.add_argument("--samples", type=int, default=100, help="percent of the full acceptance draw counts")

	def perform(self) -> Report:
		if self.args.samples < 1:
			raise exceptions.Impossible(f"--samples must be positive, got {self.args.samples}")
		seed = self.engine.config.seed if self.engine.config.seed is not None else 0
		report = run_selftest(self.args.samples, seed, self.engine.message_log)
		lines: List[str] = []
		for result in report.results:
			lines.append(f"ok {result.name}" if result.passed else f"FAIL {result.name}: {result.detail}")
		lines.append(f"passed {report.passed} failed {report.failed}")
		return Report("\n".join(lines), report.to_json(), 0 if report.failed == 0 else 1)

ACTIONS: Dict[str, Type[Action]] = {
	action.name: action
	for action in (
		ReduceAction,
		EqualAction,
		BLengthAction,
		ProfileAction,
		QuasiCentralizerAction,
		ClassifyAction,
		FixedVertexAction,
		TreeBallAction,
		CosetAction,
		ConvolveAction,
		SelfInverseFusionAction,
		ExchangeAction,
		InvariantsAction,
		IsomorphismAction,
		ObstructionAction,
		WitnessAction,
		SelftestAction,
	)
}
