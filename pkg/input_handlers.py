from __future__ import annotations
import argparse
from typing import List, Optional, Sequence, Tuple

from actions import ACTIONS, parse_pair
import color
from engine import CliConfig, Engine
import exceptions
from render_functions import render_error, render_json, render_report, render_usage_error

PROG = "bsrig"

class ParserExit(Exception):
	# --help and friends end parsing early with text for stdout
	def __init__(self, status: int, text: str):
		super().__init__(text)
		self.status = status
		self.text = text

class CommandParser(argparse.ArgumentParser):
	def print_help(self, file=None) -> None:
		raise ParserExit(0, self.format_help())

	def exit(self, status: int = 0, message: Optional[str] = None) -> None:
		raise ParserExit(status, message or "")

	def error(self, message: str) -> None:
		raise exceptions.UsageError(message)

def add_global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
	# the subcommand copies default to SUPPRESS so flags given before it survive
	default = argparse.SUPPRESS
	parser.add_argument("--group", type=parse_pair, default=default if suppress else None, metavar="n,m")
	parser.add_argument("--format", choices=("text", "json"), default=default if suppress else "text")
	parser.add_argument("--seed", type=int, default=default if suppress else None)
	parser.add_argument("--verbose", action="store_true", default=default if suppress else False)

def build_parser() -> CommandParser:
	parser = CommandParser(prog=PROG, description="Exact computations in Baumslag-Solitar groups and their Hecke pairs.")
	add_global_flags(parser, suppress=False)
	subparsers = parser.add_subparsers(dest="command", metavar="command")
	subparsers.required = True
	for name, action in ACTIONS.items():
		subparser = subparsers.add_parser(name, help=action.help, description=action.help)
		add_global_flags(subparser, suppress=True)
		action.add_arguments(subparser)
	return parser

def parse_config(args: argparse.Namespace) -> CliConfig:
	return CliConfig(group=args.group, format=args.format, seed=args.seed, verbose=args.verbose)

def run(argv: Sequence[str], tint: bool = False) -> Tuple[int, bytes, bytes]:
	parser = build_parser()
	try:
		args = parser.parse_args(list(argv))
	except ParserExit as exc:
		return exc.status, exc.text.encode("utf-8"), b""
	except exceptions.UsageError as exc:
		return 2, b"", render_usage_error(str(exc), parser.format_usage()).encode("utf-8")

	engine = Engine(parse_config(args))
	action = ACTIONS[args.command](engine, args)
	stdout = ""
	failure = ""
	errors: List[str] = []
	try:
		report = engine.handle_action(action)
		stdout = render_report(report, engine.config.format)
		exit_code = report.exit_code
	except (exceptions.WordSyntaxError, exceptions.UsageError) as exc:
		engine.message_log.add_message(str(exc), color.invalid)
		failure = str(exc)
		errors.append(render_usage_error(str(exc), parser.format_usage()))
		exit_code = 2
	except exceptions.VerificationFailed as exc:
		errors.append(render_error(str(exc), internal=True))
		failure = f"internal error: {exc}"
		exit_code = 1
	except exceptions.Impossible as exc:
		errors.append(render_error(str(exc)))
		failure = str(exc)
		exit_code = 1

	if failure and engine.config.format == "json":
		# one document on stdout in JSON mode, errors included
		stdout = render_json({"error": failure, "exit_code": exit_code})
	stderr = "".join(errors)
	if engine.config.verbose:
		stderr = engine.message_log.render(tint=tint) + stderr
	return exit_code, stdout.encode("utf-8"), stderr.encode("utf-8")
