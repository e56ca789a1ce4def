from __future__ import annotations
import json
from typing import TYPE_CHECKING

from group_core import GRAMMAR_SYNOPSIS

if TYPE_CHECKING:
	from actions import Report

def render_json(document: object) -> str:
	return json.dumps(document, separators=(",", ":"), ensure_ascii=False) + "\n"

def render_report(report: Report, output_format: str) -> str:
	if output_format == "json":
		return render_json(report.document)
	text = report.text
	return text if text.endswith("\n") else text + "\n"

def render_bool(value: bool) -> str:
	return "true" if value else "false"

def render_usage_error(message: str, usage: str) -> str:
	# usage errors always carry the word grammar
	return f"bsrig: error: {message}\n{usage.rstrip()}\n\n{GRAMMAR_SYNOPSIS}\n"

def render_error(message: str, internal: bool = False) -> str:
	prefix = "internal error" if internal else "error"
	return f"bsrig: {prefix}: {message}\n"
