from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, TYPE_CHECKING

import color
import exceptions
from group_core import BsPresentation, NormalForm, element
from message_log import MessageLog

if TYPE_CHECKING:
	from actions import Action, Report

@dataclass(frozen=True)
class CliConfig:
	group: Optional[Tuple[int, int]] = None
	format: str = "text"
	seed: Optional[int] = None
	verbose: bool = False

class Engine:

	def __init__(self, config: CliConfig):
		self.config = config
		self.message_log = MessageLog()
		self._group: Optional[BsPresentation] = None

	@property
	def group(self) -> BsPresentation:
		if self.config.group is None:
			raise exceptions.UsageError("this command needs --group n,m")
		if self._group is None:
			self._group = BsPresentation(*self.config.group)
			self.message_log.add_message(f"working in {self._group}", color.trace)
		return self._group

	def element(self, text: str) -> NormalForm:
		g = element(text, self.group)
		self.message_log.add_message(f"{text!r} reduces to {g}", color.trace)
		return g

	def handle_action(self, action: Action) -> Report:
		self.message_log.add_message(f"running {action.name}", color.command_text)
		try:
			return action.perform()
		except exceptions.Impossible as exc:
			self.message_log.add_message(exc.args[0], color.impossible)
			raise
		except exceptions.VerificationFailed as exc:
			self.message_log.add_message(f"self-check failed: {exc.args[0]}", color.error)
			raise
