class Impossible(Exception):
	# raised when a computation cannot be performed on the given input
	pass

class WordSyntaxError(Impossible):
	# malformed word text, offset is the byte offset of the offending character
	def __init__(self, message: str, offset: int):
		super().__init__(f"{message} at offset {offset}")
		self.offset = offset

class UsageError(Exception):
	# bad command line
	pass

class VerificationFailed(Exception):
	# an internal self-check did not hold, never turned into a result
	pass
