#!/usr/bin/env python3
import sys

from input_handlers import run

def main() -> None:
	exit_code, stdout, stderr = run(sys.argv[1:], tint=sys.stderr.isatty())
	sys.stdout.buffer.write(stdout)
	sys.stderr.buffer.write(stderr)
	sys.stdout.flush()
	sys.stderr.flush()
	raise SystemExit(exit_code)


if __name__ == "__main__":
	main()
