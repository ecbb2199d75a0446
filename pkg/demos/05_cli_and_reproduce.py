"""The command-line interface, driven from Python.

The same calls work from a shell, e.g. ``coxgrowth rate --symbol "[8,3]" --json``.
``reproduce`` prints the table of reference values against computed ones
and exits with 3 if any row fails.
"""

from coxgrowth.cli import main

main(["growth", "--symbol", "[8,3]", "--coeffs", "8"])
print()
main(["rate", "--fixture", "kaplinskaja", "--json"])
print()
main(["check", "--fixture", "makarov"])
print()
code = main(["reproduce", "examples"])
print("exit code", code)
