"""
Command-line tour
=================

The same computations from the ``measure-lattice`` command, run against the
bundled fixture workspaces.
"""

from pathlib import Path

import measure_lattice
from measure_lattice.cli import main

fixtures = Path(measure_lattice.__file__).parent / "fixtures"
ex1 = str(fixtures / "example1.json")
fam = str(fixtures / "family.json")

for argv in [
    ["eval", ex1, "meet(mu, nu)", "a|b"],
    ["eval", ex1, "join(mu, nu)", "a|b"],
    ["eval", fam, "meet(m1, m2)", "all"],
    ["check", ex1, str(fixtures / "example1_min_table.json")],
    ["check", ex1, str(fixtures / "example1_max_table.json")],
    ["jordan", fam, "s"],
    ["verify", ex1, "--seed", "42"],
]:
    print("$ measure-lattice", " ".join(repr(a) if " " in a or "|" in a else a for a in argv))
    code = main(argv)
    print(f"(exit {code})\n")
