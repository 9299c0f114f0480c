"""Minimal competition-style solver front end: ``python3 -m ugig.recognizer.dimacs_solver file.cnf``."""

import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if len(argv) != 1:
        print("usage: dimacs_solver FILE.cnf", file=sys.stderr)
        return 2
    cnf = CNF(from_file=argv[0])
    with Solver(name="glucose4", bootstrap_with=cnf.clauses) as s:
        if s.solve():
            print("s SATISFIABLE")
            print("v " + " ".join(map(str, s.get_model())) + " 0")
            return 10
        print("s UNSATISFIABLE")
        return 20


if __name__ == "__main__":
    sys.exit(main())
