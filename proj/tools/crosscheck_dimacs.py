#!/usr/bin/env python3
"""Re-solve exported DIMACS files with external solvers (requires python-sat).

    ramsey solve -n 9 -s 3 -t 4 --dimacs n9.cnf
    python3 tools/crosscheck_dimacs.py n9.cnf
"""
import sys

from pysat.formula import CNF
from pysat.solvers import Cadical153, Glucose4


def main(paths):
    status = 0
    for path in paths:
        cnf = CNF(from_file=path)
        answers = []
        for solver in (Cadical153, Glucose4):
            with solver(bootstrap_with=cnf.clauses) as s:
                answers.append(s.solve())
        verdict = "SAT" if answers[0] else "UNSAT"
        if len(set(answers)) != 1:
            verdict = "DISAGREE"
            status = 1
        print(f"{path}: {cnf.nv} vars, {len(cnf.clauses)} clauses, {verdict}", flush=True)
    return status


if __name__ == "__main__":
    if len(sys.argv) < 2:
        print(__doc__.strip(), file=sys.stderr)
        sys.exit(2)
    sys.exit(main(sys.argv[1:]))
