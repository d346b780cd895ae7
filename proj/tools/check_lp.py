#!/usr/bin/env python3
"""Cross-check the exported LP model against the brute-force oracle.

Requires scipy. For each generated instance the script exports the 0,1-LP via
the CLI, parses the LP text, solves it with scipy.optimize.milp (HiGHS), and
compares the optimum with `fairopt exact`.

Usage: python3 tools/check_lp.py [--cli PATH] [--trials N]
"""
import argparse
import re
import subprocess
import sys
import tempfile
from pathlib import Path

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

NUMBER = re.compile(r"^[0-9.]")


def parse_lp(text):
    """Parse the subset of LP format that the exporter emits."""
    sections = {}
    current = None
    for line in text.splitlines():
        if line in ("Maximize", "Subject To", "Bounds", "Binaries", "End"):
            current = line
            sections[current] = []
        elif current:
            if line.startswith("   ") and sections[current]:
                sections[current][-1] += " " + line.strip()
            else:
                sections[current].append(line.strip())

    binaries = set()
    for line in sections["Binaries"]:
        binaries.update(line.split())
    free = {line.split()[0] for line in sections["Bounds"]}

    variables = {}

    def var_index(name):
        if name not in variables:
            variables[name] = len(variables)
        return variables[name]

    def parse_terms(expr):
        # Tokens look like: [+|-] [coefficient] name; unit coefficients are
        # omitted by the exporter.
        coeffs = {}
        sign, coef = 1.0, None
        for tok in expr.split():
            if tok == "+":
                sign, coef = 1.0, None
            elif tok == "-":
                sign, coef = -1.0, None
            elif NUMBER.match(tok):
                coef = float(tok)
            else:
                coeffs[var_index(tok)] = sign * (1.0 if coef is None else coef)
                sign, coef = 1.0, None
        return coeffs

    objective = parse_terms(sections["Maximize"][0].split(":", 1)[1])
    rows = []
    for line in sections["Subject To"]:
        body = line.split(":", 1)[1]
        if "<=" in body:
            lhs, rhs = body.split("<=")
            rows.append((parse_terms(lhs), -np.inf, float(rhs)))
        else:
            lhs, rhs = body.split("=")
            b = float(rhs)
            rows.append((parse_terms(lhs), b, b))

    n = len(variables)
    c = np.zeros(n)
    for j, v in objective.items():
        c[j] = v
    A = np.zeros((len(rows), n))
    lo = np.empty(len(rows))
    hi = np.empty(len(rows))
    for r, (coeffs, lb, ub) in enumerate(rows):
        for j, v in coeffs.items():
            A[r, j] = v
        lo[r], hi[r] = lb, ub

    integrality = np.zeros(n)
    lb = np.zeros(n)
    ub = np.full(n, np.inf)
    for name, j in variables.items():
        if name in binaries:
            integrality[j] = 1
            ub[j] = 1.0
        elif name in free:
            lb[j] = -np.inf
    return c, A, lo, hi, integrality, lb, ub


def solve_lp(text):
    c, A, lo, hi, integrality, lb, ub = parse_lp(text)
    res = milp(
        -c,  # milp minimizes
        constraints=LinearConstraint(A, lo, hi),
        integrality=integrality,
        bounds=Bounds(lb, ub),
    )
    if not res.success:
        raise RuntimeError(f"milp failed: {res.message}")
    return -res.fun


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", default="build/fairopt")
    ap.add_argument("--trials", type=int, default=12)
    args = ap.parse_args()

    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        for trial in range(args.trials):
            kind = "assignment" if trial % 2 == 0 else "matching"
            n = 2 + trial % 4
            d = (10, 30, 50)[trial % 3]
            inst = tmp / "case.inst"
            model = tmp / "case.lp"
            subprocess.run(
                [args.cli, "gen", "--kind", kind, "--n", str(n), "--d", str(d),
                 "--seed", str(1000 + trial), "-o", str(inst)],
                check=True,
            )
            subprocess.run(
                [args.cli, "export-lp", str(inst), "-o", str(model)], check=True
            )
            exact = float(
                subprocess.run(
                    [args.cli, "exact", str(inst)], check=True,
                    capture_output=True, text=True,
                ).stdout.split()[-1]
            )
            lp_val = solve_lp(model.read_text())
            ok = abs(lp_val - exact) <= 1e-6
            print(f"{kind} n={n} d={d}: milp={lp_val:.10g} exact={exact:.10g} "
                  f"{'ok' if ok else 'MISMATCH'}")
            if not ok:
                failures += 1
    if failures:
        print(f"{failures} mismatches", file=sys.stderr)
        return 1
    print("all models agree with the oracle")
    return 0


if __name__ == "__main__":
    sys.exit(main())
