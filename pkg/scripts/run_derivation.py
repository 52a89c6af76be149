#!/usr/bin/env python3
"""Run every shipped worksheet in derivation order and print a summary.

The worksheets build up the count of tritangent planes to a general
genus-4 K3 surface in P^4: theta characteristics, the triple-point
check, the two scroll computations, and the final assembly to 152.
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from chowkit.worksheet import evaluate, parse

ORDER = [
    "g24_schubert.ws",
    "tau_k3.ws",
    "theta_counts.ws",
    "step1_bitangents.ws",
    "step2_secants.ws",
    "final_degree.ws",
]


def main() -> int:
    root = pathlib.Path(__file__).resolve().parents[1] / "worksheets"
    failures = 0
    for name in ORDER:
        path = root / name
        report = evaluate(parse(path.read_text(encoding="utf-8")))
        passed = sum(a.passed for a in report.assertions)
        total = len(report.assertions)
        status = "ok" if report.all_passed else "FAIL"
        print(f"{name:24s} {passed:3d}/{total:<3d} assertions  [{status}]")
        for a in report.assertions:
            if not a.passed:
                failures += 1
                print(f"    FAIL {a.expression}  (actual {a.actual})")
    if failures:
        print(f"{failures} assertion(s) failed")
        return 1
    print("all worksheets passed; final degree 152 confirmed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
