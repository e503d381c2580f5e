"""The acceptance gate: six criteria, each at its full scale.

Every (suite, target) run must pass and finish in under 60 seconds.  Each
criterion prints one PASS/FAIL line.  Run directly with
``python3 tests/test_acceptance.py`` for just the summary.
"""
import sys

import pytest

from binarytor.suites import run_suite

LIMIT = 60.0

CRITERIA = {
    "1 oracle soundness": [("oracle", 200)],
    "2 K1 identities": [("k1delta", 100), ("k1autoadd", 100), ("k1elementary", 100), ("k1shift", 100),
                        ("k1tau", 100), ("k1topbotiso", 100), ("k1diffrot", 100)],
    "3 bit-exact identities": [("elem2x2", 1), ("rotation", 100), ("part3-identities", 50)],
    "4 witness bundles and mutations": [("part0", 50), ("part1", 50), ("part2", 50), ("part3", 50),
                                        ("k0omegashift", 50), ("totbcf", 50), ("mutation-q", 10),
                                        ("mutation-comparison", 10)],
    "5 composites": [("composites", 50)],
    "6 K0 witness": [("k0witness", 100), ("ses-witness", 100)],
}


def evaluate(criterion: str, seed: int = 0):
    """(passed, problems, slowest run) for one criterion."""
    problems, slowest = [], ("", 0.0)
    for name, count in CRITERIA[criterion]:
        for r in run_suite(name, seed=seed, count=count):
            label = f"{name} [{r.target}]"
            problems += [f"{label} {c.name}: {c.detail}" for c in r.failures()]
            if r.seconds >= LIMIT:
                problems.append(f"{label} took {r.seconds:.1f}s")
            if r.seconds > slowest[1]:
                slowest = (label, r.seconds)
    return not problems, problems, slowest


def line(criterion, passed, slowest):
    return f"{'PASS' if passed else 'FAIL'}  criterion {criterion}  (slowest: {slowest[0]} {slowest[1]:.1f}s)"


@pytest.mark.parametrize("criterion", list(CRITERIA))
def test_criterion(criterion, capsys):
    passed, problems, slowest = evaluate(criterion)
    with capsys.disabled():
        print("\n" + line(criterion, passed, slowest))
    assert passed, "\n".join(problems[:20])


if __name__ == "__main__":
    ok = True
    for c in CRITERIA:
        passed, problems, slowest = evaluate(c)
        ok &= passed
        print(line(c, passed, slowest))
        for p in problems[:5]:
            print("   ", p)
    sys.exit(0 if ok else 1)
