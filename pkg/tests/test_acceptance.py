"""Acceptance criteria at their stated sample sizes and tolerances.

Each criterion is backed by the checks of one verification suite; the line
printed per criterion names the measured values. Run directly with
`python tests/test_acceptance.py` for the summary without pytest.
"""
import functools
import sys
import time

import pytest

from futuretube.suites import RunConfig, run_suite, threads_from_env

SEED = 0

# criterion -> (title, suite, check names or None for every check)
CRITERIA = {
    1: ("reverse Cauchy-Schwarz", "cauchy-schwarz", None),
    2: ("quotient invariance and rank bound", "invariance", None),
    3: ("closed-orbit criterion on planted radicals", "radical-lemmas",
        ["radical_dimension", "closed_criterion", "rank_warnings"]),
    4: ("signs on the isotropic radical", "radical-lemmas",
        ["eta_im_radical_negative", "radical_pairing_negative"]),
    5: ("degeneration to the closed orbit", "degeneration", None),
    6: ("moment map vs finite differences", "moment-fd", None),
    7: ("strict plurisubharmonicity", "levi", None),
    8: ("reduction flow", "reduction", None),
    9: ("extended-tube membership certification", "membership", None),
    10: ("orbit connectedness via Cartan paths", "cartan-path", None),
    11: ("exhaustion audit", "exhaustion", None),
}


@functools.lru_cache(maxsize=None)
def suite_result(name):
    start = time.perf_counter()
    result = run_suite(name, RunConfig(seed=SEED, threads=threads_from_env()))[0]
    return result, time.perf_counter() - start


def evaluate(k):
    title, suite, names = CRITERIA[k]
    result, elapsed = suite_result(suite)
    checks = [c for c in result.checks if names is None or c.name in names]
    passed = bool(checks) and all(c.passed for c in checks)
    detail = "; ".join(f"{c.name}={c.measured:.3g} (limit {c.threshold:.3g})" for c in checks)
    line = f"criterion {k:2d} {'PASS' if passed else 'FAIL'}  {title} [{suite}, {elapsed:.1f}s]: {detail}"
    return passed, line, result


@pytest.mark.slow
@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    passed, line, result = evaluate(k)
    with capsys.disabled():
        print("\n" + line)
    assert passed, result.failures[:3]


if __name__ == "__main__":
    ok = True
    for k in sorted(CRITERIA):
        passed, line, _ = evaluate(k)
        ok &= passed
        print(line, flush=True)
    sys.exit(0 if ok else 1)
