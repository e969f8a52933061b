"""Acceptance suite: the ten go/no-go criteria over the built-in algebras.

Each criterion runs at full scale with a fixed seed and must finish in
under sixty seconds.  One PASS/FAIL line per criterion is printed with
capture suspended so the verdicts stay visible in the pytest output.
"""

import time

import pytest

from poscones.acceptance import CRITERIA

SEED = 0
SCALE = 1.0
TIME_LIMIT = 60.0


@pytest.mark.parametrize(
    "criterion", CRITERIA, ids=[f"criterion-{i + 1:02d}" for i in range(len(CRITERIA))]
)
def test_criterion(criterion, capsys):
    start = time.perf_counter()
    result = criterion(SEED, SCALE)
    elapsed = time.perf_counter() - start
    verdict = "PASS" if result.passed else "FAIL"
    with capsys.disabled():
        print(
            f"\ncriterion {result.number:2d}  {verdict}  {result.name}  "
            f"({elapsed:.1f}s)",
            end="",
            flush=True,
        )
    assert result.passed, f"criterion {result.number}: {result.detail}"
    assert elapsed < TIME_LIMIT, (
        f"criterion {result.number} took {elapsed:.1f}s "
        f"(limit {TIME_LIMIT:.0f}s)"
    )
