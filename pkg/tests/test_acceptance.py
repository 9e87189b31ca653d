"""Acceptance criteria 1-10: one PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py -v -s`` (or ``python3
tests/test_acceptance.py``) to see the lines; tolerances and time budgets
are pinned inside ``polygap.verify``.
"""
import sys

import pytest

from polygap.verify import CHECKS, run_check


@pytest.mark.parametrize("number", [n for n, _, _ in CHECKS], ids=[f"criterion_{n}" for n, _, _ in CHECKS])
def test_criterion(number, capsys):
    result = run_check(number)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail


if __name__ == "__main__":
    results = [run_check(n) for n, _, _ in CHECKS]
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
