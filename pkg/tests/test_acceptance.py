"""Acceptance suite: every criterion runs at its stated scale, exactly.

Each test executes one criterion through the suite module and prints a
one-line pass/fail summary (visible with pytest -s or in the captured
output on failure).  All comparisons are exact; there are no tolerances.
"""

import pytest

from qhact.suite import CRITERIA, run_suite


@pytest.mark.parametrize("cid", sorted(CRITERIA))
def test_criterion(cid):
    res = run_suite([cid])[0]
    line = f"criterion {res['id']:2d} [{res['status'].upper():4s}] {res['name']}: {res['detail']}"
    print(line)
    assert res["status"] == "pass", line
