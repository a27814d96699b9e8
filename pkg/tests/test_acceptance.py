"""The acceptance gate: one test per end-to-end check, one printed line each.

Run with ``pytest -rA tests/test_acceptance.py`` (or ``-s``) to see the
PASS/FAIL lines; ``chiprank verify all`` prints the same table.
"""

import time

import pytest

from chiprank import acceptance


@pytest.mark.parametrize(
    "name,fn", acceptance.CHECKS, ids=[name.split()[0] for name, _ in acceptance.CHECKS]
)
def test_acceptance(name, fn):
    t0 = time.perf_counter()
    ok, detail = fn(acceptance.DEFAULT_SEED)
    secs = time.perf_counter() - t0
    print(f"{'PASS' if ok else 'FAIL'}  {name}  ({secs:.2f}s)  {detail}")
    assert ok, f"{name}: {detail}"
