"""Acceptance criteria 1-10, one test each; every test prints a pass/fail line."""

import pytest

from filtrated_k.verify import CRITERIA, RingCache


@pytest.fixture(scope="module")
def rings():
    return RingCache()


@pytest.mark.parametrize("number,tag,title,fn", CRITERIA, ids=[f"{n}-{t}" for n, t, _, _ in CRITERIA])
def test_criterion(number, tag, title, fn, rings, capsys):
    ok, computed, expected, details = fn(rings)
    with capsys.disabled():
        status = "PASS" if ok else "FAIL"
        print(f"\n[{status}] criterion {number} ({tag}): {title}\n    computed: {computed}\n    expected: {expected}")
        for d in details:
            print(f"    {d}")
    assert ok, details
