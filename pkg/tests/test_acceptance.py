"""Acceptance gate: ten end-to-end criteria, one pass line each.

Every test prints a single "PASS criterion N" line on success so a plain
pytest -v run doubles as the acceptance checklist.  Stated time budgets are
asserted, not just observed.
"""
from __future__ import annotations

import time
from fractions import Fraction
from itertools import combinations_with_replacement

from golden_tables import GOLDEN, expand_golden

from dpweights.classify import classify_index, expand_classification
from dpweights.conditions import (
    detect_class,
    is_solid,
    is_valid,
    quasismooth_divisibility,
    quasismooth_monomial,
)
from dpweights.core import Quintuple
from dpweights.obstructions import obstruction_report
from dpweights.oracle import brute_force
from dpweights.series import expand


def exhaustive_range(bound: int = 30, max_index: int = 8):
    """Every ordered quintuple with a3 <= bound and index in 1..max_index."""
    for w in combinations_with_replacement(range(1, bound + 1), 4):
        for d in range(max(w[3] + 1, sum(w) - max_index), sum(w)):
            yield Quintuple(*w, d)


def _pass(n: int, label: str, started: float) -> None:
    print(f"PASS criterion {n}: {label} ({time.monotonic() - started:.1f}s)")


def test_criterion_01_index1_exactness():
    t0 = time.monotonic()
    c = classify_index(1)
    assert c.two_param == ()
    assert len(c.one_param) == 1
    series = c.one_param[0]
    expected = {(2, 2 * m + 1, 2 * m + 1, 4 * m + 1, 8 * m + 4) for m in range(1, 51)}
    got = {q.astuple() for q in expand(series, 4 * 50 + 1)}
    assert got == expected
    assert {q.astuple() for q in c.sporadic} == set(GOLDEN[1]["sporadic"])
    assert len(c.sporadic) == 22
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0, f"criterion 1 exceeded 1s: {elapsed:.2f}s"
    _pass(1, "index-1 classification is exact", t0)


def test_criterion_02_golden_tables_2_to_6():
    t0 = time.monotonic()
    for index in range(2, 7):
        mine = {q.astuple() for q in expand_classification(classify_index(index), 150)}
        assert mine == expand_golden(index, 150), f"index {index} diverges from golden tables"
    elapsed = time.monotonic() - t0
    assert elapsed < 30.0, f"criterion 2 exceeded 30s: {elapsed:.2f}s"
    _pass(2, "indices 2..6 match the golden tables at bound 150", t0)


def test_criterion_03_oracle_equivalence():
    t0 = time.monotonic()
    sizes = {}
    for index in range(1, 9):
        oracle = set(brute_force(index, 60))
        emitted = set(expand_classification(classify_index(index), 60))
        assert oracle == emitted, f"index {index}: classifier disagrees with brute force"
        sizes[index] = len(oracle)
    assert sizes == {1: 34, 2: 2037, 3: 486, 4: 1202, 5: 394, 6: 1449, 7: 312, 8: 1011}
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0, f"criterion 3 exceeded 60s: {elapsed:.2f}s"
    _pass(3, "oracle equivalence for indices 1..8 at bound 60", t0)


def test_criterion_04_condition_form_equivalence():
    t0 = time.monotonic()
    checked = 0
    for q in exhaustive_range():
        assert quasismooth_monomial(q) == quasismooth_divisibility(q).accepted, q
        checked += 1
    assert checked > 300_000
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0, f"criterion 4 exceeded 60s: {elapsed:.2f}s"
    _pass(4, f"monomial and divisibility forms agree on {checked} quintuples", t0)


def test_criterion_05_solid_implies_valid_and_classed():
    t0 = time.monotonic()
    solids = 0
    for q in exhaustive_range():
        if is_solid(q):
            solids += 1
            assert is_valid(q), f"solid but not valid: {q}"
            assert detect_class(q) is not None, f"solid but classless: {q}"
    assert solids > 0
    _pass(5, f"every one of {solids} solid quintuples is valid and classed", t0)


def test_criterion_06_series_closure():
    t0 = time.monotonic()
    for index in range(1, 9):
        for s in classify_index(index).all_series:
            reach = max(step[3] for step in s.steps)
            members = expand(s, s.base.a3 + 8 * max(reach, 1))
            assert len(members) >= 5, (index, s.base)
            for q in sorted(members)[:5]:
                assert quasismooth_divisibility(q).accepted, (index, s.base, q)
    _pass(6, "first five members of every emitted series pass the suite", t0)


def test_criterion_07_halfpoint_class_structure():
    t0 = time.monotonic()
    found = 0
    for q in exhaustive_range():
        cls = detect_class(q)
        if cls in (4, 5) and is_solid(q):
            found += 1
            even = q.a1 if cls == 4 else q.a0
            assert q.d == 2 * q.a3, f"class {cls} quintuple without doubled degree: {q}"
            assert q.a3 == even // 2 + q.a2, f"class {cls} top weight off: {q}"
    assert found > 0
    _pass(7, f"degree and top-weight structure holds for {found} class-4/5 solids", t0)


def test_criterion_08_symmetric_shape_scan():
    t0 = time.monotonic()
    hits = set()
    for index in range(1, 21):
        # the shape is an ordered tuple, so a >= index
        for a in range(index, 201):
            q = Quintuple(index, index, a, a, 2 * a + index)
            assert q.index == index
            if quasismooth_monomial(q) and quasismooth_divisibility(q).accepted:
                hits.add(q.astuple())
    assert hits == {(1, 1, 1, 1, 3)}
    _pass(8, "shape (I,I,a,a,2a+I) admits only (1,1,1,1,3)", t0)


def test_criterion_09_obstruction_examples():
    t0 = time.monotonic()
    cases = [
        ((1, 3, 4, 8, 12), Fraction(16), True, True),
        ((1, 3, 7, 8, 15), Fraction(80, 7), True, False),
        ((2, 2, 3, 7, 10), Fraction(40, 3), False, True),
        ((2, 2, 3, 3, 6), Fraction(8), False, False),
    ]
    for t, product, gmsy, spotti in cases:
        r = obstruction_report(Quintuple(*t))
        assert r.k_squared * r.group_order == product, t
        assert r.gmsy is gmsy and r.spotti is spotti, t
    _pass(9, "all four reference obstruction reports are exact", t0)


def test_criterion_10_large_index_termination():
    t0 = time.monotonic()
    c = classify_index(30)
    assert c.index == 30
    assert c.all_series and c.sporadic
    elapsed = time.monotonic() - t0
    assert elapsed < 300.0, f"criterion 10 exceeded 300s: {elapsed:.2f}s"
    _pass(10, "index 30 classifies inside the time budget", t0)
