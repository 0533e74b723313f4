"""Brute-force oracle: ground truth enumeration and coverage diagnosis."""
from __future__ import annotations

from dpweights.classify import classify_index, expand_classification
from dpweights.core import Quintuple
from dpweights.oracle import CoverageDiagnosis, brute_force, type_coverage


class TestBruteForce:
    def test_index1_bound20(self):
        hits = brute_force(1, 20)
        assert len(hits) == 16
        got = {q.astuple() for q in hits}
        assert (1, 1, 1, 1, 3) in got
        assert (2, 3, 3, 5, 12) in got
        assert (1, 3, 5, 8, 16) in got
        assert (1, 1, 2, 2, 5) not in got

    def test_sorted_and_within_bound(self):
        hits = brute_force(2, 25)
        assert hits == sorted(hits)
        assert all(q.a3 <= 25 and q.index == 2 for q in hits)

    def test_covered_edge_member_found(self):
        got = {q.astuple() for q in brute_force(5, 10)}
        assert (6, 7, 9, 10, 27) in got

    def test_large_index_member(self):
        got = {q.astuple() for q in brute_force(7, 60)}
        assert (11, 13, 21, 38, 76) in got

    def test_agrees_with_classifier_small(self):
        for index in (1, 2, 3, 4):
            oracle = set(brute_force(index, 40))
            emitted = set(expand_classification(classify_index(index), 40))
            assert oracle == emitted, index


class TestTypeCoverage:
    def test_every_hit_covered_for_small_indices(self):
        for index in range(1, 7):
            uncovered = [q for q, diag in type_coverage(index, 60) if not diag.covered]
            assert uncovered == [], index

    def test_diagnosis_fields(self):
        rows = dict(type_coverage(4, 20))
        diag = rows[Quintuple(2, 4, 5, 7, 14)]
        assert diag.types == {"II"}
        assert diag.series_class == 4
        assert diag.covered

    def test_covered_property(self):
        blank = CoverageDiagnosis(frozenset(), None, False)
        assert not blank.covered
        assert CoverageDiagnosis(frozenset({"I"}), None, False).covered
        assert CoverageDiagnosis(frozenset(), 2, False).covered
        assert CoverageDiagnosis(frozenset(), None, True).covered
