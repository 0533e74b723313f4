"""Brute-force ground truth, independent of the series machinery.

``brute_force`` enumerates ordered weight systems directly and keeps those
passing the monomial-form conditions.  It never consults series classes or
tables, so its output is a genuinely independent check of the classifier.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .conditions import detect_class, detect_types, quasismooth_monomial
from .core import Quintuple


def _divisor_table(limit: int) -> list[list[int]]:
    divs: list[list[int]] = [[] for _ in range(limit + 1)]
    for a in range(1, limit + 1):
        for b in range(a, limit + 1, a):
            divs[b].append(a)
    return divs


def brute_force(index: int, bound: int) -> list[Quintuple]:
    """All quintuples of the given index with a3 <= bound, lexicographically.

    Loops a0 <= a1 <= a2 and prunes a3 via the pure-power condition for the
    top weight: some monomial x3^m x_j must reach degree d, which forces a3
    to divide d - a_j.  Only those candidates see the full monomial check.
    """
    if index < 1 or bound < 1:
        raise ValueError(f"index and bound must be positive: index={index} bound={bound}")
    divisors = _divisor_table(3 * bound)
    hits: list[Quintuple] = []
    for a0 in range(1, bound + 1):
        for a1 in range(a0, bound + 1):
            for a2 in range(a1, bound + 1):
                if gcd(a0, a1, a2) != 1:
                    continue  # a coprime triple is required no matter what a3 is
                s = a0 + a1 + a2 - index  # equals d - a3; positive iff d > a3
                if s < 1:
                    continue
                full_scan = False
                cands: set[int] = set()
                for aj in (a0, a1, a2):
                    t = s - aj  # d - aj = t + a3
                    if t == 0:
                        full_scan = True  # x3 * x_j has degree d for every a3
                        break
                    if t > 0:
                        cands.update(a3 for a3 in divisors[t] if a3 >= a2)
                if full_scan:
                    a3_range = range(a2, bound + 1)
                elif s >= a2:
                    cands.update(a3 for a3 in divisors[s] if a3 >= a2)  # pure power of x3
                    a3_range = sorted(c for c in cands if c <= bound)
                else:
                    a3_range = sorted(c for c in cands if c <= bound)
                for a3 in a3_range:
                    q = Quintuple(a0, a1, a2, a3, s + a3)
                    if quasismooth_monomial(q):
                        hits.append(q)
    return sorted(hits)


@dataclass(frozen=True)
class CoverageDiagnosis:
    """How one brute-force hit is explained by the structured classification."""

    types: frozenset[str]
    series_class: int | None
    table_covered: bool

    @property
    def covered(self) -> bool:
        return bool(self.types) or self.series_class is not None or self.table_covered


def type_coverage(index: int, bound: int) -> list[tuple[Quintuple, CoverageDiagnosis]]:
    """Diagnose every brute-force hit: type, series class, table coverage.

    A quintuple flagged uncovered (no type, no class, not in the tables)
    would mark a gap in the classification data.
    """
    from .series import contains  # local import keeps brute_force table-free
    from .tables import instantiate

    table_series, table_sporadic = instantiate(index)
    sporadic_set = set(table_sporadic)
    out = []
    for q in brute_force(index, bound):
        covered = q in sporadic_set or any(contains(s, q) for s in table_series)
        out.append((q, CoverageDiagnosis(detect_types(q), detect_class(q), covered)))
    return out
