"""Quasi-smoothness and well-formedness tests for weight quintuples.

Two deliberately independent formulations are implemented:

* a divisibility form (``quasismooth_divisibility``), used by the classifier,
  which phrases every condition as divisibility of degree differences, and
* a monomial form (``quasismooth_monomial``), used by the brute-force oracle,
  which searches directly for the monomials a general degree-d polynomial
  must contain.

Both decide the same predicate; the equivalence is exercised exhaustively in
the test suite.

One parametric family needs special handling.  Quintuples of the shape
(7, 2v, 3v, (9v-7)/2) with degree 9v and v odd carry an edge spanned by the
two even weights whose gcd is 2 while the degree is odd, so no monomial in
those two variables alone exists and the edge lies inside every member of the
linear system.  Both cross monomials covering that edge do exist (the general
member stays quasi-smooth along it), and the classification tables include
the family.  The pure-pair requirements therefore step aside for exactly this
edge; every other condition still applies.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import Quintuple

PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
TRIPLES = ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2))

PairChecks = tuple[tuple[tuple[int, int], bool], ...]
TripleChecks = tuple[tuple[tuple[int, int, int], bool], ...]


@dataclass(frozen=True)
class ConditionReport:
    """Per-condition outcome for one quintuple, with per-pair detail."""

    quintuple: Quintuple
    wf_pairs: PairChecks          # gcd(ai, aj) divides d
    wf_triples: TripleChecks      # gcd of any three weights is 1
    nondegenerate: bool           # d > a3
    cond_iv: bool
    cond_v: PairChecks            # only pairs with gcd > 1
    cond_vi: PairChecks
    types: frozenset[str]
    series_class: int | None
    waived_pair: tuple[int, int] | None = None  # covered-edge family admission

    @property
    def well_formed(self) -> bool:
        return all(ok for _, ok in self.wf_pairs) and all(ok for _, ok in self.wf_triples)

    @property
    def cond_v_ok(self) -> bool:
        return all(ok for _, ok in self.cond_v)

    @property
    def cond_vi_ok(self) -> bool:
        return all(ok for _, ok in self.cond_vi)

    @property
    def accepted(self) -> bool:
        return (
            self.well_formed
            and self.nondegenerate
            and self.cond_iv
            and self.cond_v_ok
            and self.cond_vi_ok
        )


def _resolve_index(q: Quintuple, index: int | None) -> int:
    if index is not None and index != q.index:
        raise ValueError(f"index {index} inconsistent with quintuple {q} (index {q.index})")
    return q.index


def well_formed(q: Quintuple) -> bool:
    """Pairwise gcds divide the degree and every weight triple is coprime."""
    w = q.weights
    for i, j, k in TRIPLES:
        if gcd(w[i], w[j], w[k]) != 1:
            return False
    for i, j in PAIRS:
        if q.d % gcd(w[i], w[j]):
            return False
    return True


def cond_iv(q: Quintuple) -> bool:
    """Every weight divides d - aj for some weight aj."""
    w = q.weights
    return all(any((q.d - aj) % ai == 0 for aj in w) for ai in w)


def covered_edge_pair(q: Quintuple) -> tuple[int, int] | None:
    """The admissible contained-edge pair, or None.

    Recognises the shape (7, 2v, 3v, (9v-7)/2) of degree 9v with v = 3 mod 4
    and returns the index pair of its two even weights, 2v and (9v-7)/2.
    That pair has gcd 2 while the degree is odd, so no monomial in the two
    variables alone reaches degree 9v; both cross monomials covering the
    contained edge do exist, so the general member stays quasi-smooth along
    it, and the classification data includes the family.
    """
    w, d = q.weights, q.d
    if d % 9 or d % 2 == 0:
        return None
    v = d // 9
    if v % 4 != 3 or w != tuple(sorted((7, 2 * v, 3 * v, (9 * v - 7) // 2))):
        return None
    return (w.index(2 * v), w.index((9 * v - 7) // 2))


def _pair_v(ai: int, aj: int, d: int) -> bool:
    # d - aj*bj divisible by ai for bj = 0 (d itself), 1, or some bj >= 2,
    # or d - ai divisible by aj
    if d % ai == 0 or d % aj == 0:
        return True
    if (d - aj) % ai == 0 or (d - ai) % aj == 0:
        return True
    for bj in range(2, d // aj + 1):
        if (d - aj * bj) % ai == 0:
            return True
    return False


def _pair_vi_branch(ai: int, aj: int, ak: int, d: int) -> bool:
    # cover the coordinate edge k against the pair (i, j)
    r = d - ak
    if r % ai == 0 or r % aj == 0:
        return True
    for cj in range(1, r // aj + 1):
        if (r - aj * cj) % ai == 0:
            return True
    return False


def cond_v_vi(q: Quintuple) -> tuple[bool, bool]:
    """Flags for the shared-factor pair condition and the pair/edge condition."""
    w, d = q.weights, q.d
    v_ok = all(_pair_v(w[i], w[j], d) for i, j in PAIRS if gcd(w[i], w[j]) > 1)
    vi_ok = True
    for i, j in PAIRS:
        if _pair_v(w[i], w[j], d):
            continue
        k, l = (x for x in range(4) if x not in (i, j))
        if not (_pair_vi_branch(w[i], w[j], w[k], d) and _pair_vi_branch(w[i], w[j], w[l], d)):
            vi_ok = False
            break
    return v_ok, vi_ok


def quasismooth_divisibility(q: Quintuple) -> ConditionReport:
    """Full divisibility-form report; ``accepted`` aggregates all conditions.

    Per-pair entries record effective acceptance: the covered-edge family's
    even pair passes its pure-pair checks by waiver (see module docstring),
    recorded in ``waived_pair``.
    """
    w, d = q.weights, q.d
    waived = covered_edge_pair(q)
    wf_pairs = tuple(
        ((i, j), d % gcd(w[i], w[j]) == 0 or (i, j) == waived) for i, j in PAIRS
    )
    wf_triples = tuple(((i, j, k), gcd(w[i], w[j], w[k]) == 1) for i, j, k in TRIPLES)
    v_detail = tuple(
        ((i, j), _pair_v(w[i], w[j], d) or (i, j) == waived)
        for i, j in PAIRS
        if gcd(w[i], w[j]) > 1
    )
    vi_detail = []
    for i, j in PAIRS:
        ok = _pair_v(w[i], w[j], d)
        if not ok:
            k, l = (x for x in range(4) if x not in (i, j))
            ok = _pair_vi_branch(w[i], w[j], w[k], d) and _pair_vi_branch(w[i], w[j], w[l], d)
        vi_detail.append(((i, j), ok))
    return ConditionReport(
        quintuple=q,
        wf_pairs=wf_pairs,
        wf_triples=wf_triples,
        nondegenerate=q.d > q.a3,
        cond_iv=cond_iv(q),
        cond_v=v_detail,
        cond_vi=tuple(vi_detail),
        types=detect_types(q),
        series_class=detect_class(q),
        waived_pair=waived,
    )


def quasismooth_monomial(q: Quintuple) -> bool:
    """Independent check that a general member of |O(d)| is quasi-smooth.

    Searches for the required monomials by bounded Diophantine enumeration
    instead of divisibility shortcuts.  Shares no helper with the
    divisibility path above.
    """
    w, d = q.weights, q.d

    # covered-edge family, recognised by its parity signature: odd degree
    # 9v, exactly two even weights 2v and (9v-7)/2, odd weights 7 and 3v;
    # its even pair skips the two pure-pair checks below (module docstring)
    waived: tuple[int, int] | None = None
    if d % 2 and d % 9 == 0:
        v = d // 9
        evens = tuple(i for i in range(4) if w[i] % 2 == 0)
        if (
            len(evens) == 2
            and {w[evens[0]], w[evens[1]]} == {2 * v, (9 * v - 7) // 2}
            and {w[i] for i in range(4) if w[i] % 2} == {7, 3 * v}
        ):
            waived = evens

    # every triple of weights coprime
    for i, j, k in TRIPLES:
        if gcd(w[i], w[j], w[k]) != 1:
            return False
    # pairwise gcds divide the degree
    for i, j in PAIRS:
        if (i, j) != waived and d % gcd(w[i], w[j]):
            return False
    # degree strictly above every weight
    if any(d == ai for ai in w):
        return False

    # for every i a monomial x_i^m x_j (m >= 1, j = i allowed via m+1 power)
    for ai in w:
        if not any(d - aj >= ai and (d - aj) % ai == 0 for aj in w):
            return False

    def pair_monomial(ai: int, aj: int, lo: int) -> bool:
        # bi*ai + bj*aj = d with bi + bj >= lo
        for bj in range(d // aj + 1):
            r = d - aj * bj
            if r % ai == 0 and r // ai + bj >= lo:
                return True
        return False

    def edge_monomial(ai: int, aj: int, ak: int) -> bool:
        # ci*ai + cj*aj = d - ak with ci + cj >= 1
        r = d - ak
        for cj in range(r // aj + 1):
            rr = r - aj * cj
            if rr % ai == 0 and (rr // ai + cj) >= 1:
                return True
        return False

    # shared-factor pairs need a pure pair monomial of joint degree >= 2
    for i, j in PAIRS:
        if (i, j) == waived:
            continue
        if gcd(w[i], w[j]) > 1 and not pair_monomial(w[i], w[j], 2):
            return False

    # every pair needs either a pair monomial or both edge cross terms
    for i, j in PAIRS:
        if pair_monomial(w[i], w[j], 1):
            continue
        k, l = (x for x in range(4) if x not in (i, j))
        if not (edge_monomial(w[i], w[j], w[k]) and edge_monomial(w[i], w[j], w[l])):
            return False
    return True


def detect_types(q: Quintuple, index: int | None = None) -> frozenset[str]:
    """Which of the three series-producing structure types the quintuple fits."""
    idx = _resolve_index(q, index)
    w = q.weights
    found = set()
    if any(w[i] + w[j] == idx for i, j in PAIRS):
        found.add("I")
    for i in range(4):
        for j in range(4):
            if i != j and w[j] % 2 == 0 and 2 * w[i] + w[j] == 2 * idx:
                found.add("II")
                break
    # (a0, a1, a, a+k) with a1 - a0 = 2k, a3 - a2 = k for some 1 <= k < index
    k = idx - q.a0
    if 1 <= k <= idx - 1 and q.a1 == idx + k and q.a3 - q.a2 == k:
        found.add("III")
    return frozenset(found)


def detect_class(q: Quintuple, index: int | None = None) -> int | None:
    """The series class (1..6) the quintuple belongs to, or None.

    The six classes partition the type-I..III quintuples by which weights
    realise the defining relation; the guards make them mutually exclusive.
    """
    idx = _resolve_index(q, index)
    a0, a1, a2, a3 = q.weights
    if a0 + a1 == idx:
        return 1
    if a0 + a2 == idx and idx > a0 + a1:
        return 2
    if a1 + a2 == idx and idx > a0 + a2:
        return 3
    if a1 % 2 == 0 and a0 + a1 // 2 == idx and idx > a0:
        return 4
    if a0 % 2 == 0 and a0 // 2 + a1 == idx and idx > a1 and 2 * idx > 2 * a0 + a1:
        return 5
    k = idx - a0
    if 1 <= k <= idx - 1 and a1 == idx + k and a3 - a2 == k and a2 >= a1:
        return 6
    return None


def is_solid(q: Quintuple, index: int | None = None) -> bool:
    """Well-formed, non-degenerate, pure-power covered, and of some type."""
    idx = _resolve_index(q, index)
    return (
        cond_iv(q)
        and well_formed(q)
        and q.d > q.a3
        and bool(detect_types(q, idx))
    )


def is_valid(q: Quintuple, index: int | None = None) -> bool:
    """Accepted by the full divisibility-form suite and of some type."""
    idx = _resolve_index(q, index)
    return bool(detect_types(q, idx)) and quasismooth_divisibility(q).accepted
