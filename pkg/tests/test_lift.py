"""Lifting decompositions from A(0) to A(x) over truncated power series."""

import itertools
import random

import pytest

from veryclean import LiftResult, Mat2, Tri2Element, find_root_pair, mat2_lift, tri2_lift, truncate_further
from veryclean.decide import mat2_very_clean, tri2_very_clean
from veryclean.errors import InvariantViolation, NotVeryClean, NotVeryCleanAtZero, RingMismatch
from veryclean.matrices import constant_term
from veryclean.oracle import random_series_matrix
from veryclean.parsing import parse_mat2, parse_tri2
from veryclean.rings import PS, QuotPoly, Zloc, Zmod

S = PS(Zmod(4), 2)


def test_example_lift():
    A = parse_mat2("[[3,2+2x],[2+x,3x]]", S)
    res = mat2_lift(A)
    assert res.E == parse_mat2("[[2x,2],[2+3x,1+2x]]", S)
    assert res.sign == -1
    assert res.U == parse_mat2("[[3+2x,2x],[2x,3+x]]", S)
    assert all(res.checks().values())
    z4 = Zmod(4)
    assert constant_term(res.E) == Mat2.from_rows(z4, [[0, 2], [2, 1]])
    pair = find_root_pair(A.char_poly())
    assert pair.alpha + pair.beta == A.trace() and pair.alpha * pair.beta == A.det()


def test_example_lift_is_the_only_nontrivial_idempotent():
    # independent check: every idempotent of M_2((Z/4)[x]/(x^2)) commuting with A
    A = parse_mat2("[[3,2+2x],[2+x,3x]]", S)
    elems = S.elements()
    commuting = []
    for entries in itertools.product(elems, repeat=4):
        E = Mat2(*entries)
        if E * E == E and E * A == A * E:
            commuting.append(E)
    nontrivial = [E for E in commuting if E not in (Mat2.zero(S), Mat2.identity(S))]
    identity = Mat2.identity(S)
    witnesses = [E for E in nontrivial if (A - E).is_unit()]
    assert witnesses == [mat2_lift(A).E]
    assert len(nontrivial) == 2 and identity - witnesses[0] in nontrivial


def test_constant_unit_lifts_with_zero():
    A = from_constant(Mat2.from_rows(Zmod(4), [[1, 2], [0, 3]]))
    res = mat2_lift(A)
    assert res.E == Mat2.zero(S) and res.sign == -1 and res.U == A


def from_constant(m):
    return Mat2(*(S(e.payload) for e in m.entries()))


def test_not_very_clean_at_zero():
    ring = PS(Zloc(2), 2)
    A = parse_mat2("[[0,-2],[1,-1]]", ring)
    with pytest.raises(NotVeryCleanAtZero):
        mat2_lift(A)


def test_lift_requires_series_ring():
    with pytest.raises(RingMismatch):
        mat2_lift(Mat2.identity(Zmod(4)))
    with pytest.raises(RingMismatch):
        mat2_lift(Mat2.identity(QuotPoly(2, 2)))


def test_tri2_lift_examples():
    A = parse_tri2("[[1,1+x],[0,2]]", S)
    res = tri2_lift(A)
    assert constant_term(res.E) == Tri2Element.from_rows(Zmod(4), [[0, 1], [0, 1]])
    assert res.sign == 1 and all(res.checks().values())
    A = parse_tri2("[[1+x,0],[0,3]]", S)
    res = tri2_lift(A)
    assert res.E == Tri2Element.zero(S) and res.sign == -1 and res.U == A
    A = parse_tri2("[[2,x],[0,2+2x]]", S)
    res = tri2_lift(A)
    assert res.E == Tri2Element.identity(S) and res.sign == -1
    assert res.U == A - Tri2Element.identity(S)


@pytest.mark.parametrize("ring", [PS(Zmod(4), 3), PS(Zmod(9), 3), PS(Zloc(3), 4), PS(QuotPoly(2, 2), 2)], ids=str)
def test_tri2_lift_matches_direct(ring):
    rng = random.Random(21)
    for _ in range(150):
        A = Tri2Element(*(ring.random_element(rng, 30) for _ in range(3)))
        res = tri2_lift(A)
        assert all(res.checks().values())
        direct = tri2_very_clean(A)
        assert direct.sign == res.sign
        assert constant_term(direct.idempotent) == constant_term(res.E)


@pytest.mark.parametrize("ring", [PS(Zmod(4), 3), PS(Zmod(8), 2), PS(QuotPoly(2, 2), 3), PS(Zloc(2), 3)], ids=str)
def test_mat2_lift_naturality(ring):
    rng = random.Random(8)
    for _ in range(150):
        A = Mat2(*(ring.random_element(rng, 30) for _ in range(4)))
        a0 = constant_term(A)
        try:
            w = mat2_very_clean(a0)
        except NotVeryClean:
            with pytest.raises(NotVeryCleanAtZero):
                mat2_lift(A)
            continue
        res = mat2_lift(A)
        assert all(res.checks().values())
        assert constant_term(res.E) == w.idempotent and res.sign == w.sign


def test_truncate_further():
    A = parse_mat2("[[3,2+2x],[2+x,3x]]", S)
    res = mat2_lift(A)
    assert truncate_further(res, 2) == res
    low = truncate_further(res, 1)
    assert low.order == 1
    w = res.constant_witness()
    assert [e.payload[0] for e in low.E.entries()] == [e.payload for e in w.idempotent.entries()]
    rng = random.Random(2)
    for _ in range(20):
        try:
            deep = mat2_lift(random_series_matrix(PS(Zmod(4), 4), rng))
        except NotVeryCleanAtZero:
            continue
        for m in (1, 2, 3, 4):
            assert all(truncate_further(deep, m).checks().values())
    with pytest.raises(ValueError):
        truncate_further(res, 0)


def test_lift_result_rejects_bad_data():
    A = parse_mat2("[[3,2+2x],[2+x,3x]]", S)
    with pytest.raises(InvariantViolation):
        LiftResult(A, Mat2.identity(S), -1, A)
