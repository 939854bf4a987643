"""Acceptance criteria, each with its time budget.

Every criterion records one PASS/FAIL line (shown at the end of a pytest
run, or printed when this file is executed directly).
"""

import itertools
import random
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from acceptance_log import VERDICTS
from veryclean import (
    Mat2,
    MonicPoly,
    Tri2Element,
    find_root_pair,
    mat2_lift,
    mat2_strongly_clean,
    mat2_very_clean,
    scalar_strongly_clean,
    scalar_very_clean,
    tri2_very_clean,
)
from veryclean.errors import NoSplit, NotStronglyClean, NotVeryClean, NotVeryCleanAtZero
from veryclean.matrices import constant_term, from_series_coefficients
from veryclean.oracle import M2, brute_force_classify, classify_all, decide_agrees, enumerate_structure, random_series_matrix
from veryclean.rings import PS, QuotPoly, Zloc, ZlocCap, Zmod


@contextmanager
def criterion(number, title, budget):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed <= budget
        verdict = "PASS" if ok and within else "FAIL"
        note = "" if within else f" (over budget {budget:g}s)"
        line = f"{verdict} criterion {number}: {title} [{elapsed:.2f}s / {budget:g}s]{note}"
        VERDICTS.append(line)
        print(line)
    assert within, line


def test_criterion_1_companion_over_z3():
    with criterion(1, "[[1,3],[-1,0]] over Z_(3): very clean via +I, not strongly clean", 1.0):
        z3 = Zloc(3)
        phi = Mat2.from_rows(z3, [[1, 3], [-1, 0]])
        w = mat2_very_clean(phi)
        assert w.idempotent == Mat2.identity(z3)
        assert w.sign == 1
        assert w.unit == Mat2.from_rows(z3, [[2, 3], [-1, 1]])
        with pytest.raises(NotStronglyClean):
            mat2_strongly_clean(phi)


def test_criterion_2_z4_series_decomposition():
    with criterion(2, "M_2(Z/4) decomposition and its lift to (Z/4)[x]/(x^2)", 1.0):
        z4 = Zmod(4)
        a0 = Mat2.from_rows(z4, [[3, 2], [2, 0]])
        w = mat2_strongly_clean(a0)
        assert w.idempotent == Mat2.from_rows(z4, [[0, 2], [2, 1]])
        assert w.unit == Mat2.from_rows(z4, [[3, 0], [0, 3]])
        assert w.sign == -1
        s = PS(z4, 2)
        A = Mat2.from_rows(s, [["3", "2+2x"], ["2+x", "3x"]])
        res = mat2_lift(A)
        assert constant_term(res.E) == Mat2.from_rows(z4, [[0, 2], [2, 1]])
        assert res.E * res.E == res.E
        assert res.E * A == A * res.E
        assert A - res.E == res.U and res.U.is_unit()
        assert all(res.checks().values())


# fraction -> (unit, in radical), read off the numerator by hand
DESIGNATED = {
    "9/4": (False, False),
    "15/2": (False, True),
    "6/7": (False, False),
    "13/4": (True, False),
    "5/4": (False, False),
    "7/2": (True, False),
    "45/8": (False, True),
    "1": (True, False),
    "0": (False, True),
    "-30/11": (False, True),
}


def test_criterion_3_semilocal_scalars():
    with criterion(3, "Z_(3) cap Z_(5): 9/4 very clean not strongly clean; units and radical", 1.0):
        cap = ZlocCap(3, 5)
        w = scalar_very_clean(cap("9/4"))
        assert (w.idempotent, w.sign, w.unit) == (cap(1), 1, cap(Fraction(13, 4)))
        with pytest.raises(NotStronglyClean):
            scalar_strongly_clean(cap("9/4"))
        assert len(DESIGNATED) == 10
        for text, (unit, radical) in DESIGNATED.items():
            a = cap(text)
            assert a.is_unit() == unit, text
            assert a.in_jacobson() == radical, text


MANIFEST = [Zmod(2), Zmod(3), Zmod(4), Zmod(5), Zmod(8), Zmod(9), QuotPoly(2, 2), QuotPoly(3, 2)]


def test_criterion_4_oracle_equivalence():
    with criterion(4, "M_2 decisions equal brute force on 8 rings; +I biconditional holds", 300.0):
        for ring in MANIFEST:
            assert decide_agrees(ring, M2) == [], ring
            identity = Mat2.identity(ring)
            statuses = classify_all(ring.descriptor, M2)
            for phi, st in zip(enumerate_structure(ring, M2), statuses):
                assert st.very_clean == (st.strongly_clean or (identity + phi).is_unit()), phi


def _expected_shape(r, p):
    """Witness shape predicted from the diagonal residues alone."""
    a, v, b = (int(c.payload) for c in r.entries())
    a_unit, b_unit = a % p != 0, b % p != 0
    if not a_unit and not b_unit:
        return "identity", -1
    if a_unit and b_unit:
        return "zero", -1
    unit_entry = a if a_unit else b
    if (unit_entry - 1) % p != 0:
        return "identity", -1
    if (unit_entry + 1) % p != 0:
        return "identity", 1
    return ("lower-corner" if a_unit else "upper-corner"), 1


def _shape(e):
    ring = e.ring
    if e == Tri2Element.identity(ring):
        return "identity"
    if e == Tri2Element.zero(ring):
        return "zero"
    if e.a == 0 and e.b == 1:
        return "lower-corner"
    if e.a == 1 and e.b == 0:
        return "upper-corner"
    return "other"


def test_criterion_5_triangular():
    with criterion(5, "T_2(Z/3), T_2(Z/4), T_2(Z/9) all very clean with case-matched witnesses", 30.0):
        for n, p, size in ((3, 3, 27), (4, 2, 64), (9, 3, 729)):
            ring = Zmod(n)
            elems = [Tri2Element(*t) for t in itertools.product(ring.elements(), repeat=3)]
            assert len(elems) == size
            for r in elems:
                w = tri2_very_clean(r)
                assert all(w.checks().values())
                assert (_shape(w.idempotent), w.sign) == _expected_shape(r, p), r


def test_criterion_6_series_lift():
    with criterion(6, "(Z/4)[x]/(x^2): 4096 lifts iff A(0) very clean; 32 exhaustive cross-checks", 600.0):
        z4 = Zmod(4)
        s = PS(z4, 2)
        constants = enumerate_structure(z4, M2)
        status = classify_all(z4.descriptor, M2)
        linear = constants[::17]  # 16 linear terms spread across the enumeration
        assert len(constants) == 256 and len(linear) == 16
        count = 0
        for a0, st in zip(constants, status):
            for c in linear:
                A = from_series_coefficients(s, [a0, c])
                try:
                    res = mat2_lift(A)
                except NotVeryCleanAtZero:
                    assert not st.very_clean, A
                else:
                    assert st.very_clean, A
                    assert all(res.checks().values()), A
                count += 1
        assert count == 4096
        rng = random.Random(0)
        for _ in range(32):
            A = random_series_matrix(s, rng)
            try:
                mat2_lift(A)
                lifted = True
            except NotVeryCleanAtZero:
                lifted = False
            assert lifted == bool(brute_force_classify(A)), A


def test_criterion_7_non_example():
    with criterion(7, "companion of t^2+t+2 over Z_(2) not very clean, nor its series", 1.0):
        z2 = Zloc(2)
        h = MonicPoly(z2, (z2(2), z2(1)))
        phi = Mat2.companion(h)
        assert phi == Mat2.from_rows(z2, [[0, -2], [1, -1]])
        assert not z2.has_half()
        assert not phi.is_unit() and not (Mat2.identity(z2) - phi).is_unit()
        assert h.coeffs[1].payload ** 2 - 4 * h.coeffs[0].payload == -7
        for poly in (h, h.reflect()):
            with pytest.raises(NoSplit):
                find_root_pair(poly)
        with pytest.raises(NotVeryClean):
            mat2_very_clean(phi)
        series = PS(z2, 2)
        A = Mat2.from_rows(series, [[0, -2], [1, -1]])
        with pytest.raises(NotVeryCleanAtZero):
            mat2_lift(A)


def test_criterion_8_det_trichotomy():
    with criterion(8, "1000 random matrices over Z_(3) and Z_(5): a unit among det(phi), det(phi -+ I)", 5.0):
        for p in (3, 5):
            ring = Zloc(p)
            identity = Mat2.identity(ring)
            rng = random.Random(1000 + p)
            failures = 0
            for _ in range(1000):
                phi = Mat2(*(ring.random_element(rng, 10**6) for _ in range(4)))
                dets = (phi.det(), (phi - identity).det(), (phi + identity).det())
                failures += not any(d.is_unit() for d in dets)
            assert failures == 0


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
