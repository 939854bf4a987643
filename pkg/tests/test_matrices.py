"""2x2 full and upper-triangular matrices."""

import itertools
import random

import pytest

from veryclean import Mat2, Tri2Element, mat2_char_poly, mat2_is_unit, mat2_try_inverse, tri2_is_unit
from veryclean.errors import NotAUnit, RingMismatch
from veryclean.matrices import from_series_coefficients, series_coefficients, truncate_matrix
from veryclean.parsing import parse_mat2
from veryclean.rings import PS, QuotPoly, Zloc, Zmod


def all_mat2(ring):
    return [Mat2(*entries) for entries in itertools.product(ring.elements(), repeat=4)]


def coeffs(poly):
    return [str(c) for c in poly.coeffs]


def test_char_poly_examples():
    z4 = Zmod(4)
    h = mat2_char_poly(Mat2.from_rows(z4, [[3, 2], [2, 0]]))
    assert coeffs(h) == ["0", "1"]  # t^2 - 3t = t^2 + t + 0 mod 4
    z3 = Zloc(3)
    h = mat2_char_poly(Mat2.from_rows(z3, [[1, 3], [-1, 0]]))
    assert coeffs(h) == ["3", "-1"]
    for ring in (z4, z3, QuotPoly(2, 2), PS(Zmod(4), 2)):
        h = mat2_char_poly(Mat2.identity(ring))
        assert h.coeffs == (ring(1), ring(-2))


def test_unit_examples():
    z3 = Zloc(3)
    phi = Mat2.from_rows(z3, [[2, 3], [-1, 1]])
    assert mat2_is_unit(phi) and phi.det() == z3(5)
    assert phi * mat2_try_inverse(phi) == Mat2.identity(z3)
    z4 = Zmod(4)
    with pytest.raises(NotAUnit):
        mat2_try_inverse(Mat2.from_rows(z4, [[1, 0], [0, 2]]))
    assert mat2_try_inverse(Mat2.identity(z4)) == Mat2.identity(z4)


def test_tri2_unit_examples():
    z4 = Zmod(4)
    assert tri2_is_unit(Tri2Element.from_rows(z4, [[1, 2], [0, 3]]))
    assert not tri2_is_unit(Tri2Element.from_rows(z4, [[2, 1], [0, 1]]))
    assert tri2_is_unit(Tri2Element.from_rows(Zloc(3), [[1, 5], [0, 1]]))


def test_det_multiplicative_exhaustive_z2():
    mats = all_mat2(Zmod(2))
    assert len(mats) == 16
    for p, q in itertools.product(mats, repeat=2):
        assert (p * q).det() == p.det() * q.det()


@pytest.mark.parametrize("ring", [Zmod(9), Zloc(3), PS(Zmod(4), 3)], ids=str)
def test_det_multiplicative_seeded(ring):
    rng = random.Random(1)
    for _ in range(300):
        p = Mat2(*(ring.random_element(rng, 50) for _ in range(4)))
        q = Mat2(*(ring.random_element(rng, 50) for _ in range(4)))
        assert (p * q).det() == p.det() * q.det()


def test_cayley_hamilton_exhaustive_z4():
    z4 = Zmod(4)
    zero = Mat2.zero(z4)
    for phi in all_mat2(z4):
        assert phi * phi - phi * phi.trace() + Mat2.identity(z4) * phi.det() == zero
        h = phi.char_poly()
        assert h.coeffs == (phi.det(), -phi.trace())


def test_unit_matches_brute_force_z2():
    mats = all_mat2(Zmod(2))
    one = Mat2.identity(Zmod(2))
    for phi in mats:
        has_inverse = any(phi * psi == one == psi * phi for psi in mats)
        assert mat2_is_unit(phi) == has_inverse


def test_tri2_closed_and_units_z4():
    z4 = Zmod(4)
    elems = [Tri2Element(*t) for t in itertools.product(z4.elements(), repeat=3)]
    assert len(elems) == 64
    one = Tri2Element.identity(z4)
    for r in elems:
        has_inverse = any(r * s == one == s * r for s in elems)
        assert tri2_is_unit(r) == has_inverse
        if has_inverse:
            assert r * r.inverse() == one
    for r, s in itertools.product(elems[::5], repeat=2):
        prod = (r * s).as_mat2()
        assert prod.a21 == 0
        assert prod == r.as_mat2() * s.as_mat2()


def test_tri2_rejects_lower_entry():
    with pytest.raises(ValueError):
        Tri2Element.from_rows(Zmod(4), [[1, 0], [1, 1]])


def test_mixed_rings_rejected():
    with pytest.raises(RingMismatch):
        Mat2.identity(Zmod(4)) * Mat2.identity(Zmod(8))


def test_series_matrix_views_agree():
    s = PS(Zmod(4), 2)
    A = parse_mat2("[[3,2+2x],[2+x,3x]]", s)
    c = series_coefficients(A)
    z4 = Zmod(4)
    assert c[0] == Mat2.from_rows(z4, [[3, 2], [2, 0]])
    assert c[1] == Mat2.from_rows(z4, [[0, 2], [1, 3]])
    assert from_series_coefficients(s, c) == A
    assert truncate_matrix(A, 1) == Mat2.from_rows(PS(Zmod(4), 1), [[3, 2], [2, 0]])
