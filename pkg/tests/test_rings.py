"""Concrete carriers: construction, canonical forms and series behaviour."""

import itertools
import random
from fractions import Fraction

import pytest

from veryclean import canonicalize, make_ring, series_eval_zero
from veryclean.core import RingDescriptor
from veryclean.errors import InvalidDescriptor, NotInRing
from veryclean.rings import PS, QuotPoly, Zloc, ZlocCap, Zmod, truncate


def test_make_ring_examples():
    z4 = make_ring(RingDescriptor.zmod(4))
    assert z4.size == 4 and z4.is_local
    cap = make_ring(RingDescriptor.zloc_cap(3, 5))
    assert not cap.is_local
    assert cap("15").in_jacobson() and not cap("3").in_jacobson()
    with pytest.raises(InvalidDescriptor):
        RingDescriptor.zloc_cap(2, 4)


@pytest.mark.parametrize(
    "build",
    [
        lambda: RingDescriptor.zloc_cap(2, 3),
        lambda: RingDescriptor.zloc_cap(3, 3),
        lambda: RingDescriptor.zloc(4),
        lambda: RingDescriptor.zmod(12),
        lambda: RingDescriptor.quot_poly(4, 2),
        lambda: RingDescriptor.series(RingDescriptor.zmod(4), 0),
        lambda: RingDescriptor.series(RingDescriptor.series(RingDescriptor.zmod(4), 2), 2),
    ],
)
def test_invalid_descriptors(build):
    with pytest.raises(InvalidDescriptor):
        build()


def test_descriptor_structural_equality():
    a = RingDescriptor.series(RingDescriptor.zmod(4), 2)
    b = RingDescriptor.series(RingDescriptor.zmod(4), 2)
    assert a == b and hash(a) == hash(b)
    assert a != RingDescriptor.series(RingDescriptor.zmod(4), 3)
    assert make_ring(a) is make_ring(b)


def test_canonicalize_examples():
    cap = ZlocCap(3, 5)
    assert canonicalize(Fraction(18, 8), cap) == cap("9/4")
    assert canonicalize(7, Zmod(4)) == Zmod(4)(3)
    with pytest.raises(NotInRing):
        canonicalize(Fraction(1, 3), Zloc(3))
    with pytest.raises(NotInRing):
        ZlocCap(3, 5)("1/10")


def test_canonicalize_idempotent():
    s = PS(Zmod(4), 3)
    for raw in ([5, -1], (7, 2, 9, 1), [Fraction(1, 3), 2]):
        once = canonicalize(raw, s)
        assert canonicalize(once.payload, s) == once
    cap = ZlocCap(3, 5)
    once = canonicalize(Fraction(18, 8), cap)
    assert canonicalize(once.payload, cap) == once


def test_series_eval_zero_examples():
    s = PS(Zmod(4), 2)
    z4 = Zmod(4)
    assert series_eval_zero(s("3+2x")) == z4(3)
    assert series_eval_zero(s("2+2x")) == z4(2)
    assert series_eval_zero(s("x")) == z4(0)


def test_truncation_discards_high_degrees():
    s = PS(Zmod(4), 2)
    x = s("x")
    assert x * x == 0
    assert s("1+x") ** 4 == s("1")  # (1+x)^4 = 1 + 4x + ... = 1 in (Z/4)[[x]]/(x^2)
    s3 = PS(Zmod(4), 3)
    assert truncate(s3("1+2x+3x^2"), 2) == s("1+2x")


def test_constant_term_homomorphism_exhaustive():
    s = PS(Zmod(4), 2)
    elems = s.elements()
    assert len(elems) == 16
    for f, g in itertools.product(elems, repeat=2):
        assert series_eval_zero(f * g) == series_eval_zero(f) * series_eval_zero(g)
        assert series_eval_zero(f + g) == series_eval_zero(f) + series_eval_zero(g)


@pytest.mark.parametrize("ring", [PS(Zmod(4), 2), PS(Zmod(2), 3)], ids=str)
def test_series_unit_iff_constant_unit(ring):
    one = ring.one_element
    elems = ring.elements()
    for f in elems:
        has_inverse = any(f * g == one for g in elems)
        assert f.is_unit() == has_inverse == series_eval_zero(f).is_unit()


@pytest.mark.parametrize("ring", [Zloc(3), Zloc(5), ZlocCap(3, 5), ZlocCap(7, 11)], ids=str)
def test_localized_units_form_a_group(ring):
    rng = random.Random(3)
    one = ring.one_element
    for _ in range(1000):
        a, b = ring.random_element(rng, 300), ring.random_element(rng, 300)
        if a.is_unit() and b.is_unit():
            ab = a * b
            assert ab.is_unit()
            assert ab.inverse() == b.inverse() * a.inverse()
            assert a * a.inverse() == one


def test_radical_law_zloccap():
    cap = ZlocCap(3, 5)
    rng = random.Random(17)
    checked = 0
    while checked < 1000:
        a = cap.random_element(rng, 400)
        if not a.in_jacobson():
            a = a * 15
        r = cap.random_element(rng, 400)
        assert a.in_jacobson()
        assert (1 - a * r).is_unit()
        checked += 1


def test_quotpoly_structure():
    r = QuotPoly(3, 2)
    u = r("u")
    assert u * u == 0 and not u.is_unit() and u.in_jacobson()
    assert (1 + u).inverse() == 1 - u
    assert r.size == 9
    assert str(r("2+2u")) == "2+2*u"


def test_series_inverse_order_by_order():
    s = PS(Zloc(3), 4)
    f = s("1-1/2*x+5/7*x^2+3x^3")
    assert f * f.inverse() == 1
    g = PS(QuotPoly(2, 2), 3)("1+u+u*x+x^2")
    assert g * g.inverse() == 1
