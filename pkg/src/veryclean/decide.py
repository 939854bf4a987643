"""Decision procedures and constructive decompositions.

Every positive answer is a :class:`CleanWitness`, which re-checks
idempotency, commutation, the decomposition and invertibility when it is
built, so no procedure here can hand back an unsound witness.

Sign convention: ``sign == -1`` means ``a - e`` is the unit (the strongly
clean shape), ``sign == +1`` means ``a + e`` is the unit.  In both cases
``unit == a + sign * e``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Any, Union

from .core import TRUNC_SERIES, Element, MonicPoly, Ring, SrLabel, require_same_ring
from .errors import (
    CornerNotSolvable,
    InvariantViolation,
    NoSplit,
    NotInRing,
    NotLocal,
    NotStronglyClean,
    NotVeryClean,
)
from .matrices import Mat2, Tri2Element
from .rings import LocalizedRing

Clean = Union[Element, Mat2, Tri2Element]

STRONGLY_CLEAN = "strongly_clean"
VERY_CLEAN_PLUS = "very_clean_plus"


def _signed(e: Clean, sign: int) -> Clean:
    return e if sign == 1 else -e


@dataclass(frozen=True)
class CleanWitness:
    """``element`` with idempotent ``e`` commuting with it and ``element + sign*e`` a unit."""

    element: Any
    idempotent: Any
    sign: int
    unit: Any

    def __post_init__(self) -> None:
        if self.sign not in (-1, 1):
            raise InvariantViolation(f"sign must be +1 or -1, got {self.sign}")
        failed = [name for name, ok in self.checks().items() if not ok]
        if failed:
            raise InvariantViolation(
                f"invalid witness for {self.element}: e={self.idempotent}, "
                f"sign={self.sign}, u={self.unit} fails {failed}"
            )

    @classmethod
    def build(cls, a: Clean, e: Clean, sign: int) -> CleanWitness:
        return cls(a, e, sign, a + _signed(e, sign))

    @property
    def kind(self) -> str:
        return STRONGLY_CLEAN if self.sign == -1 else VERY_CLEAN_PLUS

    def checks(self) -> dict[str, bool]:
        a, e, u = self.element, self.idempotent, self.unit
        return {
            "idempotent": e * e == e,
            "commutes": a * e == e * a,
            "decomposes": a + _signed(e, self.sign) == u,
            "unit": u.is_unit(),
        }


def _require_local(ring: Ring) -> None:
    if not ring.is_local:
        raise NotLocal(f"{ring} is not a local ring")


# scalars


def scalar_very_clean(a: Element) -> CleanWitness:
    """First of e=0, (e=1, sign -1), (e=1, sign +1) that works.

    Every shipped carrier has only the trivial idempotents, so this search
    is exhaustive.
    """
    one = a.ring.one_element
    for e, sign in ((a.ring.zero_element, -1), (one, -1), (one, 1)):
        if (a + _signed(e, sign)).is_unit():
            return CleanWitness.build(a, e, sign)
    raise NotVeryClean(f"{a} is not very clean in {a.ring}")


def scalar_strongly_clean(a: Element) -> CleanWitness:
    for e in (a.ring.zero_element, a.ring.one_element):
        if (a - e).is_unit():
            return CleanWitness.build(a, e, -1)
    raise NotStronglyClean(f"{a} is not strongly clean in {a.ring}")


# monic quadratics


@dataclass(frozen=True)
class RootPair:
    """Roots alpha in 1 + J and beta in J of a monic quadratic."""

    alpha: Element
    beta: Element

    def __post_init__(self) -> None:
        if not (self.alpha - 1).in_jacobson() or not self.beta.in_jacobson():
            raise InvariantViolation(f"root classes wrong: alpha={self.alpha}, beta={self.beta}")

    def factors(self, h: MonicPoly) -> bool:
        c0, c1 = h.coeffs
        return self.alpha + self.beta == -c1 and self.alpha * self.beta == c0


def _split_scan(h: MonicPoly) -> RootPair:
    ring = h.ring
    c0, c1 = h.coeffs
    trace = -c1
    for beta in ring.elements():
        if not beta.in_jacobson():
            continue
        alpha = trace - beta
        if (alpha - 1).in_jacobson() and alpha * beta == c0:
            return RootPair(alpha, beta)
    if any(h(r).is_zero() for r in ring.elements()):
        raise NoSplit("wrong-classes", f"roots of {h} are not in 1+J and J")
    raise NoSplit("no-roots", f"{h} has no roots in {ring}")


def _rational_sqrt(d: Fraction) -> Fraction | None:
    if d < 0:
        return None
    rn, rd = isqrt(d.numerator), isqrt(d.denominator)
    if rn * rn != d.numerator or rd * rd != d.denominator:
        return None
    return Fraction(rn, rd)


def _split_discriminant(h: MonicPoly) -> RootPair:
    ring = h.ring
    c0, c1 = (c.payload for c in h.coeffs)
    root = _rational_sqrt(c1 * c1 - 4 * c0)
    if root is None:
        raise NoSplit("no-roots", f"discriminant of {h} is not a rational square")
    try:
        r1 = ring.element(ring.canonical_p((-c1 + root) / 2))
        r2 = ring.element(ring.canonical_p((-c1 - root) / 2))
    except NotInRing:
        raise NoSplit("no-roots", f"roots of {h} lie outside {ring}") from None
    for alpha, beta in ((r1, r2), (r2, r1)):
        if (alpha - 1).in_jacobson() and beta.in_jacobson():
            return RootPair(alpha, beta)
    raise NoSplit("wrong-classes", f"roots of {h} are not in 1+J and J")


def _split_hensel(h: MonicPoly) -> RootPair:
    ring = h.ring
    base = ring.base
    c0, c1 = h.coeffs
    h_const = MonicPoly(base, tuple(base.element(c.payload[0]) for c in h.coeffs))
    start = find_root_pair(h_const)
    beta = ring.element(ring.canonical_p([start.beta]))
    # Newton steps; h'(beta) = 2 beta + c1 = beta - alpha is a unit
    for _ in range(ring.order):
        residual = h(beta)
        if residual.is_zero():
            break
        beta = beta - residual * (2 * beta + c1).inverse()
    if not h(beta).is_zero():
        raise InvariantViolation(f"Hensel iteration did not converge for {h}")
    return RootPair(-c1 - beta, beta)


def find_root_pair(h: MonicPoly) -> RootPair:
    """Split a monic quadratic as (t - alpha)(t - beta), alpha in 1+J, beta in J.

    The pair is unique when it exists.  Raises :class:`NoSplit`.
    """
    if h.degree != 2:
        raise ValueError(f"root pairs are defined for quadratics, got degree {h.degree}")
    ring = h.ring
    if ring.descriptor.kind == TRUNC_SERIES:
        return _split_hensel(h)
    if ring.is_finite:
        return _split_scan(h)
    if isinstance(ring, LocalizedRing):
        return _split_discriminant(h)
    raise NotImplementedError(f"no root-finding strategy for {ring}")


# 2x2 full matrices


def mat2_strongly_clean(phi: Mat2) -> CleanWitness:
    """Strongly clean decomposition of ``phi`` over a commutative local ring.

    phi a unit gives e = 0; I - phi a unit gives e = I; otherwise the
    characteristic polynomial must split with roots alpha in 1+J, beta in
    J, and E = I - (phi - beta I)(alpha - beta)^-1 is the idempotent
    projecting onto the beta-eigenspace.
    """
    ring = phi.ring
    _require_local(ring)
    identity = Mat2.identity(ring)
    if phi.is_unit():
        return CleanWitness.build(phi, Mat2.zero(ring), -1)
    if (phi - identity).is_unit():
        return CleanWitness.build(phi, identity, -1)
    try:
        pair = find_root_pair(phi.char_poly())
    except NoSplit as exc:
        raise NotStronglyClean(f"{phi} is not strongly clean over {ring} ({exc.reason})") from None
    e = identity - (phi - pair.beta) * (pair.alpha - pair.beta).inverse()
    return CleanWitness.build(phi, e, -1)


def mat2_very_clean(phi: Mat2) -> CleanWitness:
    ring = phi.ring
    _require_local(ring)
    if ring.has_half():
        identity = Mat2.identity(ring)
        for e, sign in ((Mat2.zero(ring), -1), (identity, -1), (identity, 1)):
            if (phi + _signed(e, sign)).is_unit():
                return CleanWitness.build(phi, e, sign)
        raise InvariantViolation(f"det(phi), det(phi - I), det(phi + I) all non-units for {phi}")
    try:
        return mat2_strongly_clean(phi)
    except NotStronglyClean:
        pass
    try:
        negated = mat2_strongly_clean(-phi)
    except NotStronglyClean:
        raise NotVeryClean(f"{phi} is not very clean over {ring}") from None
    return CleanWitness.build(phi, negated.idempotent, 1)


@dataclass(frozen=True)
class Factorization:
    """h = h0 * h1 with h0(0) a unit and h1(label) a unit, label in {+1, -1}."""

    h: MonicPoly
    h0: MonicPoly
    h1: MonicPoly
    label: SrLabel

    def __post_init__(self) -> None:
        if self.h0 * self.h1 != self.h:
            raise InvariantViolation(f"{self.h0} * {self.h1} != {self.h}")
        if not self.h0.in_S(SrLabel.ZERO) or not self.h1.in_S(self.label):
            raise InvariantViolation(f"factor classes wrong for {self.h}")

    @property
    def degrees(self) -> tuple[int, int]:
        return (self.h0.degree, self.h1.degree)


def mat2_factorization(h: MonicPoly) -> Factorization | None:
    """Search degree splits (2,0), (0,2), (1,1) in that order; None if none exists."""
    ring = h.ring
    _require_local(ring)
    one = MonicPoly.one(ring)
    if h.in_S(SrLabel.ZERO):
        return Factorization(h, h, one, SrLabel.PLUS)
    for label in (SrLabel.PLUS, SrLabel.MINUS):
        if h.in_S(label):
            return Factorization(h, one, h, label)
    try:
        pair = find_root_pair(h)
        return Factorization(h, MonicPoly.linear(pair.alpha), MonicPoly.linear(pair.beta), SrLabel.PLUS)
    except NoSplit:
        pass
    try:
        pair = find_root_pair(h.reflect())
    except NoSplit:
        return None
    return Factorization(h, MonicPoly.linear(-pair.alpha), MonicPoly.linear(-pair.beta), SrLabel.MINUS)


# 2x2 upper-triangular matrices


def solve_corner(a: Element, b: Element, v: Element) -> Element:
    """Solve a*x - x*b = v; needs a - b to be a unit."""
    require_same_ring(a, b, v)
    diff = a - b
    if not diff.is_unit():
        raise CornerNotSolvable(f"{a} - {b} is not a unit")
    x = diff.inverse() * v
    if a * x - x * b != v:
        raise InvariantViolation(f"corner solution {x} does not satisfy the equation")
    return x


class TriCase(str, enum.Enum):
    """Which diagonal entries of [[a, v], [0, b]] are units."""

    BOTH_RADICAL = "both_radical"
    BOTH_UNIT = "both_unit"
    UNIT_RADICAL = "unit_radical"
    RADICAL_UNIT = "radical_unit"


def tri2_case(r: Tri2Element) -> TriCase:
    _require_local(r.ring)
    a_unit, b_unit = r.a.is_unit(), r.b.is_unit()
    if a_unit and b_unit:
        return TriCase.BOTH_UNIT
    if a_unit:
        return TriCase.UNIT_RADICAL
    if b_unit:
        return TriCase.RADICAL_UNIT
    return TriCase.BOTH_RADICAL


def tri2_very_clean(r: Tri2Element) -> CleanWitness:
    ring = r.ring
    case = tri2_case(r)
    identity = Tri2Element.identity(ring)
    if case is TriCase.BOTH_RADICAL:
        return CleanWitness.build(r, identity, -1)
    if case is TriCase.BOTH_UNIT:
        return CleanWitness.build(r, Tri2Element.zero(ring), -1)
    unit_entry = r.a if case is TriCase.UNIT_RADICAL else r.b
    if (unit_entry - 1).is_unit():
        return CleanWitness.build(r, identity, -1)
    if (unit_entry + 1).is_unit():
        return CleanWitness.build(r, identity, 1)
    zero, one = ring.zero_element, ring.one_element
    try:
        if case is TriCase.UNIT_RADICAL:
            x = solve_corner(r.a, r.b, -r.v)
            e = Tri2Element(zero, x, one)
        else:
            x = solve_corner(r.a, r.b, r.v)
            e = Tri2Element(one, x, zero)
    except CornerNotSolvable:
        raise NotVeryClean(f"corner equation unsolvable for {r}") from None
    return CleanWitness.build(r, e, 1)


def tri2_strongly_clean(r: Tri2Element) -> CleanWitness:
    """Strongly clean split of [[a, v], [0, b]] over a commutative local ring.

    Mixed diagonals use the corner idempotent that keeps the unit entry:
    r - e then has diagonal (a, b - 1) or (a - 1, b), both units.
    """
    ring = r.ring
    case = tri2_case(r)
    if case is TriCase.BOTH_RADICAL:
        return CleanWitness.build(r, Tri2Element.identity(ring), -1)
    if case is TriCase.BOTH_UNIT:
        return CleanWitness.build(r, Tri2Element.zero(ring), -1)
    zero, one = ring.zero_element, ring.one_element
    try:
        if case is TriCase.UNIT_RADICAL:
            e = Tri2Element(zero, solve_corner(r.a, r.b, -r.v), one)
        else:
            e = Tri2Element(one, solve_corner(r.a, r.b, r.v), zero)
    except CornerNotSolvable:
        raise NotStronglyClean(f"corner equation unsolvable for {r}") from None
    return CleanWitness.build(r, e, -1)


class TriVerdict(str, enum.Enum):
    VIA_HALF = "very_clean_via_half"
    VIA_SC = "very_clean_via_sc"
    NOT_VERY_CLEAN = "not_very_clean"


def tri2_ring_very_clean(ring: Ring) -> TriVerdict:
    """Is T_2(ring) very clean, and why.

    Commutative local rings are weakly bleached, so without 1/2 the ring
    T_2 is strongly clean; the negative verdict needs a noncommutative
    carrier, which none of the shipped rings are.
    """
    _require_local(ring)
    if ring.has_half():
        return TriVerdict.VIA_HALF
    if ring.is_commutative:
        return TriVerdict.VIA_SC
    return TriVerdict.NOT_VERY_CLEAN
