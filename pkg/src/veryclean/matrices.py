"""2x2 full matrices M_2(R) and upper-triangular matrices T_2(R)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .core import Element, MonicPoly, Ring, require_same_ring
from .errors import NotAUnit, NotCommutative, RingMismatch
from .rings import TruncatedRing, truncate


def _require_commutative(ring: Ring) -> None:
    if not ring.is_commutative:
        raise NotCommutative(f"{ring} is not flagged commutative")


@dataclass(frozen=True)
class Mat2:
    a11: Element
    a12: Element
    a21: Element
    a22: Element

    def __post_init__(self) -> None:
        require_same_ring(self.a11, self.a12, self.a21, self.a22)

    @property
    def ring(self) -> Ring:
        return self.a11.ring

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence[Any]]) -> Mat2:
        (a, b), (c, d) = rows
        return cls(ring(a), ring(b), ring(c), ring(d))

    @classmethod
    def scalar(cls, c: Element) -> Mat2:
        z = c.ring.zero_element
        return cls(c, z, z, c)

    @classmethod
    def identity(cls, ring: Ring) -> Mat2:
        return cls.scalar(ring.one_element)

    @classmethod
    def zero(cls, ring: Ring) -> Mat2:
        return cls.scalar(ring.zero_element)

    @classmethod
    def companion(cls, poly: MonicPoly) -> Mat2:
        """[[0, -c0], [1, -c1]] for t^2 + c1 t + c0."""
        if poly.degree != 2:
            raise ValueError("companion matrices are only built for quadratics")
        c0, c1 = poly.coeffs
        ring = poly.ring
        return cls(ring.zero_element, -c0, ring.one_element, -c1)

    def entries(self) -> tuple[Element, Element, Element, Element]:
        return (self.a11, self.a12, self.a21, self.a22)

    def rows(self) -> list[list[Element]]:
        return [[self.a11, self.a12], [self.a21, self.a22]]

    def map(self, f: Callable[[Element], Element]) -> Mat2:
        return Mat2(f(self.a11), f(self.a12), f(self.a21), f(self.a22))

    def _other(self, other: Any) -> Mat2:
        if isinstance(other, Mat2):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        return Mat2.scalar(self.ring(other))

    def __add__(self, other: Any) -> Mat2:
        o = self._other(other)
        return Mat2(self.a11 + o.a11, self.a12 + o.a12, self.a21 + o.a21, self.a22 + o.a22)

    def __sub__(self, other: Any) -> Mat2:
        o = self._other(other)
        return Mat2(self.a11 - o.a11, self.a12 - o.a12, self.a21 - o.a21, self.a22 - o.a22)

    def __neg__(self) -> Mat2:
        return Mat2(-self.a11, -self.a12, -self.a21, -self.a22)

    def __mul__(self, other: Any) -> Mat2:
        if isinstance(other, Element) or isinstance(other, int):
            c = self.ring(other)
            return self.map(lambda e: e * c)
        o = self._other(other)
        return Mat2(
            self.a11 * o.a11 + self.a12 * o.a21,
            self.a11 * o.a12 + self.a12 * o.a22,
            self.a21 * o.a11 + self.a22 * o.a21,
            self.a21 * o.a12 + self.a22 * o.a22,
        )

    def __rmul__(self, other: Any) -> Mat2:
        c = self.ring(other)
        return self.map(lambda e: c * e)

    def det(self) -> Element:
        _require_commutative(self.ring)
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self) -> Element:
        return self.a11 + self.a22

    def char_poly(self) -> MonicPoly:
        """t^2 - trace t + det."""
        return MonicPoly(self.ring, (self.det(), -self.trace()))

    def adjugate(self) -> Mat2:
        return Mat2(self.a22, -self.a12, -self.a21, self.a11)

    def is_unit(self) -> bool:
        return self.det().is_unit()

    def inverse(self) -> Mat2:
        d = self.det()
        if not d.is_unit():
            raise NotAUnit(f"det {d} is not a unit")
        return self.adjugate() * d.inverse()

    def is_idempotent(self) -> bool:
        return self * self == self

    def commutes_with(self, other: Mat2) -> bool:
        return self * other == other * self

    def __str__(self) -> str:
        return "[[" + ",".join(map(str, (self.a11, self.a12))) + "],[" + ",".join(
            map(str, (self.a21, self.a22))
        ) + "]]"


@dataclass(frozen=True)
class Tri2Element:
    """[[a, v], [0, b]] in T_2(R)."""

    a: Element
    v: Element
    b: Element

    def __post_init__(self) -> None:
        require_same_ring(self.a, self.v, self.b)

    @property
    def ring(self) -> Ring:
        return self.a.ring

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence[Any]]) -> Tri2Element:
        (a, v), (z, b) = rows
        if not ring(z).is_zero():
            raise ValueError("lower-left entry of a triangular matrix must be 0")
        return cls(ring(a), ring(v), ring(b))

    @classmethod
    def identity(cls, ring: Ring) -> Tri2Element:
        return cls(ring.one_element, ring.zero_element, ring.one_element)

    @classmethod
    def zero(cls, ring: Ring) -> Tri2Element:
        z = ring.zero_element
        return cls(z, z, z)

    def entries(self) -> tuple[Element, Element, Element]:
        return (self.a, self.v, self.b)

    def rows(self) -> list[list[Element]]:
        return [[self.a, self.v], [self.ring.zero_element, self.b]]

    def map(self, f: Callable[[Element], Element]) -> Tri2Element:
        return Tri2Element(f(self.a), f(self.v), f(self.b))

    def as_mat2(self) -> Mat2:
        return Mat2(self.a, self.v, self.ring.zero_element, self.b)

    def _other(self, other: Any) -> Tri2Element:
        if isinstance(other, Tri2Element):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        c = self.ring(other)
        return Tri2Element(c, self.ring.zero_element, c)

    def __add__(self, other: Any) -> Tri2Element:
        o = self._other(other)
        return Tri2Element(self.a + o.a, self.v + o.v, self.b + o.b)

    def __sub__(self, other: Any) -> Tri2Element:
        o = self._other(other)
        return Tri2Element(self.a - o.a, self.v - o.v, self.b - o.b)

    def __neg__(self) -> Tri2Element:
        return Tri2Element(-self.a, -self.v, -self.b)

    def __mul__(self, other: Any) -> Tri2Element:
        o = self._other(other)
        return Tri2Element(self.a * o.a, self.a * o.v + self.v * o.b, self.b * o.b)

    def is_unit(self) -> bool:
        return self.a.is_unit() and self.b.is_unit()

    def inverse(self) -> Tri2Element:
        ai, bi = self.a.inverse(), self.b.inverse()
        return Tri2Element(ai, -(ai * self.v * bi), bi)

    def is_idempotent(self) -> bool:
        return self * self == self

    def commutes_with(self, other: Tri2Element) -> bool:
        return self * other == other * self

    def __str__(self) -> str:
        return f"[[{self.a},{self.v}],[0,{self.b}]]"


def mat2_char_poly(phi: Mat2) -> MonicPoly:
    return phi.char_poly()


def mat2_is_unit(phi: Mat2) -> bool:
    return phi.is_unit()


def mat2_try_inverse(phi: Mat2) -> Mat2:
    return phi.inverse()


def tri2_is_unit(r: Tri2Element) -> bool:
    return r.is_unit()


# matrices over truncated series: the matrix-of-series and series-of-matrices views


def _series_ring(ring: Ring) -> TruncatedRing:
    if not isinstance(ring, TruncatedRing) or ring.var != "x":
        raise RingMismatch(f"{ring} is not a truncated power series ring")
    return ring


def series_coefficients(A: Mat2 | Tri2Element) -> list[Mat2 | Tri2Element]:
    """Split A(x) into A_0, ..., A_{m-1} over the base ring."""
    ring = _series_ring(A.ring)
    base = ring.base
    return [
        A.map(lambda e, i=i: base.element(e.payload[i]))
        for i in range(ring.order)
    ]


def from_series_coefficients(ring: Ring, coeffs: Sequence[Mat2 | Tri2Element]) -> Mat2 | Tri2Element:
    """Reassemble sum_i A_i x^i as a matrix over ``ring`` = base[[x]]/(x^m)."""
    ring = _series_ring(ring)
    if len(coeffs) > ring.order:
        coeffs = coeffs[: ring.order]
    cols = [c.entries() for c in coeffs]
    n = len(cols[0])
    entries = [ring.canonical_p([col[j] for col in cols]) for j in range(n)]
    cls = type(coeffs[0])
    return cls(*(ring.element(e) for e in entries))


def constant_term(A: Mat2 | Tri2Element) -> Mat2 | Tri2Element:
    return series_coefficients(A)[0]


def truncate_matrix(A: Mat2 | Tri2Element, order: int) -> Mat2 | Tri2Element:
    return A.map(lambda e: truncate(e, order))


def lift_constant(M: Mat2 | Tri2Element, ring: Ring) -> Mat2 | Tri2Element:
    """View a base-ring matrix as a constant series matrix over ``ring``."""
    ring = _series_ring(ring)
    if M.ring != ring.base:
        raise RingMismatch(f"{M.ring} vs {ring.base}")
    return M.map(lambda e: ring.element(ring.canonical_p([e])))

