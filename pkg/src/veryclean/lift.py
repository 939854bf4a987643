"""Lift very clean decompositions from A(0) to A(x) over base[[x]]/(x^m).

Full 2x2 matrices lift through the characteristic polynomial: the root
pair of chi(A(0)) is Hensel-lifted to a root pair of chi(A(x)) and the
projection E = I - (A - beta I)(alpha - beta)^-1 is rebuilt over the
series ring.  Triangular matrices lift their idempotent's corner entry
coefficient by coefficient, each step a corner equation over the base.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .decide import (
    CleanWitness,
    find_root_pair,
    mat2_very_clean,
    solve_corner,
    tri2_very_clean,
)
from .errors import InvariantViolation, NotLocal, NotVeryClean, NotVeryCleanAtZero, RingMismatch
from .matrices import (
    Mat2,
    Tri2Element,
    constant_term,
    lift_constant,
    series_coefficients,
    truncate_matrix,
)
from .rings import TruncatedRing


def _series_ring(ring: Any) -> TruncatedRing:
    if not isinstance(ring, TruncatedRing) or ring.var != "x":
        raise RingMismatch(f"{ring} is not a truncated power series ring")
    if not ring.base.is_local:
        raise NotLocal(f"base ring {ring.base} is not local")
    return ring


@dataclass(frozen=True)
class LiftResult:
    """A(x) = U(x) - sign * E(x) with E idempotent, commuting with A, U a unit."""

    A: Any
    E: Any
    sign: int
    U: Any

    def __post_init__(self) -> None:
        failed = [name for name, ok in self.checks().items() if not ok]
        if failed:
            raise InvariantViolation(f"lift of {self.A} fails {failed}")

    @property
    def order(self) -> int:
        return self.A.ring.order

    def checks(self) -> dict[str, bool]:
        A, E, U = self.A, self.E, self.U
        signed = E if self.sign == 1 else -E
        try:
            self.constant_witness()
            constant_ok = True
        except InvariantViolation:
            constant_ok = False
        return {
            "idempotent": E * E == E,
            "commutes": E * A == A * E,
            "decomposes": A + signed == U,
            "unit": U.is_unit(),
            "constant_term": constant_ok,
        }

    def constant_witness(self) -> CleanWitness:
        return CleanWitness(constant_term(self.A), constant_term(self.E), self.sign, constant_term(self.U))


def _lift_witness(A: Any, E: Any, sign: int) -> LiftResult:
    return LiftResult(A, E, sign, A + (E if sign == 1 else -E))


def mat2_lift(A: Mat2) -> LiftResult:
    """Very clean decomposition of A(x) in M_2(base[[x]]/(x^m)).

    Raises :class:`NotVeryCleanAtZero` when A(0) is not very clean, which
    certifies that A(x) is not very clean either.
    """
    ring = _series_ring(A.ring)
    a0 = constant_term(A)
    try:
        w = mat2_very_clean(a0)
    except NotVeryClean:
        raise NotVeryCleanAtZero(f"A(0) = {a0} is not very clean over {ring.base}") from None
    identity0 = Mat2.identity(ring.base)
    if w.idempotent in (Mat2.zero(ring.base), identity0):
        return _lift_witness(A, lift_constant(w.idempotent, ring), w.sign)
    # nontrivial idempotent: it came from the strongly clean search on sign-adjusted A(0)
    target = A if w.sign == -1 else -A
    pair = find_root_pair(target.char_poly())
    identity = Mat2.identity(ring)
    E = identity - (target - pair.beta) * (pair.alpha - pair.beta).inverse()
    return _lift_witness(A, E, w.sign)


def tri2_lift(A: Tri2Element) -> LiftResult:
    """Very clean decomposition of a triangular A(x) over base[[x]]/(x^m)."""
    ring = _series_ring(A.ring)
    coeffs = series_coefficients(A)
    a0 = coeffs[0]
    try:
        w = tri2_very_clean(a0)
    except NotVeryClean:
        raise NotVeryCleanAtZero(f"A(0) = {a0} is not very clean over {ring.base}") from None
    e0 = w.idempotent
    base = ring.base
    if e0 in (Tri2Element.zero(base), Tri2Element.identity(base)):
        return _lift_witness(A, lift_constant(e0, ring), w.sign)
    # e0 = [[1, y], [0, 0]] needs a y - y b = v; e0 = [[0, y], [0, 1]] needs a y - y b = -v
    rhs_sign = 1 if e0.a == base.one_element else -1
    diffs = [c.a - c.b for c in coeffs]
    ys = []
    for k, c in enumerate(coeffs):
        rhs = c.v if rhs_sign == 1 else -c.v
        for j, y in enumerate(ys):
            rhs = rhs - diffs[k - j] * y
        ys.append(solve_corner(a0.a, a0.b, rhs))
    diagonal = lift_constant(e0, ring)
    E = Tri2Element(diagonal.a, ring.element(ring.canonical_p(ys)), diagonal.b)
    return _lift_witness(A, E, w.sign)


def truncate_further(res: LiftResult, order: int) -> LiftResult:
    """Image of a lift in base[[x]]/(x^order); truncation is a ring map."""
    if order < 1:
        raise ValueError(f"truncation order must be >= 1, got {order}")
    return LiftResult(
        truncate_matrix(res.A, order),
        truncate_matrix(res.E, order),
        res.sign,
        truncate_matrix(res.U, order),
    )

