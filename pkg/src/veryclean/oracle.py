"""Brute-force ground truth over finite rings.

The oracle knows nothing about the decision procedures: it enumerates
every idempotent of the structure ring (scalars, M_2 or T_2) once, then
for each element tests every idempotent for commutation and for
invertibility of ``a - e`` and ``a + e``.  Arithmetic runs on tuples of
encoded entries (indices into lookup tables for carriers of at most
``TABLE_LIMIT`` elements, raw payloads otherwise); results become
elements and matrices again only when reported.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import islice, product
from typing import Any, Callable, Iterator

from .core import Element, Ring, RingDescriptor, check_finite
from .decide import (
    CleanWitness,
    TriVerdict,
    mat2_strongly_clean,
    mat2_very_clean,
    scalar_strongly_clean,
    scalar_very_clean,
    tri2_ring_very_clean,
    tri2_strongly_clean,
    tri2_very_clean,
)
from .errors import NotInRing, NotStronglyClean, NotVeryClean, NotVeryCleanAtZero, TooLarge, UnknownSuite
from .lift import mat2_lift
from .matrices import Mat2, Tri2Element, constant_term, from_series_coefficients
from .rings import PS, ZlocCap, make_ring

MAX_STRUCTURE_SIZE = 65536
TABLE_LIMIT = 256
SCALAR, M2, T2 = "scalar", "M2", "T2"
STRUCTURES = (SCALAR, M2, T2)


class _Ops:
    """Payload arithmetic for one structure over one finite ring."""

    def __init__(self, ring: Ring, structure: str) -> None:
        if structure not in STRUCTURES:
            raise ValueError(f"unknown structure {structure!r}")
        self.ring = ring
        self.structure = structure
        self.carrier = list(ring.payloads())
        if len(self.carrier) <= TABLE_LIMIT:
            # small carriers: elements become indices and arithmetic is table lookup
            n = len(self.carrier)
            index = {x: i for i, x in enumerate(self.carrier)}
            cells = [(x, y) for x in self.carrier for y in self.carrier]
            add_t = [index[ring.add(x, y)] for x, y in cells]
            sub_t = [index[ring.sub(x, y)] for x, y in cells]
            mul_t = [index[ring.mul(x, y)] for x, y in cells]
            units = [ring.unit_p(x) for x in self.carrier]
            add = lambda i, j: add_t[i * n + j]  # noqa: E731
            sub = lambda i, j: sub_t[i * n + j]  # noqa: E731
            mul = lambda i, j: mul_t[i * n + j]  # noqa: E731
            unit = units.__getitem__
            zero, one = index[ring.zero], index[ring.one]
            self.encode = index.__getitem__
            self.decode = self.carrier.__getitem__
            self.points = list(range(n))
        else:
            add, sub, mul, unit = ring.add, ring.sub, ring.mul, ring.unit_p
            zero, one = ring.zero, ring.one
            self.encode = self.decode = lambda x: x  # noqa: E731
            self.points = self.carrier

        if structure == SCALAR:
            self.arity = 1
            self.zero, self.one = (zero,), (one,)
            self.mul = lambda x, y: (mul(x[0], y[0]),)
            self.sub = lambda x, y: (sub(x[0], y[0]),)
            self.add = lambda x, y: (add(x[0], y[0]),)
            self.unit = lambda x: unit(x[0])
        elif structure == M2:
            self.arity = 4
            self.zero, self.one = (zero,) * 4, (one, zero, zero, one)

            def mmul(x, y):
                a, b, c, d = x
                e, f, g, h = y
                return (
                    add(mul(a, e), mul(b, g)),
                    add(mul(a, f), mul(b, h)),
                    add(mul(c, e), mul(d, g)),
                    add(mul(c, f), mul(d, h)),
                )

            self.mul = mmul
            self.sub = lambda x, y: tuple(sub(p, q) for p, q in zip(x, y))
            self.add = lambda x, y: tuple(add(p, q) for p, q in zip(x, y))
            self.unit = lambda x: unit(sub(mul(x[0], x[3]), mul(x[1], x[2])))
        else:
            # (a, v, b) for [[a, v], [0, b]]
            self.arity = 3
            self.zero, self.one = (zero,) * 3, (one, zero, one)
            self.mul = lambda x, y: (
                mul(x[0], y[0]),
                add(mul(x[0], y[1]), mul(x[1], y[2])),
                mul(x[2], y[2]),
            )
            self.sub = lambda x, y: tuple(sub(p, q) for p, q in zip(x, y))
            self.add = lambda x, y: tuple(add(p, q) for p, q in zip(x, y))
            self.unit = lambda x: unit(x[0]) and unit(x[2])

    def payloads(self) -> Iterator[tuple]:
        """Encoded structure elements in canonical order."""
        return product(self.points, repeat=self.arity)

    def encode_obj(self, a: Any) -> tuple:
        if isinstance(a, Element):
            return (self.encode(a.payload),)
        return tuple(self.encode(e.payload) for e in a.entries())

    def wrap(self, x: tuple) -> Any:
        elems = [self.ring.element(self.decode(p)) for p in x]
        if self.structure == SCALAR:
            return elems[0]
        if self.structure == M2:
            return Mat2(*elems)
        return Tri2Element(*elems)


def structure_of(a: Any) -> str:
    if isinstance(a, Mat2):
        return M2
    if isinstance(a, Tri2Element):
        return T2
    if isinstance(a, Element):
        return SCALAR
    raise TypeError(f"cannot classify {type(a).__name__}")


def structure_size(ring: Ring, structure: str) -> int:
    check_finite(ring)
    return ring.size ** {SCALAR: 1, M2: 4, T2: 3}[structure]


def _check_size(ring: Ring, structure: str) -> None:
    size = structure_size(ring, structure)
    if size > MAX_STRUCTURE_SIZE:
        raise TooLarge(f"{structure} over {ring} has {size} elements (limit {MAX_STRUCTURE_SIZE})")


@lru_cache(maxsize=None)
def _ops(descriptor: RingDescriptor, structure: str) -> _Ops:
    return _Ops(make_ring(descriptor), structure)


@lru_cache(maxsize=None)
def _idempotent_codes(descriptor: RingDescriptor, structure: str) -> tuple[tuple, ...]:
    ring = make_ring(descriptor)
    _check_size(ring, structure)
    ops = _ops(descriptor, structure)
    return tuple(x for x in ops.payloads() if ops.mul(x, x) == x)


def enumerate_structure(ring: Ring, structure: str) -> list[Any]:
    """Every element of the structure ring in canonical (lexicographic) order."""
    _check_size(ring, structure)
    ops = _ops(ring.descriptor, structure)
    return [ops.wrap(x) for x in ops.payloads()]


def structure_idempotents(ring: Ring, structure: str) -> list[Any]:
    ops = _ops(ring.descriptor, structure)
    return [ops.wrap(e) for e in _idempotent_codes(ring.descriptor, structure)]


def _witness_payloads(ops: _Ops, idems: tuple[tuple, ...], x: tuple) -> list[tuple[tuple, int]]:
    found = []
    for e in idems:
        if ops.mul(x, e) != ops.mul(e, x):
            continue
        for sign in (-1, 1):
            y = ops.sub(x, e) if sign == -1 else ops.add(x, e)
            if ops.unit(y):
                found.append((e, sign))
    return found


def brute_force_classify(a: Any) -> list[CleanWitness]:
    """All very clean witnesses of ``a``: idempotent-major, sign -1 before +1."""
    structure = structure_of(a)
    ring = a.ring
    check_finite(ring)
    _check_size(ring, structure)
    ops = _ops(ring.descriptor, structure)
    idems = _idempotent_codes(ring.descriptor, structure)
    return [
        CleanWitness.build(a, ops.wrap(e), sign)
        for e, sign in _witness_payloads(ops, idems, ops.encode_obj(a))
    ]


@dataclass(frozen=True)
class Status:
    strongly_clean: bool
    very_clean: bool
    clean: bool
    first: tuple[tuple, int] | None


def _status(ops: _Ops, idems: tuple[tuple, ...], x: tuple) -> Status:
    witnesses = _witness_payloads(ops, idems, x)
    sc = any(sign == -1 for _, sign in witnesses)
    clean = sc or any(ops.unit(ops.sub(x, e)) for e in idems)
    return Status(sc, bool(witnesses), clean, witnesses[0] if witnesses else None)


@lru_cache(maxsize=None)
def classify_all(descriptor: RingDescriptor, structure: str) -> tuple[Status, ...]:
    """Oracle status of every structure element, in enumeration order (cached)."""
    ops = _ops(descriptor, structure)
    idems = _idempotent_codes(descriptor, structure)
    return tuple(_status(ops, idems, x) for x in ops.payloads())


# surveys


@dataclass
class SurveyReport:
    ring: str
    structure: str
    total: int
    very_clean: int
    strongly_clean: int
    clean: int
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    failures: list[Any] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "ring": self.ring,
            "structure": self.structure,
            "totals": {
                "elements": self.total,
                "very_clean": self.very_clean,
                "strongly_clean": self.strongly_clean,
                "clean": self.clean,
            },
            "witnesses": self.witnesses,
            "failures": self.failures,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)


def _render(ops: _Ops, x: tuple) -> Any:
    obj = ops.wrap(x)
    if isinstance(obj, Element):
        return str(obj)
    return [[str(e) for e in row] for row in obj.rows()]


def _survey_chunk(descriptor: RingDescriptor, structure: str, start: int, stop: int) -> dict[str, Any]:
    ops = _ops(descriptor, structure)
    statuses = classify_all(descriptor, structure)
    counts = {"very_clean": 0, "strongly_clean": 0, "clean": 0, "total": 0}
    witnesses, failures = [], []
    for x, st in islice(zip(ops.payloads(), statuses), start, stop):
        counts["total"] += 1
        counts["very_clean"] += st.very_clean
        counts["strongly_clean"] += st.strongly_clean
        counts["clean"] += st.clean
        if st.first is None:
            failures.append(_render(ops, x))
        else:
            e, sign = st.first
            witnesses.append({"element": _render(ops, x), "e": _render(ops, e), "sigma": sign})
    return {"counts": counts, "witnesses": witnesses, "failures": failures}


def survey(ring: Ring, structure: str, chunks: int = 1, workers: int = 1) -> SurveyReport:
    """Classify every element of the structure ring.

    The element space is cut into ``chunks`` contiguous pieces, processed
    independently (in parallel when ``workers > 1``) and merged in order,
    so the report does not depend on the chunking.
    """
    check_finite(ring)
    _check_size(ring, structure)
    size = structure_size(ring, structure)
    chunks = max(1, min(chunks, size))
    bounds = [(size * i // chunks, size * (i + 1) // chunks) for i in range(chunks)]
    args = [(ring.descriptor, structure, a, b) for a, b in bounds]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_survey_chunk, *zip(*args)))
    else:
        parts = [_survey_chunk(*a) for a in args]
    report = SurveyReport(str(ring.descriptor), structure, 0, 0, 0, 0)
    for part in parts:
        c = part["counts"]
        report.total += c["total"]
        report.very_clean += c["very_clean"]
        report.strongly_clean += c["strongly_clean"]
        report.clean += c["clean"]
        report.witnesses.extend(part["witnesses"])
        report.failures.extend(part["failures"])
    return report


# theorem suites


@dataclass
class TheoremReport:
    suite: str
    params: dict[str, Any]
    passed: bool
    checked: int
    counterexample: Any = None
    detail: str = ""

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "params": self.params,
            "verdict": self.verdict,
            "checked": self.checked,
            "counterexample": self.counterexample,
            "detail": self.detail,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)


def _succeeds(proc: Callable[[Any], CleanWitness], a: Any) -> bool:
    try:
        proc(a)
    except (NotVeryClean, NotStronglyClean):
        return False
    return True


def _fail(suite: str, params: dict, checked: int, obj: Any, detail: str) -> TheoremReport:
    if isinstance(obj, (Mat2, Tri2Element)):
        obj = [[str(e) for e in row] for row in obj.rows()]
    elif obj is not None and not isinstance(obj, (str, int, list, dict)):
        obj = str(obj)
    return TheoremReport(suite, params, False, checked, obj, detail)


def _matrices_with_status(ring: Ring) -> Iterator[tuple[Mat2, Status]]:
    statuses = classify_all(ring.descriptor, M2)
    ops = _ops(ring.descriptor, M2)
    for x, st in zip(ops.payloads(), statuses):
        yield ops.wrap(x), st


def _suite_radical_two(ring: Ring) -> TheoremReport:
    """With 2 in J, very clean and strongly clean coincide on M_2."""
    params = {"ring": str(ring.descriptor)}
    if ring.has_half():
        raise ValueError(f"2 is a unit in {ring}; this suite needs 2 in J")
    n = 0
    for phi, st in _matrices_with_status(ring):
        n += 1
        if st.very_clean != st.strongly_clean:
            return _fail("radical-two", params, n, phi, "oracle: very clean differs from strongly clean")
        if _succeeds(mat2_very_clean, phi) != st.very_clean:
            return _fail("radical-two", params, n, phi, "procedure disagrees with oracle")
    return TheoremReport("radical-two", params, True, n)


def _suite_half_unit(ring: Ring) -> TheoremReport:
    """With 1/2 in R, every matrix of M_2 is very clean."""
    params = {"ring": str(ring.descriptor)}
    if not ring.has_half():
        raise ValueError(f"2 is not a unit in {ring}; this suite needs 1/2")
    n = 0
    for phi, st in _matrices_with_status(ring):
        n += 1
        if not st.very_clean or not _succeeds(mat2_very_clean, phi):
            return _fail("half-unit", params, n, phi, "matrix is not very clean")
    return TheoremReport("half-unit", params, True, n)


def _suite_plus_identity(ring: Ring) -> TheoremReport:
    """Very clean iff strongly clean or I + phi invertible, on M_2."""
    params = {"ring": str(ring.descriptor)}
    n = 0
    for phi, st in _matrices_with_status(ring):
        n += 1
        rhs = st.strongly_clean or (phi + 1).is_unit()
        if st.very_clean != rhs:
            return _fail("plus-identity", params, n, phi, "biconditional fails")
    return TheoremReport("plus-identity", params, True, n)


def _suite_triangular(ring: Ring) -> TheoremReport:
    """T_2 very clean iff 1/2 in R or T_2 strongly clean; procedure matches."""
    params = {"ring": str(ring.descriptor)}
    statuses = classify_all(ring.descriptor, T2)
    ops = _ops(ring.descriptor, T2)
    all_vc = all(s.very_clean for s in statuses)
    all_sc = all(s.strongly_clean for s in statuses)
    if all_vc != (ring.has_half() or all_sc):
        bad = next(ops.wrap(x) for x, s in zip(ops.payloads(), statuses) if not s.very_clean)
        return _fail("triangular", params, len(statuses), bad, "ring-level biconditional fails")
    verdict = tri2_ring_very_clean(ring)
    if (verdict is not TriVerdict.NOT_VERY_CLEAN) != all_vc:
        return _fail("triangular", params, len(statuses), verdict.value, "ring verdict disagrees with oracle")
    n = 0
    for x, st in zip(ops.payloads(), statuses):
        n += 1
        r = ops.wrap(x)
        if _succeeds(tri2_very_clean, r) != st.very_clean:
            return _fail("triangular", params, n, r, "procedure disagrees with oracle")
    return TheoremReport("triangular", params, True, n)


def random_series_matrix(ring: Ring, rng: random.Random) -> Mat2:
    """Uniform random matrix over a finite truncated series ring."""
    base_elems = list(ring.base.payloads())
    coeffs = [
        Mat2(*(ring.base.element(rng.choice(base_elems)) for _ in range(4)))
        for _ in range(ring.order)
    ]
    return from_series_coefficients(ring, coeffs)


def _suite_series_lift(ring: Ring, order: int, samples: int, seed: int) -> TheoremReport:
    """A(x) very clean iff A(0) very clean, with lifts checked against the oracle."""
    params = {"ring": str(ring.descriptor), "order": order, "samples": samples, "seed": seed}
    series = PS(ring, order)
    rng = random.Random(seed)
    exhaustive = structure_size(series, M2) <= MAX_STRUCTURE_SIZE
    for n in range(1, samples + 1):
        A = random_series_matrix(series, rng)
        a0 = constant_term(A)
        zero_vc = bool(brute_force_classify(a0))
        try:
            mat2_lift(A)
            lifted = True
        except NotVeryCleanAtZero:
            lifted = False
        if lifted != zero_vc:
            return _fail("series-lift", params, n, A, "lift outcome differs from constant-term status")
        if exhaustive and bool(brute_force_classify(A)) != lifted:
            return _fail("series-lift", params, n, A, "exhaustive search over the series ring disagrees")
    return TheoremReport("series-lift", params, True, samples)


def tri2_shape_witnesses(r: Tri2Element) -> list[CleanWitness]:
    """Very clean witnesses of ``r`` over a subring of the rationals.

    Such a ring has only the idempotents 0 and 1, so the idempotents of T_2
    are 0, I, [[1, y], [0, 0]] and [[0, y], [0, 1]].  Commuting with r pins
    y down by (a - b) y = v (resp. -v); y is solved in the rationals and
    kept only if it lies in the ring.  When a = b and v = 0 every y
    commutes and y = 0 stands in for all of them, since the diagonal of
    r +- e does not depend on y.
    """
    ring = r.ring
    zero, one = ring.zero_element, ring.one_element
    candidates = [Tri2Element.zero(ring), Tri2Element.identity(ring)]
    a, v, b = (c.payload for c in r.entries())
    for corner_sign, (top, bottom) in ((1, (one, zero)), (-1, (zero, one))):
        if a == b:
            ys = [zero] if v == 0 else []
        else:
            try:
                ys = [ring(Fraction(corner_sign * v) / (a - b))]
            except NotInRing:
                ys = []
        candidates += [Tri2Element(top, y, bottom) for y in ys]
    out = []
    for e in candidates:
        if not (e * e == e and e * r == r * e):
            continue
        for sign in (-1, 1):
            if (r + (e if sign == 1 else -e)).is_unit():
                out.append(CleanWitness.build(r, e, sign))
    return out


def _suite_semilocal() -> TheoremReport:
    """Z_(3) cap Z_(5): 9/4 very clean but not strongly clean; a T_2 spot check."""
    ring = ZlocCap(3, 5)
    params = {"ring": str(ring.descriptor)}
    a = ring("9/4")
    if not _succeeds(scalar_very_clean, a):
        return _fail("semilocal", params, 1, a, "9/4 should be very clean")
    if _succeeds(scalar_strongly_clean, a):
        return _fail("semilocal", params, 2, a, "9/4 should not be strongly clean")
    r = Tri2Element(a, ring(1), ring("15/2"))
    if not tri2_shape_witnesses(r):
        return _fail("semilocal", params, 3, r, "no very clean witness among triangular idempotents")
    diag = Tri2Element(a, ring(0), a)
    if any(w.sign == -1 for w in tri2_shape_witnesses(diag)):
        return _fail("semilocal", params, 4, diag, "diag(9/4, 9/4) should not be strongly clean")
    return TheoremReport("semilocal", params, True, 4)


SUITES = ("radical-two", "half-unit", "plus-identity", "triangular", "series-lift", "semilocal")


def verify_theorem(
    suite: str,
    ring: Ring | None = None,
    order: int = 2,
    samples: int = 32,
    seed: int = 0,
) -> TheoremReport:
    """Run one exhaustive (or seeded) theorem suite and report pass/fail."""
    if suite not in SUITES:
        raise UnknownSuite(suite)
    if suite == "semilocal":
        return _suite_semilocal()
    if ring is None:
        raise ValueError(f"suite {suite!r} needs a finite ring")
    check_finite(ring)
    if suite == "radical-two":
        return _suite_radical_two(ring)
    if suite == "half-unit":
        return _suite_half_unit(ring)
    if suite == "plus-identity":
        return _suite_plus_identity(ring)
    if suite == "triangular":
        return _suite_triangular(ring)
    return _suite_series_lift(ring, order, samples, seed)


def decide_agrees(ring: Ring, structure: str) -> list[Any]:
    """Elements where the decision procedures disagree with the oracle."""
    statuses = classify_all(ring.descriptor, structure)
    ops = _ops(ring.descriptor, structure)
    if structure == SCALAR:
        vc, sc = scalar_very_clean, scalar_strongly_clean
    elif structure == M2:
        vc, sc = mat2_very_clean, mat2_strongly_clean
    else:
        vc, sc = tri2_very_clean, tri2_strongly_clean
    bad = []
    for x, st in zip(ops.payloads(), statuses):
        obj = ops.wrap(x)
        if _succeeds(vc, obj) != st.very_clean:
            bad.append(obj)
        elif _succeeds(sc, obj) != st.strongly_clean:
            bad.append(obj)
    return bad
