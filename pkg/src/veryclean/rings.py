"""Concrete carriers: Z/p^k, F_p[u]/(u^k), Z_(p), Z_(p) cap Z_(q), R[[x]]/(x^m).

Canonical payloads:

* ``Zmod``: the residue as an ``int`` in ``[0, p^k)``.
* ``Zloc`` / ``ZlocCap``: a reduced :class:`fractions.Fraction` (positive
  denominator) whose denominator avoids the excluded primes.
* ``QuotPoly`` / ``TruncSeries``: a tuple of exactly ``k`` (resp. ``m``)
  base payloads, lowest degree first.

Finite rings enumerate in lexicographic order of the coefficient vector
read from the highest degree down, so F_2[u]/(u^2) lists 0, 1, u, 1+u.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterator, Sequence

from .core import (
    QUOT_POLY,
    TRUNC_SERIES,
    ZLOC,
    ZLOC_CAP,
    ZMOD,
    Element,
    Ring,
    RingDescriptor,
)
from .errors import NotAUnit, NotInRing, RingMismatch


class ZmodRing(Ring):
    """Z/p^k; local with radical pZ/p^k."""

    is_finite = True

    def __init__(self, descriptor: RingDescriptor) -> None:
        self.descriptor = descriptor
        self.p = descriptor.p
        self.n = descriptor.p ** descriptor.k
        self.zero = 0
        self.one = 1 % self.n

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.n

    def neg(self, x: int) -> int:
        return -x % self.n

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.n

    def mul(self, x: int, y: int) -> int:
        return x * y % self.n

    def unit_p(self, x: int) -> bool:
        return x % self.p != 0

    def inverse_p(self, x: int) -> int:
        if x % self.p == 0:
            raise NotAUnit(f"{x} is not a unit in {self.descriptor}")
        return pow(x, -1, self.n)

    def radical_p(self, x: int) -> bool:
        return x % self.p == 0

    def from_int(self, n: int) -> int:
        return n % self.n

    def from_fraction(self, value: Fraction) -> int:
        if value.denominator % self.p == 0:
            raise NotInRing(f"{value} has a non-invertible denominator in {self.descriptor}")
        return value.numerator * pow(value.denominator, -1, self.n) % self.n

    def canonical_p(self, raw: Any) -> int:
        if isinstance(raw, Fraction):
            return self.from_fraction(raw)
        if isinstance(raw, int) and not isinstance(raw, bool):
            return raw % self.n
        raise NotInRing(f"cannot read {raw!r} as an element of {self.descriptor}")

    def format_p(self, x: int) -> str:
        return str(x)

    def payloads(self) -> Iterator[int]:
        return iter(range(self.n))

    @property
    def size(self) -> int:
        return self.n

    def random_p(self, rng: random.Random, bound: int) -> int:
        return rng.randrange(self.n)


class LocalizedRing(Ring):
    """Rationals whose reduced denominator avoids every excluded prime.

    With one prime this is the local ring Z_(p); with two it is the
    semilocal ring Z_(p) cap Z_(q), whose radical is pR cap qR.
    """

    def __init__(self, descriptor: RingDescriptor) -> None:
        self.descriptor = descriptor
        if descriptor.kind == ZLOC:
            self.primes: tuple[int, ...] = (descriptor.p,)
        else:
            self.primes = (descriptor.p, descriptor.q)
        self.is_local = len(self.primes) == 1
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, x: Fraction, y: Fraction) -> Fraction:
        return x + y

    def neg(self, x: Fraction) -> Fraction:
        return -x

    def sub(self, x: Fraction, y: Fraction) -> Fraction:
        return x - y

    def mul(self, x: Fraction, y: Fraction) -> Fraction:
        return x * y

    def unit_p(self, x: Fraction) -> bool:
        return all(x.numerator % p for p in self.primes)

    def inverse_p(self, x: Fraction) -> Fraction:
        if not self.unit_p(x):
            raise NotAUnit(f"{x} is not a unit in {self.descriptor}")
        return 1 / x

    def radical_p(self, x: Fraction) -> bool:
        return all(x.numerator % p == 0 for p in self.primes)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def from_fraction(self, value: Fraction) -> Fraction:
        if any(value.denominator % p == 0 for p in self.primes):
            raise NotInRing(f"{value} is not in {self.descriptor}")
        return value

    def canonical_p(self, raw: Any) -> Fraction:
        if isinstance(raw, tuple) and len(raw) == 2:
            num, den = raw
            if den == 0:
                raise NotInRing("zero denominator")
            return self.from_fraction(Fraction(num, den))
        if isinstance(raw, (int, Fraction)) and not isinstance(raw, bool):
            return self.from_fraction(Fraction(raw))
        raise NotInRing(f"cannot read {raw!r} as an element of {self.descriptor}")

    def format_p(self, x: Fraction) -> str:
        return str(x)

    def random_p(self, rng: random.Random, bound: int) -> Fraction:
        num = rng.randint(-bound, bound)
        while True:
            den = rng.randint(1, bound)
            if all(den % p for p in self.primes):
                return Fraction(num, den)


class TruncatedRing(Ring):
    """base[v]/(v^m) for a commutative base; ``v`` is ``u`` or ``x``.

    Serves both F_p[u]/(u^k) (over Z/p) and power series truncated at x^m.
    """

    def __init__(self, descriptor: RingDescriptor, base: Ring, order: int, var: str) -> None:
        self.descriptor = descriptor
        self.base = base
        self.order = order
        self.var = var
        self.is_finite = base.is_finite
        self.is_local = base.is_local
        self.zero = (base.zero,) * order
        self.one = (base.one,) + (base.zero,) * (order - 1)
        # integer coefficients mod n skip the generic base dispatch
        self._modulus = base.n if isinstance(base, ZmodRing) else None

    def add(self, x: tuple, y: tuple) -> tuple:
        if self._modulus:
            n = self._modulus
            return tuple((a + b) % n for a, b in zip(x, y))
        add = self.base.add
        return tuple(add(a, b) for a, b in zip(x, y))

    def neg(self, x: tuple) -> tuple:
        neg = self.base.neg
        return tuple(neg(a) for a in x)

    def sub(self, x: tuple, y: tuple) -> tuple:
        if self._modulus:
            n = self._modulus
            return tuple((a - b) % n for a, b in zip(x, y))
        sub = self.base.sub
        return tuple(sub(a, b) for a, b in zip(x, y))

    def mul(self, x: tuple, y: tuple) -> tuple:
        if self._modulus:
            n = self._modulus
            return tuple(
                sum(x[i] * y[k - i] for i in range(k + 1)) % n for k in range(self.order)
            )
        base = self.base
        out = []
        for k in range(self.order):
            acc = base.zero
            for i in range(k + 1):
                acc = base.add(acc, base.mul(x[i], y[k - i]))
            out.append(acc)
        return tuple(out)

    def unit_p(self, x: tuple) -> bool:
        return self.base.unit_p(x[0])

    def inverse_p(self, x: tuple) -> tuple:
        base = self.base
        if not base.unit_p(x[0]):
            raise NotAUnit(f"{self.format_p(x)} is not a unit in {self.descriptor}")
        c0inv = base.inverse_p(x[0])
        inv = [c0inv]
        # order-by-order: sum_{i<=k} x_i inv_{k-i} = 0 for k >= 1
        for k in range(1, self.order):
            acc = base.zero
            for i in range(1, k + 1):
                acc = base.add(acc, base.mul(x[i], inv[k - i]))
            inv.append(base.neg(base.mul(c0inv, acc)))
        return tuple(inv)

    def radical_p(self, x: tuple) -> bool:
        return self.base.radical_p(x[0])

    def from_int(self, n: int) -> tuple:
        return (self.base.from_int(n),) + (self.base.zero,) * (self.order - 1)

    def from_fraction(self, value: Fraction) -> tuple:
        return (self.base.from_fraction(value),) + (self.base.zero,) * (self.order - 1)

    def canonical_p(self, raw: Any) -> tuple:
        if isinstance(raw, (int, Fraction)) and not isinstance(raw, bool):
            return self.from_fraction(Fraction(raw))
        if isinstance(raw, Element):
            if raw.ring != self.base:
                raise RingMismatch(f"{raw.ring} vs {self.base}")
            return (raw.payload,) + (self.base.zero,) * (self.order - 1)
        if isinstance(raw, (tuple, list)):
            coeffs = [
                c.payload if isinstance(c, Element) and c.ring == self.base else self.base.canonical_p(c)
                for c in raw[: self.order]
            ]
            coeffs += [self.base.zero] * (self.order - len(coeffs))
            return tuple(coeffs)
        raise NotInRing(f"cannot read {raw!r} as an element of {self.descriptor}")

    def generator(self) -> Element:
        """The indeterminate; zero when the order is 1."""
        coeffs = [self.base.zero] * self.order
        if self.order > 1:
            coeffs[1] = self.base.one
        return Element(self, tuple(coeffs))

    def coefficients(self, a: Element) -> list[Element]:
        return [Element(self.base, c) for c in a.payload]

    def format_p(self, x: tuple) -> str:
        parts: list[str] = []
        for i, c in enumerate(x):
            if c == self.base.zero:
                continue
            s = self.base.format_p(c)
            if i == 0:
                parts.append(s)
                continue
            mono = self.var if i == 1 else f"{self.var}^{i}"
            if s == "1":
                term = mono
            elif s == "-1":
                term = "-" + mono
            elif any(ch in s[1:] for ch in "+-"):
                term = f"({s})*{mono}"
            else:
                term = f"{s}*{mono}"
            parts.append(term)
        if not parts:
            return "0"
        out = parts[0]
        for term in parts[1:]:
            out += term if term.startswith("-") else "+" + term
        return out

    def payloads(self) -> Iterator[tuple]:
        base = list(self.base.payloads())
        for rev in itertools.product(base, repeat=self.order):
            yield tuple(reversed(rev))

    @property
    def size(self) -> int:
        return self.base.size ** self.order

    def random_p(self, rng: random.Random, bound: int) -> tuple:
        return tuple(self.base.random_p(rng, bound) for _ in range(self.order))


@lru_cache(maxsize=None)
def make_ring(descriptor: RingDescriptor) -> Ring:
    """The (cached) carrier for ``descriptor``."""
    if descriptor.kind == ZMOD:
        return ZmodRing(descriptor)
    if descriptor.kind in (ZLOC, ZLOC_CAP):
        return LocalizedRing(descriptor)
    if descriptor.kind == QUOT_POLY:
        field = make_ring(RingDescriptor.zmod(descriptor.p))
        return TruncatedRing(descriptor, field, descriptor.k, "u")
    if descriptor.kind == TRUNC_SERIES:
        return TruncatedRing(descriptor, make_ring(descriptor.base), descriptor.m, "x")
    raise AssertionError(descriptor.kind)


def Zmod(n: int) -> Ring:
    return make_ring(RingDescriptor.zmod(n))


def QuotPoly(p: int, k: int) -> Ring:
    return make_ring(RingDescriptor.quot_poly(p, k))


def Zloc(p: int) -> Ring:
    return make_ring(RingDescriptor.zloc(p))


def ZlocCap(p: int, q: int) -> Ring:
    return make_ring(RingDescriptor.zloc_cap(p, q))


def PS(base: Ring | RingDescriptor, m: int) -> Ring:
    if isinstance(base, Ring):
        base = base.descriptor
    return make_ring(RingDescriptor.series(base, m))


def canonicalize(raw: Any, ring: Ring) -> Element:
    return Element(ring, ring.canonical_p(raw))


def series_eval_zero(f: Element) -> Element:
    """Constant term of a truncated series (or polynomial) element."""
    ring = f.ring
    if not isinstance(ring, TruncatedRing):
        raise RingMismatch(f"{ring} is not a truncated series ring")
    return Element(ring.base, f.payload[0])


def series_from_coefficients(ring: Ring, coeffs: Sequence[Element | int]) -> Element:
    return Element(ring, ring.canonical_p(list(coeffs)))


def truncate(f: Element, order: int) -> Element:
    """Image of ``f`` in base[[x]]/(x^order), ``order`` <= current order."""
    ring = f.ring
    if not isinstance(ring, TruncatedRing) or ring.descriptor.kind != TRUNC_SERIES:
        raise RingMismatch(f"{ring} is not a truncated series ring")
    if not 1 <= order <= ring.order:
        raise ValueError(f"cannot truncate order {ring.order} to {order}")
    target = PS(ring.base, order)
    return Element(target, f.payload[:order])
