"""Abstract ring interface, ring elements and monic polynomials.

Every carrier works on *payloads*: small immutable Python values (ints,
fractions, tuples) in a canonical form.  :class:`Element` pairs a payload
with the ring that owns it, so ``a + b`` never leaves the declared ring.
"""

from __future__ import annotations

import abc
import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Hashable, Iterator

from sympy import factorint, isprime

from .errors import (
    InfiniteRing,
    InvalidDescriptor,
    RingMismatch,
)

ZMOD = "Zmod"
QUOT_POLY = "QuotPoly"
ZLOC = "Zloc"
ZLOC_CAP = "ZlocCap"
TRUNC_SERIES = "TruncSeries"
KINDS = (ZMOD, QUOT_POLY, ZLOC, ZLOC_CAP, TRUNC_SERIES)


@dataclass(frozen=True)
class RingDescriptor:
    """Structural description of a concrete carrier ring.

    ``Zmod``: Z/p^k.  ``QuotPoly``: F_p[u]/(u^k).  ``Zloc``: Z localized
    at p.  ``ZlocCap``: rationals whose denominator avoids both p and q.
    ``TruncSeries``: base[[x]]/(x^m).
    """

    kind: str
    p: int | None = None
    k: int = 1
    q: int | None = None
    m: int | None = None
    base: RingDescriptor | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InvalidDescriptor(f"unknown ring kind {self.kind!r}")
        if self.kind == TRUNC_SERIES:
            if self.base is None:
                raise InvalidDescriptor("truncated series needs a base ring")
            if self.base.kind == TRUNC_SERIES:
                raise InvalidDescriptor("nested truncated series are not supported")
            if self.m is None or self.m < 1:
                raise InvalidDescriptor(f"truncation order must be >= 1, got {self.m}")
            if self.p is not None or self.q is not None or self.k != 1:
                raise InvalidDescriptor("truncated series takes only base and m")
            return
        if self.base is not None or self.m is not None:
            raise InvalidDescriptor(f"{self.kind} takes no base or truncation order")
        if self.p is None or not isprime(self.p):
            raise InvalidDescriptor(f"{self.p} is not a prime")
        if self.k < 1:
            raise InvalidDescriptor(f"exponent must be >= 1, got {self.k}")
        if self.kind in (ZLOC, ZLOC_CAP) and self.k != 1:
            raise InvalidDescriptor(f"{self.kind} takes no exponent")
        if self.kind == ZLOC_CAP:
            if self.q is None or not isprime(self.q):
                raise InvalidDescriptor(f"{self.q} is not a prime")
            if self.p == self.q:
                raise InvalidDescriptor("ZlocCap needs two distinct primes")
            if 2 in (self.p, self.q):
                raise InvalidDescriptor("ZlocCap primes must be odd")
        elif self.q is not None:
            raise InvalidDescriptor(f"{self.kind} takes a single prime")

    @classmethod
    def zmod(cls, n: int) -> RingDescriptor:
        """Descriptor of Z/n; ``n`` must be a prime power."""
        if n < 2:
            raise InvalidDescriptor(f"Zmod modulus must be a prime power, got {n}")
        factors = factorint(n)
        if len(factors) != 1:
            raise InvalidDescriptor(f"Zmod modulus must be a prime power, got {n}")
        ((p, k),) = factors.items()
        return cls(ZMOD, p=int(p), k=int(k))

    @classmethod
    def quot_poly(cls, p: int, k: int) -> RingDescriptor:
        return cls(QUOT_POLY, p=p, k=k)

    @classmethod
    def zloc(cls, p: int) -> RingDescriptor:
        return cls(ZLOC, p=p)

    @classmethod
    def zloc_cap(cls, p: int, q: int) -> RingDescriptor:
        return cls(ZLOC_CAP, p=p, q=q)

    @classmethod
    def series(cls, base: RingDescriptor, m: int) -> RingDescriptor:
        return cls(TRUNC_SERIES, m=m, base=base)

    @property
    def depth(self) -> int:
        return 1 if self.base is None else 1 + self.base.depth

    def __str__(self) -> str:
        if self.kind == ZMOD:
            return f"Zmod({self.p ** self.k})"
        if self.kind == QUOT_POLY:
            return f"GF({self.p})[u]/(u^{self.k})"
        if self.kind == ZLOC:
            return f"Zloc({self.p})"
        if self.kind == ZLOC_CAP:
            return f"ZlocCap({self.p},{self.q})"
        return f"PS({self.base},{self.m})"


class Ring(abc.ABC):
    """A commutative carrier ring with exact payload-level arithmetic.

    Subclasses implement the payload operations; element-level helpers
    are shared.  Two ring handles are equal iff their descriptors are.
    """

    descriptor: RingDescriptor
    zero: Hashable
    one: Hashable
    is_commutative = True
    is_finite = False
    is_local = True

    # payload arithmetic

    @abc.abstractmethod
    def add(self, x: Any, y: Any) -> Any: ...

    @abc.abstractmethod
    def neg(self, x: Any) -> Any: ...

    @abc.abstractmethod
    def mul(self, x: Any, y: Any) -> Any: ...

    def sub(self, x: Any, y: Any) -> Any:
        return self.add(x, self.neg(y))

    @abc.abstractmethod
    def unit_p(self, x: Any) -> bool: ...

    @abc.abstractmethod
    def inverse_p(self, x: Any) -> Any:
        """Inverse payload; raises :class:`NotAUnit`."""

    @abc.abstractmethod
    def radical_p(self, x: Any) -> bool:
        """Membership of a payload in the Jacobson radical."""

    @abc.abstractmethod
    def from_int(self, n: int) -> Any: ...

    @abc.abstractmethod
    def from_fraction(self, value: Fraction) -> Any: ...

    @abc.abstractmethod
    def canonical_p(self, raw: Any) -> Any:
        """Reduce a raw payload to canonical form; raises ``NotInRing``."""

    @abc.abstractmethod
    def format_p(self, x: Any) -> str: ...

    def payloads(self) -> Iterator[Any]:
        raise InfiniteRing(f"{self.descriptor} is infinite")

    @property
    def size(self) -> int:
        raise InfiniteRing(f"{self.descriptor} is infinite")

    def random_p(self, rng: random.Random, bound: int) -> Any:
        raise NotImplementedError

    # element level

    def element(self, payload: Any) -> Element:
        """Wrap a payload that is already canonical (no checks)."""
        return Element(self, payload)

    def __call__(self, value: Any) -> Element:
        if isinstance(value, Element):
            if value.ring != self:
                raise RingMismatch(f"{value!r} is not in {self.descriptor}")
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(value, int):
            return Element(self, self.from_int(value))
        if isinstance(value, Fraction):
            return Element(self, self.from_fraction(value))
        if isinstance(value, str):
            from .parsing import parse_element

            return parse_element(value, self)
        return Element(self, self.canonical_p(value))

    @property
    def zero_element(self) -> Element:
        return Element(self, self.zero)

    @property
    def one_element(self) -> Element:
        return Element(self, self.one)

    def elements(self) -> list[Element]:
        return [Element(self, x) for x in self.payloads()]

    def idempotents(self) -> list[Element]:
        return [Element(self, x) for x in self.payloads() if self.mul(x, x) == x]

    def has_half(self) -> bool:
        return self.unit_p(self.from_int(2))

    def random_element(self, rng: random.Random, bound: int = 100) -> Element:
        return Element(self, self.random_p(rng, bound))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and other.descriptor == self.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __repr__(self) -> str:
        return str(self.descriptor)

    def __reduce__(self):
        from .rings import make_ring

        return make_ring, (self.descriptor,)


class Element:
    """An element of a carrier ring, in canonical form."""

    __slots__ = ("ring", "payload")

    ring: Ring
    payload: Any

    def __init__(self, ring: Ring, payload: Any) -> None:
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Element is immutable")

    def __reduce__(self):
        return Element, (self.ring, self.payload)

    def _coerce(self, other: Any) -> Any:
        if isinstance(other, Element):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other.payload
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other)
        if isinstance(other, Fraction):
            return self.ring.from_fraction(other)
        return NotImplemented

    def __add__(self, other: Any) -> Element:
        y = self._coerce(other)
        if y is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring.add(self.payload, y))

    __radd__ = __add__

    def __sub__(self, other: Any) -> Element:
        y = self._coerce(other)
        if y is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring.sub(self.payload, y))

    def __rsub__(self, other: Any) -> Element:
        y = self._coerce(other)
        if y is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring.sub(y, self.payload))

    def __mul__(self, other: Any) -> Element:
        y = self._coerce(other)
        if y is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring.mul(self.payload, y))

    def __rmul__(self, other: Any) -> Element:
        y = self._coerce(other)
        if y is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring.mul(y, self.payload))

    def __neg__(self) -> Element:
        return Element(self.ring, self.ring.neg(self.payload))

    def __pow__(self, n: int) -> Element:
        if n < 0:
            return self.inverse() ** -n
        result, base = self.ring.one, self.payload
        while n:
            if n & 1:
                result = self.ring.mul(result, base)
            base = self.ring.mul(base, base)
            n >>= 1
        return Element(self.ring, result)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Element):
            return self.ring == other.ring and self.payload == other.payload
        if isinstance(other, int) and not isinstance(other, bool):
            return self.payload == self.ring.from_int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring.descriptor, self.payload))

    def __repr__(self) -> str:
        return f"Element({self.ring}, {self})"

    def __str__(self) -> str:
        return self.ring.format_p(self.payload)

    def is_zero(self) -> bool:
        return self.payload == self.ring.zero

    def is_unit(self) -> bool:
        return self.ring.unit_p(self.payload)

    def in_jacobson(self) -> bool:
        return self.ring.radical_p(self.payload)

    def is_idempotent(self) -> bool:
        return self.ring.mul(self.payload, self.payload) == self.payload

    def inverse(self) -> Element:
        return Element(self.ring, self.ring.inverse_p(self.payload))


# free-function surface


def arith(op: str, a: Element, b: Element | None = None) -> Element:
    """Apply ``op`` in {add, sub, mul, neg}; ``b`` is ignored for ``neg``."""
    if op == "neg":
        return -a
    if b is None:
        raise TypeError(f"{op} needs two operands")
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def is_unit(a: Element) -> bool:
    return a.is_unit()


def try_inverse(a: Element) -> Element:
    return a.inverse()


def in_jacobson(a: Element) -> bool:
    return a.in_jacobson()


def has_half(ring: Ring) -> bool:
    return ring.has_half()


def is_idempotent(a: Element) -> bool:
    return a.is_idempotent()


def enumerate_elements(ring: Ring) -> list[Element]:
    return ring.elements()


def enumerate_idempotents(ring: Ring) -> list[Element]:
    return ring.idempotents()


class SrLabel(enum.IntEnum):
    """Which of 0, +1, -1 a monic polynomial is evaluated at."""

    ZERO = 0
    PLUS = 1
    MINUS = -1


@dataclass(frozen=True)
class MonicPoly:
    """t^d + c_{d-1} t^{d-1} + ... + c_0 with coefficients in ``ring``.

    ``coeffs`` holds c_0..c_{d-1}; the leading 1 is implicit.  Degree 0
    (the constant polynomial 1) is allowed so factorizations can carry a
    trivial factor.
    """

    ring: Ring
    coeffs: tuple[Element, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.ring(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def one(cls, ring: Ring) -> MonicPoly:
        return cls(ring, ())

    @classmethod
    def linear(cls, root: Element) -> MonicPoly:
        """t - root."""
        return cls(root.ring, (-root,))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def __call__(self, r: Element | int) -> Element:
        r = self.ring(r)
        acc = self.ring.one_element
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return acc

    def evaluate(self, r: Element | int) -> Element:
        return self(r)

    def __mul__(self, other: MonicPoly) -> MonicPoly:
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        a = list(self.coeffs) + [self.ring.one_element]
        b = list(other.coeffs) + [self.ring.one_element]
        prod = [self.ring.zero_element] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = prod[i + j] + x * y
        return MonicPoly(self.ring, tuple(prod[:-1]))

    def reflect(self) -> MonicPoly:
        """(-1)^d h(-t), again monic."""
        d = self.degree
        return MonicPoly(
            self.ring,
            tuple(c if (d - i) % 2 == 0 else -c for i, c in enumerate(self.coeffs)),
        )

    def in_S(self, label: SrLabel | int) -> bool:
        return self(int(label)).is_unit()

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.ring.one_element if i == self.degree else self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            s = str(c)
            if not mono:
                terms.append(s)
            elif s == "1":
                terms.append(mono)
            else:
                terms.append(f"({s})*{mono}" if any(ch in s[1:] for ch in "+-") else f"{s}*{mono}")
        return " + ".join(terms) if terms else "0"


def poly_eval(f: MonicPoly, r: Element | int) -> Element:
    return f(r)


def in_S_r(f: MonicPoly, label: SrLabel | int) -> bool:
    return f.in_S(label)


def require_same_ring(*items: Element) -> Ring:
    ring = items[0].ring
    for item in items[1:]:
        if item.ring != ring:
            raise RingMismatch(f"{ring} vs {item.ring}")
    return ring


def check_finite(ring: Ring) -> None:
    if not ring.is_finite:
        raise InfiniteRing(f"{ring.descriptor} is infinite")
