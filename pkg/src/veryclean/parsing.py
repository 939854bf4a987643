"""Text syntax for ring descriptors, elements and 2x2 matrices.

Descriptors::

    Zmod(n)               n a prime power
    GF(p)[u]/(u^k)
    Zloc(p)
    ZlocCap(p,q)
    PS(<descriptor>, m)   truncated power series in x

Elements are sums and products of integers, fractions ``m/n``, the
generator ``u`` of GF(p)[u]/(u^k) and the series variable ``x``, with
``^`` for non-negative powers, parentheses, and implicit multiplication
(``3x``).  Matrices are row-major bracketed lists: ``[[3,2+2x],[2+x,3x]]``.
Whitespace is ignored everywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import QUOT_POLY, TRUNC_SERIES, Element, Ring, RingDescriptor
from .errors import InvalidDescriptor, ParseError
from .matrices import Mat2, Tri2Element
from .rings import make_ring

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            break
        num, name, sym = match.groups()
        start = match.start(match.lastindex)
        if num is not None:
            tokens.append(("num", num, start))
        elif name is not None:
            tokens.append(("name", name, start))
        else:
            tokens.append(("sym", sym, start))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Cursor:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, reason: str) -> ParseError:
        return ParseError(self.text, self.peek[2], reason)

    def expect_sym(self, sym: str) -> None:
        kind, value, _ = self.peek
        if kind != "sym" or value != sym:
            raise self.error(f"expected {sym!r}")
        self.i += 1

    def expect_name(self, name: str) -> None:
        kind, value, _ = self.peek
        if kind != "name" or value != name:
            raise self.error(f"expected {name!r}")
        self.i += 1

    def expect_int(self) -> int:
        kind, value, _ = self.peek
        if kind != "num":
            raise self.error("expected an integer")
        self.i += 1
        return int(value)

    def expect_end(self) -> None:
        if self.peek[0] != "end":
            raise self.error("unexpected trailing input")


def _descriptor(cur: _Cursor) -> RingDescriptor:
    kind, name, pos = cur.peek
    if kind != "name":
        raise cur.error("expected a ring name")
    cur.next()
    try:
        if name == "Zmod":
            cur.expect_sym("(")
            n = cur.expect_int()
            cur.expect_sym(")")
            return RingDescriptor.zmod(n)
        if name == "GF":
            cur.expect_sym("(")
            p = cur.expect_int()
            cur.expect_sym(")")
            cur.expect_sym("[")
            cur.expect_name("u")
            cur.expect_sym("]")
            cur.expect_sym("/")
            cur.expect_sym("(")
            cur.expect_name("u")
            cur.expect_sym("^")
            k = cur.expect_int()
            cur.expect_sym(")")
            return RingDescriptor.quot_poly(p, k)
        if name == "Zloc":
            cur.expect_sym("(")
            p = cur.expect_int()
            cur.expect_sym(")")
            return RingDescriptor.zloc(p)
        if name == "ZlocCap":
            cur.expect_sym("(")
            p = cur.expect_int()
            cur.expect_sym(",")
            q = cur.expect_int()
            cur.expect_sym(")")
            return RingDescriptor.zloc_cap(p, q)
        if name == "PS":
            cur.expect_sym("(")
            base = _descriptor(cur)
            cur.expect_sym(",")
            m = cur.expect_int()
            cur.expect_sym(")")
            return RingDescriptor.series(base, m)
    except InvalidDescriptor as exc:
        raise InvalidDescriptor(f"{exc} (descriptor starting at position {pos})") from None
    raise ParseError(cur.text, pos, f"unknown ring {name!r}")


def parse_ring_descriptor(text: str) -> RingDescriptor:
    cur = _Cursor(text)
    desc = _descriptor(cur)
    cur.expect_end()
    return desc


def parse_ring(text: str) -> Ring:
    return make_ring(parse_ring_descriptor(text))


def _generators(ring: Ring) -> dict[str, Element]:
    gens: dict[str, Element] = {}
    if ring.descriptor.kind == TRUNC_SERIES:
        gens["x"] = ring.generator()
        base = ring.base
        if base.descriptor.kind == QUOT_POLY:
            u = base.generator()
            gens["u"] = ring.element(ring.canonical_p([u]))
    elif ring.descriptor.kind == QUOT_POLY:
        gens["u"] = ring.generator()
    return gens


class _ElementParser:
    def __init__(self, text: str, ring: Ring) -> None:
        self.cur = _Cursor(text)
        self.ring = ring
        self.gens = _generators(ring)

    def parse(self) -> Element:
        value = self.expr()
        self.cur.expect_end()
        return value

    def expr(self) -> Element:
        value = self.term()
        while True:
            kind, sym, _ = self.cur.peek
            if kind == "sym" and sym in "+-":
                self.cur.next()
                rhs = self.term()
                value = value + rhs if sym == "+" else value - rhs
            else:
                return value

    def _starts_factor(self) -> bool:
        kind, value, _ = self.cur.peek
        return kind in ("num", "name") or (kind == "sym" and value == "(")

    def term(self) -> Element:
        value = self.unary()
        while True:
            kind, sym, _ = self.cur.peek
            if kind == "sym" and sym == "*":
                self.cur.next()
                value = value * self.unary()
            elif self._starts_factor():
                value = value * self.power()
            else:
                return value

    def unary(self) -> Element:
        kind, sym, _ = self.cur.peek
        if kind == "sym" and sym in "+-":
            self.cur.next()
            value = self.unary()
            return -value if sym == "-" else value
        return self.power()

    def power(self) -> Element:
        value = self.atom()
        kind, sym, _ = self.cur.peek
        if kind == "sym" and sym == "^":
            self.cur.next()
            value = value ** self.cur.expect_int()
        return value

    def atom(self) -> Element:
        kind, value, pos = self.cur.peek
        if kind == "num":
            self.cur.next()
            k2, s2, _ = self.cur.peek
            if k2 == "sym" and s2 == "/":
                self.cur.next()
                den = self.cur.expect_int()
                if den == 0:
                    raise ParseError(self.cur.text, pos, "zero denominator")
                return self.ring(Fraction(int(value), den))
            return self.ring(int(value))
        if kind == "name":
            self.cur.next()
            if value not in self.gens:
                raise ParseError(self.cur.text, pos, f"unknown symbol {value!r} for {self.ring}")
            return self.gens[value]
        if kind == "sym" and value == "(":
            self.cur.next()
            inner = self.expr()
            self.cur.expect_sym(")")
            return inner
        raise self.cur.error("expected a number, symbol or '('")


def parse_element(text: str, ring: Ring) -> Element:
    """Parse ``text`` as an element of ``ring``.

    Raises :class:`ParseError` on bad syntax and ``NotInRing`` when a
    fraction's denominator is not invertible in the ring.
    """
    return _ElementParser(text, ring).parse()


def _split_top(text: str, start: int, end: int) -> list[tuple[int, int]]:
    parts, depth, last = [], 0, start
    for i in range(start, end):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((last, i))
            last = i + 1
    parts.append((last, end))
    return parts


def _bracketed(text: str, start: int, end: int) -> tuple[int, int]:
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    if start >= end or text[start] != "[" or text[end - 1] != "]":
        raise ParseError(text, start, "expected a bracketed list")
    return start + 1, end - 1


def parse_matrix_rows(text: str) -> list[list[str]]:
    """Split ``[[a,b],[c,d]]`` into element strings (2x2 only)."""
    s, e = _bracketed(text, 0, len(text))
    rows = []
    for rs, re_ in _split_top(text, s, e):
        cs, ce = _bracketed(text, rs, re_)
        cells = [text[a:b].strip() for a, b in _split_top(text, cs, ce)]
        if len(cells) != 2 or any(not c for c in cells):
            raise ParseError(text, cs, "each row must have exactly two entries")
        rows.append(cells)
    if len(rows) != 2:
        raise ParseError(text, s, "expected exactly two rows")
    return rows


def parse_mat2(text: str, ring: Ring) -> Mat2:
    rows = parse_matrix_rows(text)
    return Mat2.from_rows(ring, [[parse_element(c, ring) for c in row] for row in rows])


def parse_tri2(text: str, ring: Ring) -> Tri2Element:
    rows = parse_matrix_rows(text)
    parsed = [[parse_element(c, ring) for c in row] for row in rows]
    if not parsed[1][0].is_zero():
        raise ParseError(text, 0, "lower-left entry of a triangular matrix must be 0")
    return Tri2Element(parsed[0][0], parsed[0][1], parsed[1][1])


def format_matrix(M: Mat2 | Tri2Element) -> list[list[str]]:
    return [[str(e) for e in row] for row in M.rows()]

