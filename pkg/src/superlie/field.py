"""Exact arithmetic in the field Q(i, sqrt2).

Every scalar is ``a + b*i + c*sqrt2 + d*i*sqrt2`` with rational coordinates.
This field is closed under the square roots needed by the degeneration
witnesses (it contains i, sqrt2, 1/sqrt2, sqrt(-1/2), ...), and equality is
decidable, so all verification in the package is exact.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Optional, Union


def _rat_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _raw(a, b, c, d):
    # internal constructor for coordinates that are already Fractions
    x = FieldElem.__new__(FieldElem)
    x.a = a
    x.b = b
    x.c = c
    x.d = d
    return x


class FieldElem:
    """An element a + b*i + c*sqrt2 + d*i*sqrt2 of Q(i, sqrt2)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(q) -> "FieldElem":
        return FieldElem(Fraction(q))

    def coords(self):
        return (self.a, self.b, self.c, self.d)

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.a

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _raw(self.a + other.a, self.b + other.b,
                    self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self):
        return _raw(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # rational factors (the overwhelmingly common case) scale coordinatewise
        if not (self.b or self.c or self.d):
            q = self.a
            if not q:
                return self
            return _raw(q * other.a, q * other.b, q * other.c, q * other.d)
        if not (other.b or other.c or other.d):
            q = other.a
            if not q:
                return other
            return _raw(q * self.a, q * self.b, q * self.c, q * self.d)
        # Write x = (a+bi) + (c+di)*sqrt2 and multiply over Q(i).
        a1, b1, c1, d1 = self.coords()
        a2, b2, c2, d2 = other.coords()
        # Gaussian products (p+qi)(r+si) = (pr-qs) + (ps+qr)i
        # x1*x2:
        ra = a1 * a2 - b1 * b2
        rb = a1 * b2 + b1 * a2
        # 2*y1*y2:
        ra += 2 * (c1 * c2 - d1 * d2)
        rb += 2 * (c1 * d2 + d1 * c2)
        # x1*y2 + y1*x2:
        rc = a1 * c2 - b1 * d2 + c1 * a2 - d1 * b2
        rd = a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2
        return _raw(ra, rb, rc, rd)

    __rmul__ = __mul__

    def inv(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(i, sqrt2)")
        # Multiply by the sqrt2-conjugate to land in Q(i), then invert there.
        conj = FieldElem(self.a, self.b, -self.c, -self.d)
        z = self * conj  # in Q(i): z = u + v*i
        u, v = z.a, z.b
        nrm = u * u + v * v
        zi = FieldElem(u / nrm, -v / nrm)
        return conj * zi

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coords() == other.coords()

    def __hash__(self):
        return hash(self.coords())

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"FieldElem({format_elem(self)!r})"

    def __str__(self):
        return format_elem(self)


def _coerce(x) -> Union["FieldElem", type(NotImplemented)]:
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElem(x)
    return NotImplemented


ZERO = FieldElem(0)
ONE = FieldElem(1)
I = FieldElem(0, 1)
SQRT2 = FieldElem(0, 0, 1)


# -- square roots -----------------------------------------------------

def _gaussian_sqrt(u: Fraction, v: Fraction):
    """Square root of u + v*i inside Q(i), as an (x, y) pair, or None."""
    if v == 0:
        r = _rat_sqrt(u)
        if r is not None:
            return (r, Fraction(0))
        r = _rat_sqrt(-u)
        if r is not None:
            return (Fraction(0), r)
        return None
    r = _rat_sqrt(u * u + v * v)
    if r is None:
        return None
    x = _rat_sqrt((u + r) / 2)
    if x is None or x == 0:
        return None
    return (x, v / (2 * x))


def field_sqrt(x: FieldElem) -> Optional[FieldElem]:
    """Exact square root inside Q(i, sqrt2), or None if no root lies in the field.

    Of the two roots the one with the lexicographically larger coordinate
    tuple (a, b, c, d) is returned, so the choice is deterministic.
    """
    if x.is_zero():
        return ZERO
    # x = X + Y*sqrt2 with X, Y in Q(i); seek s = A + B*sqrt2 likewise.
    X = (x.a, x.b)
    Y = (x.c, x.d)
    candidates = []

    def push(A, B):
        s = FieldElem(A[0], A[1], B[0], B[1])
        if s * s == x:
            candidates.append(s)

    if Y == (Fraction(0), Fraction(0)):
        A = _gaussian_sqrt(*X)
        if A is not None:
            push(A, (Fraction(0), Fraction(0)))
        B = _gaussian_sqrt(X[0] / 2, X[1] / 2)
        if B is not None:
            push((Fraction(0), Fraction(0)), B)
    else:
        # A^2 satisfies 2*A^4 - 2*X*A^2 + Y^2 = 0, i.e. A^2 = (X +- sqrt(X^2-2Y^2))/2,
        # with all arithmetic in Q(i).
        Xu, Xv = X
        Yu, Yv = Y
        # X^2 and Y^2 as Gaussian rationals
        X2 = (Xu * Xu - Xv * Xv, 2 * Xu * Xv)
        Y2 = (Yu * Yu - Yv * Yv, 2 * Yu * Yv)
        D = (X2[0] - 2 * Y2[0], X2[1] - 2 * Y2[1])
        rD = _gaussian_sqrt(*D)
        if rD is not None:
            for sign in (1, -1):
                Asq = ((Xu + sign * rD[0]) / 2, (Xv + sign * rD[1]) / 2)
                A = _gaussian_sqrt(*Asq)
                if A is None or A == (Fraction(0), Fraction(0)):
                    continue
                # B = Y / (2A) in Q(i)
                au, av = A
                nrm = au * au + av * av
                iu, iv = au / (2 * nrm), -av / (2 * nrm)
                B = (Yu * iu - Yv * iv, Yu * iv + Yv * iu)
                push(A, B)
    if not candidates:
        return None
    roots = set()
    for s in candidates:
        roots.add(s)
        roots.add(-s)
    return max(roots, key=lambda s: s.coords())


# -- parsing / formatting ---------------------------------------------
#
# Grammar (whitespace-insensitive):
#   elem   := term (('+' | '-') term)*
#   term   := ['-'] factor (('*' | '/') factor)*
#   factor := rational | 'i' | 'sqrt2'
#   rational := integer ['/' integer]
# Division by i or sqrt2 is allowed and folded exactly.

_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt2)|(i)|([+\-*/]))")


class FieldSyntaxError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise FieldSyntaxError(f"unexpected character {text[pos:].strip()[0]!r}",
                                   pos)
        if m.group(1):
            tokens.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2):
            tokens.append(("sqrt2", None, m.start(2)))
        elif m.group(3):
            tokens.append(("i", None, m.start(3)))
        else:
            tokens.append(("op", m.group(4), m.start(4)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def parse_elem(text: str) -> FieldElem:
    """Parse the canonical scalar notation, e.g. ``-1/2*i + 3/4*sqrt2``."""
    tokens = _tokenize(text)
    idx = 0

    def peek():
        return tokens[idx]

    def factor() -> FieldElem:
        nonlocal idx
        kind, val, pos = tokens[idx]
        if kind == "num":
            idx += 1
            if tokens[idx][0] == "op" and tokens[idx][1] == "/" and \
                    tokens[idx + 1][0] == "num":
                den = tokens[idx + 1][1]
                if den == 0:
                    raise FieldSyntaxError("zero denominator", tokens[idx + 1][2])
                idx += 2
                return FieldElem(Fraction(val, den))
            return FieldElem(val)
        if kind == "i":
            idx += 1
            return I
        if kind == "sqrt2":
            idx += 1
            return SQRT2
        raise FieldSyntaxError("expected a number, 'i' or 'sqrt2'", pos)

    def term() -> FieldElem:
        nonlocal idx
        sign = ONE
        while peek()[0] == "op" and peek()[1] in "+-":
            if peek()[1] == "-":
                sign = -sign
            idx += 1
        value = factor()
        while peek()[0] == "op" and peek()[1] in "*/":
            op = peek()[1]
            idx += 1
            rhs = factor()
            value = value * rhs if op == "*" else value / rhs
        return sign * value

    result = term()
    while peek()[0] == "op" and peek()[1] in "+-":
        op = peek()[1]
        idx += 1
        rhs_start = idx
        rhs = term()
        del rhs_start
        result = result + rhs if op == "+" else result - rhs
    kind, _, pos = peek()
    if kind != "end":
        raise FieldSyntaxError("trailing input", pos)
    return result


def _format_part(q: Fraction, symbol: str, first: bool) -> str:
    sign = "-" if q < 0 else ("" if first else "+")
    if not first:
        sign = " - " if q < 0 else " + "
    q = abs(q)
    if symbol and q == 1:
        coeff = ""
    else:
        coeff = str(q) + ("*" if symbol else "")
    return f"{sign}{coeff}{symbol}"


def format_elem(x: FieldElem) -> str:
    """Canonical text form; ``parse_elem(format_elem(x)) == x``."""
    parts = []
    for q, symbol in ((x.a, ""), (x.b, "i"), (x.c, "sqrt2"), (x.d, "i*sqrt2")):
        if q:
            parts.append(_format_part(q, symbol, first=not parts))
    if not parts:
        return "0"
    return "".join(parts)
