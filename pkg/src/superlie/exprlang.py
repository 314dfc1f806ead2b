"""A tiny expression language for degeneration witnesses.

Grammar (whitespace-insensitive)::

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := ['-'] atom ['^' exponent]
    atom     := rational | 'i' | 'sqrt2' | 't' | basis
              | 'sqrt' '(' expr ')' | '(' expr ')'
    exponent := integer | '(' rational ')'
    basis    := 'e' digits | 'f' digits        (vector contexts only)

``evaluate`` maps an expression to a PuiseuxSeries; ``evaluate_vector``
additionally understands basis symbols and returns a pair of coefficient
lists (even part, odd part), which is exactly what a witness's new basis
vector is.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .field import FieldElem, I, ONE, SQRT2
from .series import PuiseuxSeries

# -- AST ----------------------------------------------------------------


@dataclass(frozen=True)
class Rat:
    value: Fraction


@dataclass(frozen=True)
class Const:
    name: str  # 'i' | 'sqrt2' | 't'


@dataclass(frozen=True)
class Basis:
    kind: str  # 'e' | 'f'
    index: int


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Bin:
    op: str  # '+', '-', '*', '/'
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: Fraction


@dataclass(frozen=True)
class Sqrt:
    arg: "Expr"


Expr = Union[Rat, Const, Basis, Neg, Bin, Pow, Sqrt]


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class ExprTypeError(ValueError):
    """Raised when vectors are combined in a non-linear way."""


_TOKEN = re.compile(
    r"\s*(?:(\d+)|(sqrt2)|(sqrt)|(i)|(t)|([ef])(\d+)|([()^*/+\-]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ExprSyntaxError(
                f"unexpected character {text[pos:].lstrip()[0]!r}", pos)
        if m.group(1):
            tokens.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2):
            tokens.append(("sqrt2", None, m.start(2)))
        elif m.group(3):
            tokens.append(("sqrt", None, m.start(3)))
        elif m.group(4):
            tokens.append(("i", None, m.start(4)))
        elif m.group(5):
            tokens.append(("t", None, m.start(5)))
        elif m.group(6):
            tokens.append(("basis", (m.group(6), int(m.group(7))), m.start(6)))
        else:
            tokens.append(("op", m.group(8), m.start(8)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, allow_basis: bool):
        self.tokens = _tokenize(text)
        self.idx = 0
        self.allow_basis = allow_basis

    def peek(self):
        return self.tokens[self.idx]

    def advance(self):
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise ExprSyntaxError(f"expected {op!r}", pos)
        self.advance()

    def parse(self) -> Expr:
        e = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError("trailing input", pos)
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.advance()[1]
            e = Bin(op, e, self.term())
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.advance()[1]
            e = Bin(op, e, self.factor())
        return e

    def factor(self) -> Expr:
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.advance()
            return Neg(self.factor())
        a = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.advance()
            return Pow(a, self.exponent())
        return a

    def exponent(self) -> Fraction:
        kind, val, pos = self.peek()
        neg = False
        if kind == "op" and val == "(":
            self.advance()
            if self.peek()[0] == "op" and self.peek()[1] == "-":
                self.advance()
                neg = True
            kind, val, pos = self.peek()
            if kind != "num":
                raise ExprSyntaxError("expected a rational exponent", pos)
            self.advance()
            num = val
            den = 1
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.advance()
                kind2, val2, pos2 = self.peek()
                if kind2 != "num" or val2 == 0:
                    raise ExprSyntaxError("expected a nonzero denominator", pos2)
                self.advance()
                den = val2
            self.expect_op(")")
            q = Fraction(num, den)
            return -q if neg else q
        if kind == "op" and val == "-":
            self.advance()
            neg = True
            kind, val, pos = self.peek()
        if kind != "num":
            raise ExprSyntaxError("expected an integer exponent", pos)
        self.advance()
        return Fraction(-val if neg else val)

    def atom(self) -> Expr:
        kind, val, pos = self.advance()
        if kind == "num":
            if self.peek()[0] == "op" and self.peek()[1] == "/" and \
                    self.tokens[self.idx + 1][0] == "num":
                # "p/q" binds as one rational literal, so 1/2*t means (1/2)*t
                den = self.tokens[self.idx + 1][1]
                if den == 0:
                    raise ExprSyntaxError("zero denominator",
                                          self.tokens[self.idx + 1][2])
                self.idx += 2
                return Rat(Fraction(val, den))
            return Rat(Fraction(val))
        if kind in ("i", "sqrt2", "t"):
            return Const(kind)
        if kind == "basis":
            if not self.allow_basis:
                raise ExprSyntaxError("basis symbols not allowed here", pos)
            return Basis(val[0], val[1])
        if kind == "sqrt":
            self.expect_op("(")
            inner = self.expr()
            self.expect_op(")")
            return Sqrt(inner)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ExprSyntaxError("expected an atom", pos)


def parse(text: str, allow_basis: bool = False) -> Expr:
    return _Parser(text, allow_basis).parse()


# -- scalar evaluation -----------------------------------------------------


def evaluate(e: Expr, precision: Optional[Fraction] = None) -> PuiseuxSeries:
    if isinstance(e, Rat):
        return PuiseuxSeries.from_scalar(FieldElem(e.value))
    if isinstance(e, Const):
        if e.name == "i":
            return PuiseuxSeries.from_scalar(I)
        if e.name == "sqrt2":
            return PuiseuxSeries.from_scalar(SQRT2)
        return PuiseuxSeries.t_power(1)
    if isinstance(e, Basis):
        raise ExprTypeError("basis symbol in scalar context")
    if isinstance(e, Neg):
        return -evaluate(e.arg, precision)
    if isinstance(e, Bin):
        lhs = evaluate(e.left, precision)
        rhs = evaluate(e.right, precision)
        if e.op == "+":
            return lhs + rhs
        if e.op == "-":
            return lhs - rhs
        if e.op == "*":
            return lhs * rhs
        return lhs * rhs.inv(precision)
    if isinstance(e, Pow):
        return evaluate(e.base, precision).pow(e.exponent, precision)
    if isinstance(e, Sqrt):
        return evaluate(e.arg, precision).sqrt(precision)
    raise TypeError(f"not an expression node: {e!r}")


# -- vector evaluation -------------------------------------------------------

VecValue = Tuple[List[PuiseuxSeries], List[PuiseuxSeries]]


def _zero_vec(m: int, n: int) -> VecValue:
    z = PuiseuxSeries({})
    return ([z] * m, [z] * n)


def _vec_add(u: VecValue, v: VecValue, sign: int) -> VecValue:
    return ([a + b if sign > 0 else a - b for a, b in zip(u[0], v[0])],
            [a + b if sign > 0 else a - b for a, b in zip(u[1], v[1])])


def _vec_scale(s: PuiseuxSeries, v: VecValue) -> VecValue:
    return ([s * a for a in v[0]], [s * a for a in v[1]])


def evaluate_vector(e: Expr, m: int, n: int,
                    precision: Optional[Fraction] = None):
    """Evaluate in the free module with basis e1..em, f1..fn.

    Returns ('scalar', PuiseuxSeries) or ('vector', (even, odd)).
    """
    if isinstance(e, Basis):
        even, odd = _zero_vec(m, n)
        one = PuiseuxSeries.from_scalar(ONE)
        if e.kind == "e":
            if not 1 <= e.index <= m:
                raise ExprTypeError(f"basis vector e{e.index} out of range")
            even = list(even)
            even[e.index - 1] = one
        else:
            if not 1 <= e.index <= n:
                raise ExprTypeError(f"basis vector f{e.index} out of range")
            odd = list(odd)
            odd[e.index - 1] = one
        return ("vector", (even, odd))
    if isinstance(e, Neg):
        kind, v = evaluate_vector(e.arg, m, n, precision)
        if kind == "scalar":
            return (kind, -v)
        return (kind, _vec_scale(PuiseuxSeries.from_scalar(FieldElem(-1)), v))
    if isinstance(e, Bin):
        lk, lv = evaluate_vector(e.left, m, n, precision)
        rk, rv = evaluate_vector(e.right, m, n, precision)
        if e.op in "+-":
            sign = 1 if e.op == "+" else -1
            if lk != rk:
                raise ExprTypeError("cannot add a scalar and a vector")
            if lk == "scalar":
                return ("scalar", lv + rv if sign > 0 else lv - rv)
            return ("vector", _vec_add(lv, rv, sign))
        if e.op == "*":
            if lk == "scalar" and rk == "scalar":
                return ("scalar", lv * rv)
            if lk == "scalar":
                return ("vector", _vec_scale(lv, rv))
            if rk == "scalar":
                return ("vector", _vec_scale(rv, lv))
            raise ExprTypeError("cannot multiply two vectors")
        # division
        if rk != "scalar":
            raise ExprTypeError("cannot divide by a vector")
        inv = rv.inv(precision)
        if lk == "scalar":
            return ("scalar", lv * inv)
        return ("vector", _vec_scale(inv, lv))
    if isinstance(e, (Pow, Sqrt, Rat, Const)):
        return ("scalar", evaluate(e, precision))
    raise TypeError(f"not an expression node: {e!r}")


def evaluate_basis_vector(text: str, m: int, n: int,
                          precision: Optional[Fraction] = None) -> VecValue:
    kind, value = evaluate_vector(parse(text, allow_basis=True), m, n, precision)
    if kind != "vector":
        raise ExprTypeError(f"{text!r} is a scalar, not a basis vector")
    return value


# -- formatting ---------------------------------------------------------------


def format_expr(e: Expr) -> str:
    """Parenthesized-when-needed text form; parse(format_expr(e)) == e."""
    def prec_of(node) -> int:
        if isinstance(node, Bin):
            return 1 if node.op in "+-" else 2
        if isinstance(node, Neg):
            return 3
        if isinstance(node, Pow):
            return 3
        return 4

    def wrap(node, minimum):
        txt = format_expr(node)
        return f"({txt})" if prec_of(node) < minimum else txt

    if isinstance(e, Rat):
        return str(e.value)
    if isinstance(e, Const):
        return e.name
    if isinstance(e, Basis):
        return f"{e.kind}{e.index}"
    if isinstance(e, Neg):
        # unary minus takes a factor: anything below Pow/Neg level needs parens
        return "-" + wrap(e.arg, 3)
    if isinstance(e, Bin):
        if e.op in "+-":
            return f"{wrap(e.left, 1)} {e.op} {wrap(e.right, 2)}"
        return f"{wrap(e.left, 2)}{e.op}{wrap(e.right, 3)}"
    if isinstance(e, Pow):
        ex = e.exponent
        base = wrap(e.base, 4)
        if ex.denominator == 1 and ex >= 0:
            return f"{base}^{ex}"
        return f"{base}^({ex})"
    if isinstance(e, Sqrt):
        return f"sqrt({format_expr(e.arg)})"
    raise TypeError(f"not an expression node: {e!r}")
