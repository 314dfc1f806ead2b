from fractions import Fraction

import pytest

from superlie.exprlang import (Bin, Const, ExprSyntaxError, ExprTypeError,
                               Neg, Pow, Rat, Sqrt, evaluate,
                               evaluate_basis_vector, format_expr, parse)
from superlie.field import FieldElem
from superlie.series import PuiseuxSeries

ONE = FieldElem(1)
PREC = Fraction(8)


def test_parse_shapes():
    e = parse("t^(-1)/2")
    assert isinstance(e, Bin) and e.op == "/"
    assert isinstance(e.left, Pow)

    # unary minus binds tighter than '*'
    e = parse("-i*t^(1/2)")
    assert isinstance(e, Bin) and e.op == "*"
    assert isinstance(e.left, Neg)
    assert isinstance(e.right, Pow) and e.right.exponent == Fraction(1, 2)

    e = parse("sqrt((1+sqrt(2*t))/(1-sqrt(2*t)))")
    assert isinstance(e, Sqrt)
    assert isinstance(e.arg, Bin) and e.arg.op == "/"


def test_rational_literal_binds_tightly():
    # "1/2" is one literal: "t^(1/2)" has a rational exponent node
    e = parse("t^(1/2)")
    assert isinstance(e, Pow) and e.exponent == Fraction(1, 2)


def test_syntax_errors_have_position():
    for text in ("", "t^", "2*", "sqrt(", "t^x"):
        with pytest.raises(ExprSyntaxError):
            parse(text)


def test_eval_examples():
    s = evaluate(parse("t^(-1)/2"), PREC)
    assert s.coeff(-1) == FieldElem(Fraction(1, 2))

    s = evaluate(parse("i/sqrt(2)"), PREC)
    assert s.coeff(0) == FieldElem(0, 0, 0, Fraction(1, 2))

    # alpha = sqrt(t) + i*sqrt(1-t) satisfies alpha^2 + 1 = 2*alpha*sqrt(t)
    alpha = evaluate(parse("sqrt(t) + i*sqrt(1-t)"), PREC)
    lhs = alpha * alpha + PuiseuxSeries.from_scalar(ONE)
    rhs = alpha * evaluate(parse("2*sqrt(t)"), PREC)
    diff = lhs - rhs
    assert not diff.terms


def test_format_roundtrip_examples():
    for text in ("t^(1/2)", "-i", "2*t", "t^(-1)/2",
                 "sqrt((1+sqrt(2*t))/(1-sqrt(2*t)))"):
        e = parse(text)
        assert parse(format_expr(e)) == e


def test_basis_vector_evaluation():
    even, odd = evaluate_basis_vector("e1 - 2*f2", 2, 3, PREC)
    assert even[0].coeff(0) == ONE
    assert even[1].is_zero()
    assert odd[1].coeff(0) == FieldElem(-2)

    even, odd = evaluate_basis_vector("t^(-1)*e2", 2, 1, PREC)
    assert even[1].coeff(-1) == ONE


def test_basis_vector_type_errors():
    with pytest.raises(ExprTypeError):
        evaluate_basis_vector("e1*f1", 1, 1, PREC)  # vector * vector
    with pytest.raises(ExprTypeError):
        evaluate_basis_vector("e3", 2, 1, PREC)  # out of range
    with pytest.raises(ExprTypeError):
        evaluate_basis_vector("2*t", 1, 1, PREC)  # scalar, not a vector
    with pytest.raises(ExprTypeError):
        evaluate_basis_vector("1/e1", 1, 1, PREC)  # divide by vector


def test_property_format_parse_roundtrip(rng):
    # randomized expression trees survive format -> parse unchanged
    def rand_expr(depth):
        choice = rng.randint(0, 6 if depth > 0 else 2)
        if choice == 0:
            return parse(str(rng.randint(0, 9)))
        if choice == 1:
            return Const(rng.choice(("i", "sqrt2")))
        if choice == 2:
            return parse("t")
        if choice == 3:
            return Neg(rand_expr(depth - 1))
        if choice == 4:
            op = rng.choice("+-*/")
            right = rand_expr(depth - 1)
            if op == "/":
                # "p/q" fuses into one rational literal, so a bare numeric
                # divisor would not round-trip as a division node
                while isinstance(right, Rat):
                    right = rand_expr(depth - 1)
            return Bin(op, rand_expr(depth - 1), right)
        if choice == 5:
            return Pow(parse("t"), Fraction(rng.randint(-4, 4),
                                            rng.choice((1, 2, 4))))
        return Sqrt(rand_expr(depth - 1))

    for _ in range(1000):
        e = rand_expr(3)
        assert parse(format_expr(e)) == e
