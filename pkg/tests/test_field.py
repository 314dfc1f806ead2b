from fractions import Fraction

import pytest

from superlie.field import (FieldElem, FieldSyntaxError, field_sqrt,
                            format_elem, parse_elem)

from conftest import rand_elem


def coords(x):
    return (x.a, x.b, x.c, x.d)


def test_parse_examples():
    assert coords(parse_elem("-1/2*i")) == (0, Fraction(-1, 2), 0, 0)
    assert coords(parse_elem("sqrt2/2")) == (0, 0, Fraction(1, 2), 0)
    assert coords(parse_elem("3/4 + i*sqrt2")) == (Fraction(3, 4), 0, 0, 1)
    assert coords(parse_elem("-1/2*i + 3/4*sqrt2")) == \
        (0, Fraction(-1, 2), Fraction(3, 4), 0)


def test_parse_rejects_garbage():
    for text in ("", "1 +", "sqrt3", "i i", "1/*2"):
        with pytest.raises(FieldSyntaxError):
            parse_elem(text)


def test_basic_arithmetic():
    i = FieldElem(0, 1)
    r2 = FieldElem(0, 0, 1)
    assert i * i == FieldElem(-1)
    assert r2 * r2 == FieldElem(2)
    assert (i * r2) * (i * r2) == FieldElem(-2)
    assert (FieldElem(1) + i) * (FieldElem(1) - i) == FieldElem(2)


def test_inverse_and_division():
    x = FieldElem(Fraction(3, 4), Fraction(-1, 2), 2, Fraction(1, 3))
    assert x * x.inv() == FieldElem(1)
    assert (x / x) == FieldElem(1)
    with pytest.raises(ZeroDivisionError):
        FieldElem(0).inv()


def test_field_sqrt_known_values():
    assert field_sqrt(FieldElem(2)) == FieldElem(0, 0, 1)       # sqrt2
    assert field_sqrt(FieldElem(-1)) == FieldElem(0, 1)         # i
    assert field_sqrt(FieldElem(0)) == FieldElem(0)
    # sqrt(2i) = 1 + i lies in the field
    s = field_sqrt(FieldElem(0, 2))
    assert s is not None and s * s == FieldElem(0, 2)
    # 3 has no square root in Q(i, sqrt2)
    assert field_sqrt(FieldElem(3)) is None


def test_sqrt_branch_deterministic():
    # the returned root has the lexicographically larger coordinate tuple
    s = field_sqrt(FieldElem(2))
    assert (s.a, s.b, s.c, s.d) > ((-s).a, (-s).b, (-s).c, (-s).d)


def test_property_roundtrip_and_axioms(rng):
    for _ in range(1000):
        x = rand_elem(rng)
        y = rand_elem(rng)
        z = rand_elem(rng)
        assert parse_elem(format_elem(x)) == x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        if not x.is_zero():
            assert x * x.inv() == FieldElem(1)


def test_property_sqrt_squares_back(rng):
    found = 0
    for _ in range(1000):
        x = rand_elem(rng, span=5)
        s = field_sqrt(x * x)  # perfect squares always have a root
        assert s is not None and s * s == x * x
        found += 1
    assert found == 1000
