from superlie.field import FieldElem
from superlie.linalg import det, kernel, mat_mul, rank, solve, transpose

from conftest import rand_elem

ZERO = FieldElem(0)
ONE = FieldElem(1)


def eye(size):
    return [[ONE if i == j else ZERO for j in range(size)]
            for i in range(size)]


def test_rank_and_kernel_small():
    m = [[ONE, ONE], [ONE, ONE]]
    assert rank(m) == 1
    ker = kernel(m)
    assert len(ker) == 1
    v = ker[0]
    assert (v[0] + v[1]).is_zero()


def test_det_values():
    assert det(eye(3)) == ONE
    assert det([[ONE, ONE], [ONE, ONE]]).is_zero()


def test_solve_roundtrip(rng):
    for _ in range(50):
        size = rng.randint(1, 4)
        while True:
            a = [[rand_elem(rng, 4) for _ in range(size)]
                 for _ in range(size)]
            if not det(a).is_zero():
                break
        b = [[rand_elem(rng, 4)] for _ in range(size)]
        x = solve(a, b)
        assert mat_mul(a, x) == b


def test_rank_kernel_dimension_theorem(rng):
    for _ in range(100):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        a = [[rand_elem(rng, 3) for _ in range(cols)] for _ in range(rows)]
        r = rank(a)
        ker = kernel(a)
        assert r + len(ker) == cols
        for v in ker:
            image = mat_mul(a, transpose([v]))
            assert all(entry.is_zero() for row in image for entry in row)
