import random

import pytest

from surfbraid.intmatrix import IntMatrix
from surfbraid.intpoly import IntPoly

from helpers import char_poly_by_cofactors, cofactor_det


def random_matrix(rng, m, bound=4):
    return IntMatrix.from_rows([[rng.randint(-bound, bound) for _ in range(m)] for _ in range(m)])


def companion_of_x_pow_minus_one(n):
    rows = [[0] * n for _ in range(n)]
    rows[0][n - 1] = 1
    for j in range(1, n):
        rows[j][j - 1] = 1
    return IntMatrix.from_rows(rows)


def test_shape_validation():
    with pytest.raises(ValueError):
        IntMatrix(((1, 2), (3,)))
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2]]).det()


def test_product_and_power():
    a = IntMatrix.from_rows([[1, 1], [0, 1]])
    assert a * a == IntMatrix.from_rows([[1, 2], [0, 1]])
    assert a**5 == IntMatrix.from_rows([[1, 5], [0, 1]])
    assert a**0 == IntMatrix.identity(2)
    assert (a - a) == IntMatrix.from_rows([[0, 0], [0, 0]])
    assert a.trace() == 2
    assert a.apply((3, 4)) == (7, 4)


def test_block_diag():
    a = IntMatrix.from_rows([[2]])
    b = IntMatrix.from_rows([[0, 1], [1, 0]])
    assert IntMatrix.block_diag(a, b) == IntMatrix.from_rows(
        [[2, 0, 0], [0, 0, 1], [0, 1, 0]]
    )


def test_det_against_cofactor_oracle():
    rng = random.Random(79)
    for m in range(1, 6):
        for _ in range(20):
            a = random_matrix(rng, m)
            assert a.det() == cofactor_det([list(r) for r in a.rows])
    singular = IntMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 5]])
    assert singular.det() == 0


def test_rank():
    assert IntMatrix.identity(4).rank() == 4
    assert IntMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 5]]).rank() == 2
    assert IntMatrix.from_rows([[0, 0], [0, 0]]).rank() == 0
    assert IntMatrix.from_rows([[1, 2, 3], [0, 1, 1]]).rank() == 2


def test_char_poly_identity():
    assert IntMatrix.identity(2).char_poly() == IntPoly.of(1, -2, 1)


def test_char_poly_companion():
    for n in range(2, 7):
        assert companion_of_x_pow_minus_one(n).char_poly() == IntPoly.x_pow_minus_one(n)


def test_char_poly_against_cofactor_oracle():
    rng = random.Random(83)
    for m in range(1, 6):
        for _ in range(12):
            a = random_matrix(rng, m)
            assert a.char_poly() == char_poly_by_cofactors(a)


def test_char_poly_consistent_with_det():
    rng = random.Random(89)
    for m in range(1, 6):
        a = random_matrix(rng, m)
        p = a.char_poly()
        # det(xI - M) at x = 0 is (-1)^m det(M)
        assert p.evaluate(0) == (-1) ** m * a.det()
        assert p.is_monic() and p.degree == m
