import pytest

from surfbraid.errors import NotProductOfCyclotomicsError
from surfbraid.intpoly import IntPoly, cyclotomic, cyclotomic_multiplicities, totient


def test_construction_and_degree():
    assert IntPoly.of(0, 0).is_zero()
    assert IntPoly.of(3).degree == 0
    assert IntPoly.of(-1, 0, 1).degree == 2
    assert IntPoly.zero().degree == -1
    assert IntPoly.x_pow_minus_one(3).coeffs == (-1, 0, 0, 1)
    with pytest.raises(ValueError):
        IntPoly((1, 0))


def test_arithmetic():
    p = IntPoly.of(1, 2)       # 1 + 2x
    q = IntPoly.of(-1, 0, 1)   # x^2 - 1
    assert p + q == IntPoly.of(0, 2, 1)
    assert p - p == IntPoly.zero()
    assert p * q == IntPoly.of(-1, -2, 1, 2)
    assert 3 * p == IntPoly.of(3, 6)
    assert p**3 == p * p * p
    assert (IntPoly.x() ** 4).coeffs == (0, 0, 0, 0, 1)
    assert p.evaluate(5) == 11


def test_divmod_exact():
    num = IntPoly.x_pow_minus_one(6)
    quo, rem = divmod(num, IntPoly.of(-1, 1))
    assert rem.is_zero()
    assert quo == IntPoly.of(1, 1, 1, 1, 1, 1)
    assert quo * IntPoly.of(-1, 1) == num
    with pytest.raises(ValueError):
        IntPoly.of(1, 1).exact_div(IntPoly.of(0, 1))
    with pytest.raises(ZeroDivisionError):
        divmod(num, IntPoly.zero())


def test_cyclotomic_known_values():
    assert cyclotomic(1) == IntPoly.of(-1, 1)
    assert cyclotomic(2) == IntPoly.of(1, 1)
    assert cyclotomic(3) == IntPoly.of(1, 1, 1)
    assert cyclotomic(4) == IntPoly.of(1, 0, 1)
    assert cyclotomic(6) == IntPoly.of(1, -1, 1)
    assert cyclotomic(12) == IntPoly.of(1, 0, -1, 0, 1)
    assert cyclotomic(105).degree == totient(105) == 48


def test_cyclotomic_product_over_divisors():
    for n in range(1, 31):
        product = IntPoly.one()
        for d in range(1, n + 1):
            if n % d == 0:
                product = product * cyclotomic(d)
        assert product == IntPoly.x_pow_minus_one(n)


def test_totient():
    assert [totient(d) for d in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_multiplicities_examples():
    assert cyclotomic_multiplicities(IntPoly.of(-1, 0, 1)) == {1: 1, 2: 1}
    assert cyclotomic_multiplicities(IntPoly.of(1, 1, 1)) == {3: 1}
    # (x^3 - 1)^2, built by explicit multiplication as the oracle
    squared = IntPoly.x_pow_minus_one(3) * IntPoly.x_pow_minus_one(3)
    assert cyclotomic_multiplicities(squared) == {1: 2, 3: 2}
    assert cyclotomic_multiplicities(IntPoly.one()) == {}


def test_multiplicities_random_products_round_trip():
    import random

    rng = random.Random(73)
    for _ in range(25):
        expected = {}
        product = IntPoly.one()
        for _ in range(rng.randint(1, 4)):
            d = rng.randint(1, 12)
            expected[d] = expected.get(d, 0) + 1
            product = product * cyclotomic(d)
        assert cyclotomic_multiplicities(product) == dict(sorted(expected.items()))


def test_multiplicities_rejections():
    with pytest.raises(NotProductOfCyclotomicsError):
        cyclotomic_multiplicities(IntPoly.of(2, 0, 1))  # x^2 + 2
    with pytest.raises(NotProductOfCyclotomicsError):
        cyclotomic_multiplicities(IntPoly.of(-2, 2))  # not monic
    with pytest.raises(NotProductOfCyclotomicsError):
        cyclotomic_multiplicities(IntPoly.zero())
    with pytest.raises(NotProductOfCyclotomicsError):
        cyclotomic_multiplicities(IntPoly.of(-2, 1))  # x - 2


def test_str():
    assert str(IntPoly.of(-1, 0, 2)) == "2x^2 - 1"
    assert str(IntPoly.zero()) == "0"
    assert str(IntPoly.of(0, 1)) == "x"
