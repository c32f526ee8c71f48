"""Exact integer polynomials and cyclotomic factorization.

A polynomial is a dense coefficient tuple, constant term first, with
trailing zeros trimmed; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import NotProductOfCyclotomicsError


@dataclass(frozen=True)
class IntPoly:
    """A polynomial over the integers.

    >>> IntPoly.of(-1, 0, 1).degree
    2
    >>> IntPoly.of(-1, 0, 1) == IntPoly.x_pow_minus_one(2)
    True
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient; use IntPoly.of to normalize")

    @classmethod
    def of(cls, *coeffs: int) -> IntPoly:
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        return cls(tuple(int(c) for c in coeffs[:end]))

    @classmethod
    def zero(cls) -> IntPoly:
        return cls(())

    @classmethod
    def one(cls) -> IntPoly:
        return cls((1,))

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def x_pow_minus_one(cls, n: int) -> IntPoly:
        if n < 1:
            raise ValueError("n must be >= 1")
        return cls((-1,) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        """Degree of the leading term; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly.of(*(x + y for x, y in zip(a, b)))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly.of(*(c * other for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j, d in enumerate(other.coeffs):
                out[i + j] += c * d
        return IntPoly.of(*out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = IntPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Exact Euclidean division over Z; the divisor's leading coefficient
        must divide every leading coefficient encountered."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quo = [0] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        while len(rem) >= len(other.coeffs) and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < len(other.coeffs):
                break
            q, r = divmod(rem[-1], lead)
            if r != 0:
                raise ValueError(f"{rem[-1]} is not divisible by leading coefficient {lead}")
            shift = len(rem) - len(other.coeffs)
            quo[shift] = q
            for j, d in enumerate(other.coeffs):
                rem[shift + j] -= q * d
        return IntPoly.of(*quo), IntPoly.of(*rem)

    def exact_div(self, other: IntPoly) -> IntPoly:
        quo, rem = divmod(self, other)
        if not rem.is_zero():
            raise ValueError("division is not exact")
        return quo

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        return " ".join(parts)


def totient(d: int) -> int:
    if d < 1:
        raise ValueError("totient is defined for positive integers")
    result, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@functools.lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, by exact division of x^d - 1.

    >>> str(cyclotomic(6))
    'x^2 - x + 1'
    """
    if d < 1:
        raise ValueError("cyclotomic index must be >= 1")
    poly = IntPoly.x_pow_minus_one(d)
    for e in range(1, d):
        if d % e == 0:
            poly = poly.exact_div(cyclotomic(e))
    return poly


def cyclotomic_multiplicities(p: IntPoly) -> dict[int, int]:
    """Factor p as a product of cyclotomic polynomials, returning {d: multiplicity}.

    Raises NotProductOfCyclotomicsError when p is not monic or some factor
    is not cyclotomic.  Candidate indices d satisfy totient(d) <= deg, and
    totient(d) >= sqrt(d/2) bounds the search.
    """
    if p.is_zero() or not p.is_monic():
        raise NotProductOfCyclotomicsError(f"not a monic polynomial: {p}")
    work = p
    out: dict[int, int] = {}
    d = 1
    while work.degree > 0:
        if d > 2 * work.degree * work.degree + 1:
            raise NotProductOfCyclotomicsError(
                f"irreducible non-cyclotomic factor remains: {work}"
            )
        if totient(d) <= work.degree:
            phi = cyclotomic(d)
            while True:
                quo, rem = divmod_or_none(work, phi)
                if quo is None or not rem.is_zero():
                    break
                work = quo
                out[d] = out.get(d, 0) + 1
                if work.degree == 0:
                    break
        d += 1
    if work != IntPoly.one():
        raise NotProductOfCyclotomicsError(f"constant factor {work} is not 1")
    return dict(sorted(out.items()))


def divmod_or_none(num: IntPoly, den: IntPoly) -> tuple[IntPoly | None, IntPoly]:
    """divmod that returns (None, num) when the coefficient division is not exact."""
    try:
        quo, rem = divmod(num, den)
    except ValueError:
        return None, num
    return quo, rem
