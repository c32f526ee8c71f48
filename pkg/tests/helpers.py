"""Shared test oracles, kept independent of the code paths they check:
brute-force multiplication, rational linear algebra on flattened vectors,
cofactor determinants, Smith normal form, and principal-minor sums.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from surfbraid.core import CoeffVector, Element, GroupDescriptor
from surfbraid.intmatrix import IntMatrix
from surfbraid.intpoly import IntPoly
from surfbraid.permutations import Permutation


def random_element(rng: random.Random, group: GroupDescriptor, bound: int = 3) -> Element:
    rows = tuple(
        tuple(rng.randint(-bound, bound) for _ in range(group.handle_count))
        for _ in range(group.n)
    )
    images = list(range(1, group.n + 1))
    rng.shuffle(images)
    return Element(group, CoeffVector(rows), Permutation(tuple(images)))


def random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def power_by_repeated_mul(x: Element, k: int) -> Element:
    """Plain left-to-right multiplication, no squaring shortcuts."""
    assert k >= 0
    acc = Element.identity(x.group)
    for _ in range(k):
        acc = acc * x
    return acc


def order_by_repeated_mul(x: Element, cap: int) -> int | None:
    acc = x
    for k in range(1, cap + 1):
        if acc.is_identity():
            return k
        acc = acc * x
    return None


def flatten(vec: CoeffVector) -> tuple[int, ...]:
    return tuple(v for row in vec.rows for v in row)


def rational_solve(columns: list[tuple[int, ...]], target: tuple[int, ...]) -> list[Fraction] | None:
    """Solve sum_j x_j * columns[j] == target exactly over Q, or None."""
    m, k = len(target), len(columns)
    a = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(m)]
    row = 0
    pivots = []
    for col in range(k):
        pivot = next((i for i in range(row, m) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = 1 / a[row][col]
        a[row] = [v * inv for v in a[row]]
        for i in range(m):
            if i != row and a[i][col] != 0:
                f = a[i][col]
                a[i] = [v - f * w for v, w in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
    for i in range(row, m):
        if a[i][k] != 0:
            return None
    solution = [Fraction(0)] * k
    for r, col in enumerate(pivots):
        solution[col] = a[r][k]
    return solution


def integer_span_coords(basis: list[CoeffVector], target: CoeffVector) -> tuple[int, ...] | None:
    """Coordinates of target in the integer span of basis, or None.

    The bases used in tests are Q-linearly independent, so the rational
    solution is unique and membership reduces to integrality.
    """
    sol = rational_solve([flatten(b) for b in basis], flatten(target))
    if sol is None:
        return None
    if any(v.denominator != 1 for v in sol):
        return None
    return tuple(int(v) for v in sol)


def cofactor_det(rows: list[list[int]]) -> int:
    m = len(rows)
    if m == 0:
        return 1
    if m == 1:
        return rows[0][0]
    total = 0
    for j in range(m):
        if rows[0][j] == 0:
            continue
        minor = [[rows[i][jj] for jj in range(m) if jj != j] for i in range(1, m)]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def char_poly_by_cofactors(matrix: IntMatrix) -> IntPoly:
    """det(xI - M) via cofactor expansion with polynomial entries (small m only)."""
    m = matrix.nrows

    def det(rows: list[list[IntPoly]]) -> IntPoly:
        if not rows:
            return IntPoly.one()
        if len(rows) == 1:
            return rows[0][0]
        total = IntPoly.zero()
        for j in range(len(rows)):
            entry = rows[0][j]
            if entry.is_zero():
                continue
            minor = [[rows[i][jj] for jj in range(len(rows)) if jj != j] for i in range(1, len(rows))]
            term = entry * det(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    x = IntPoly.x()
    rows = [
        [
            (x if i == j else IntPoly.zero()) - IntPoly.of(matrix.rows[i][j])
            for j in range(m)
        ]
        for i in range(m)
    ]
    return det(rows)


def sum_principal_minors(matrix: IntMatrix, k: int) -> int:
    """Trace of the k-th exterior power, as an explicit sum of k x k minors."""
    m = matrix.nrows
    total = 0
    for subset in itertools.combinations(range(m), k):
        sub = [[matrix.rows[i][j] for j in subset] for i in subset]
        total += cofactor_det(sub)
    return total


def smith_invariant_factors(rows: list[list[int]]) -> list[int]:
    """Invariant factors of a small integer matrix via determinant divisors:
    s_k = gcd of all k x k minors divided by the gcd of the (k-1) x (k-1)
    minors, stopping at the rank."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    factors = []
    prev_gcd = 1
    for k in range(1, min(n_rows, n_cols) + 1):
        g = 0
        for ri in itertools.combinations(range(n_rows), k):
            for ci in itertools.combinations(range(n_cols), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                g = math.gcd(g, cofactor_det(sub))
        if g == 0:
            break
        factors.append(g // prev_gcd)
        prev_gcd = g
    return factors
