import json

import pytest

from surfbraid.bieberbach import make_bieberbach
from surfbraid.intmatrix import IntMatrix
from surfbraid.intpoly import IntPoly
from surfbraid.invariants import (
    CyclicRep,
    anosov_check,
    betti_numbers,
    eigenvalue_multiplicities,
    invariant_report,
    kahler_check,
    orientability,
)

from helpers import sum_principal_minors


def holonomy_rep(n, g):
    return CyclicRep(make_bieberbach(n, g).holonomy_matrix(), n)


def diag(*entries):
    m = len(entries)
    return IntMatrix.from_rows([[entries[i] if i == j else 0 for j in range(m)] for i in range(m)])


def companion_x3_minus_one():
    return IntMatrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])


def test_cyclic_rep_validation():
    with pytest.raises(ValueError):
        CyclicRep(IntMatrix.from_rows([[1, 1], [0, 1]]), 2)  # infinite order
    with pytest.raises(ValueError):
        CyclicRep(IntMatrix.identity(2), 0)
    rep = CyclicRep(diag(-1, -1), 2)
    assert rep.dimension == 2


def test_orientability():
    for n in range(2, 7):
        for g in (1, 2):
            assert orientability(holonomy_rep(n, g))
    assert not orientability(CyclicRep(diag(-1, 1), 2))
    assert orientability(CyclicRep(IntMatrix.identity(3), 1))


def test_betti_torus_two_strand_case():
    # Eigenvalues of the generator are {1, 1, -1, -1}; averaging the
    # characteristic coefficients of I and the generator gives the oracle:
    # (binom(4,i) + [t^i](1-t^2)^2) / 2 = (1, 2, 2, 2, 1).
    rep = holonomy_rep(2, 1)
    betti = betti_numbers(rep)
    signed = IntPoly.of(1, 0, -1) * IntPoly.of(1, 0, -1)  # (1 - t^2)^2
    binom = IntPoly.of(1, 1) ** 4
    oracle = tuple(
        (binom.coeffs[i] + (signed.coeffs[i] if i <= signed.degree else 0)) // 2
        for i in range(5)
    )
    assert betti == oracle == (1, 2, 2, 2, 1)


def test_betti_against_principal_minor_oracle():
    # Independent route: [t^i] det(I + t M^j) is the sum of principal
    # i x i minors of M^j.
    for n, g in [(2, 1), (3, 1), (2, 2)]:
        rep = holonomy_rep(n, g)
        m = rep.dimension
        oracle = []
        for i in range(m + 1):
            total = sum(sum_principal_minors(rep.matrix**j, i) for j in range(n))
            assert total % n == 0
            oracle.append(total // n)
        assert betti_numbers(rep) == tuple(oracle)


def test_betti_three_strand_frozen():
    # Derived from the eigenvalue multiset {1,1,w,w,w^2,w^2}: the nontrivial
    # powers contribute (1 + t^3)^2, so beta = (C(6,i) + 2*[t^i](1+t^3)^2)/3.
    assert betti_numbers(holonomy_rep(3, 1)) == (1, 2, 5, 8, 5, 2, 1)


def test_betti_genus_two_frozen():
    # (2, 2): nontrivial power contributes (1 - t^2)^4.
    assert betti_numbers(holonomy_rep(2, 2)) == (1, 4, 12, 28, 38, 28, 12, 4, 1)


def test_betti_trivial_group():
    assert betti_numbers(CyclicRep(IntMatrix.identity(4), 1)) == (1, 4, 6, 4, 1)


def test_betti_structure_properties():
    for n in range(2, 6):
        for g in (1, 2, 3):
            betti = betti_numbers(holonomy_rep(n, g))
            m = 2 * n * g
            assert betti[0] == 1
            assert betti[1] == 2 * g
            assert sum((-1) ** i * b for i, b in enumerate(betti)) == 0
            assert all(betti[i] == betti[m - i] for i in range(m + 1))


def test_eigenvalue_multiplicities():
    rep = holonomy_rep(3, 2)
    mult = eigenvalue_multiplicities(rep)
    assert mult == {0: 4, 1: 4, 2: 4}
    assert sum(mult.values()) == rep.dimension
    rep2 = CyclicRep(diag(-1, -1), 2)
    assert eigenvalue_multiplicities(rep2) == {0: 0, 1: 2}
    # identity with declared order 2: all eigenvalues are 1
    assert eigenvalue_multiplicities(CyclicRep(IntMatrix.identity(2), 2)) == {0: 2, 1: 0}


def test_anosov():
    for n in range(2, 6):
        for g in (1, 2):
            assert anosov_check(holonomy_rep(n, g))
    assert not anosov_check(CyclicRep(companion_x3_minus_one(), 3))
    doubled = IntMatrix.block_diag(companion_x3_minus_one(), companion_x3_minus_one())
    assert anosov_check(CyclicRep(doubled, 3))


def test_kahler():
    for n in range(2, 6):
        for g in (1, 2):
            assert kahler_check(holonomy_rep(n, g))
    assert not kahler_check(CyclicRep(diag(1, -1, -1), 2))  # odd dimension
    assert kahler_check(CyclicRep(diag(-1, -1), 2))  # sign representation twice
    assert not kahler_check(CyclicRep(diag(1, -1), 2))  # both real summands once
    assert kahler_check(CyclicRep(IntMatrix.identity(2), 1))


def test_char_poly_of_holonomy():
    for n in range(2, 9):
        for g in (1, 3):
            matrix = make_bieberbach(n, g).holonomy_matrix()
            assert matrix.char_poly() == IntPoly.x_pow_minus_one(n) ** (2 * g)


def test_invariant_report_shape():
    report = invariant_report(holonomy_rep(2, 1))
    assert list(report.keys()) == [
        "char_poly",
        "det",
        "betti",
        "anosov",
        "kahler",
        "orientable",
        "cyclotomic",
    ]
    assert report["char_poly"] == [1, 0, -2, 0, 1]
    assert report["det"] == 1
    assert report["betti"] == [1, 2, 2, 2, 1]
    assert report["anosov"] and report["kahler"] and report["orientable"]
    assert report["cyclotomic"] == {"1": 2, "2": 2}
    json.dumps(report)
