"""Invariants of an exact integral representation of a finite cyclic group:
orientability, Betti numbers of the associated flat manifold, and the
multiplicity criteria deciding Anosov diffeomorphisms and Kaehler structure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

from .intmatrix import IntMatrix
from .intpoly import IntPoly, cyclotomic_multiplicities


@dataclass(frozen=True)
class CyclicRep:
    """A generator matrix of finite order: matrix ** order == identity."""

    matrix: IntMatrix
    order: int

    def __post_init__(self):
        self.matrix.require_square()
        if self.order < 1:
            raise ValueError(f"group order must be >= 1, got {self.order}")
        if self.matrix ** self.order != IntMatrix.identity(self.dimension):
            raise ValueError(f"matrix does not have order dividing {self.order}")

    @property
    def dimension(self) -> int:
        return self.matrix.nrows


def char_poly(matrix: IntMatrix) -> IntPoly:
    return matrix.char_poly()


def orientability(rep: CyclicRep) -> bool:
    """True iff the generator lies in SL, i.e. has determinant +1."""
    return rep.matrix.det() == 1


def _elementary_symmetric_from_traces(traces: list[int], m: int) -> list[int]:
    """Newton's identities: e_0..e_m from power sums p_1..p_m, exactly.

    e_k is the k-th elementary symmetric function of the eigenvalues, i.e.
    the coefficient of t^k in det(I + tA) when traces[s-1] = trace(A^s).
    """
    e = [1] + [0] * m
    for k in range(1, m + 1):
        acc = 0
        for s in range(1, k + 1):
            acc += (-1) ** (s - 1) * e[k - s] * traces[s - 1]
        q, r = divmod(acc, k)
        assert r == 0, "Newton identity division must be exact"
        e[k] = q
    return e


def betti_numbers(rep: CyclicRep) -> tuple[int, ...]:
    """Betti numbers of the flat manifold with this cyclic holonomy.

    beta_i is the dimension of the invariant subspace of the i-th exterior
    power, computed by averaging the trace of the exterior-power action
    over the group: beta_i = (1/N) * sum_j [t^i] det(I + t M^j).  The
    leading coefficients come from Newton's identities on the power sums
    trace(M^u), which are periodic with period N.  The first Betti number
    is cross-checked against dim - rank(M - I).
    """
    m = rep.dimension
    n = rep.order
    powers = [IntMatrix.identity(m)]
    for _ in range(1, n):
        powers.append(powers[-1] * rep.matrix)
    period_traces = [p.trace() for p in powers]
    totals = [0] * (m + 1)
    for j in range(n):
        traces = [period_traces[(j * s) % n] for s in range(1, m + 1)]
        e = _elementary_symmetric_from_traces(traces, m)
        for i in range(m + 1):
            totals[i] += e[i]
    betti = []
    for i, total in enumerate(totals):
        q, r = divmod(total, n)
        assert r == 0, f"Betti number beta_{i} must be an integer"
        assert q >= 0
        betti.append(q)
    if m >= 1:
        rank_check = m - (rep.matrix - IntMatrix.identity(m)).rank()
        assert betti[1] == rank_check, (
            f"first Betti number mismatch: averaging gives {betti[1]}, rank formula {rank_check}"
        )
    return tuple(betti)


def eigenvalue_multiplicities(rep: CyclicRep) -> dict[int, int]:
    """Multiplicity of each eigenvalue zeta_N^k of the generator, k = 0..N-1.

    The generator has finite order, so its characteristic polynomial is a
    product of cyclotomic polynomials with indices dividing N, and the
    eigenvalue zeta_N^k appears as often as the cyclotomic factor of index
    N/gcd(N,k).
    """
    mults = cyclotomic_multiplicities(rep.matrix.char_poly())
    for d in mults:
        if rep.order % d != 0:
            raise ValueError(f"cyclotomic index {d} does not divide the group order {rep.order}")
    n = rep.order
    out = {k: mults.get(n // math.gcd(n, k), 0) for k in range(n)}
    assert sum(out.values()) == rep.dimension
    return out


def anosov_check(rep: CyclicRep) -> bool:
    """Multiplicity criterion for Anosov diffeomorphisms on the flat manifold:
    every rationally irreducible summand (cyclotomic factor of the
    characteristic polynomial) must occur with multiplicity >= 2."""
    mults = cyclotomic_multiplicities(rep.matrix.char_poly())
    return all(mult >= 2 for mult in mults.values())


def kahler_check(rep: CyclicRep) -> bool:
    """Even-multiplicity criterion for a Kaehler structure on the flat manifold.

    True iff the dimension is even and every real-irreducible summand has
    even multiplicity.  For a cyclic group of order N the real-irreducible
    multiplicities are m_0, m_{N/2} (N even), and m_k for the conjugate
    pairs {k, N-k}, where m_k counts the eigenvalue zeta_N^k.
    """
    if rep.dimension % 2 != 0:
        return False
    m = eigenvalue_multiplicities(rep)
    n = rep.order
    real_mults = [m[0]]
    if n % 2 == 0:
        real_mults.append(m[n // 2])
    for k in range(1, (n + 1) // 2):
        assert m[k] == m[n - k], "conjugate eigenvalues of an integer matrix must pair up"
        real_mults.append(m[k])
    return all(mult % 2 == 0 for mult in real_mults)


def invariant_report(rep: CyclicRep) -> dict[str, Any]:
    """All invariants as a JSON-ready mapping with fixed key order."""
    p = rep.matrix.char_poly()
    return {
        "char_poly": list(p.coeffs),
        "det": rep.matrix.det(),
        "betti": list(betti_numbers(rep)),
        "anosov": anosov_check(rep),
        "kahler": kahler_check(rep),
        "orientable": orientability(rep),
        "cyclotomic": {str(d): mult for d, mult in cyclotomic_multiplicities(p).items()},
    }
