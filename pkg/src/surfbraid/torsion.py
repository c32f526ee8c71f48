"""Finite-order elements: detection, the closed power formula, constructive
conjugators for torsion elements and embedded finite subgroups, and the
order-p element living over a Frobenius permutation group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CoeffVector, Element, GroupDescriptor
from .errors import (
    BadMultiplierError,
    BadPrimeError,
    GroupMismatchError,
    InfiniteOrderError,
    NotAnSnEmbeddingError,
    NotDivisibleError,
    NotSingleCycleError,
)
from .permutations import Permutation


@dataclass(frozen=True)
class OrderResult:
    """Order of a group element: a positive integer or infinite (value None)."""

    value: int | None

    @classmethod
    def finite(cls, k: int) -> OrderResult:
        return cls(k)

    @classmethod
    def infinite(cls) -> OrderResult:
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.value is not None


def cycle_power_coeffs(z: Element, k: int) -> CoeffVector:
    """Closed form for the lattice part of z**k when the permutation part is a
    single m-cycle (fixed points allowed) and m divides k.

    Strands fixed by the cycle get k times their coefficient; strands on the
    cycle all get (k/m) times the sum of the coefficients around the cycle.
    The cycle sums are invariant under moving the section across the lattice
    part, so the formula applies directly to normal-form coefficients.
    """
    cycles = z.perm.cycles()
    if len(cycles) != 1:
        raise NotSingleCycleError(
            f"permutation part has {len(cycles)} nontrivial cycles, need exactly 1"
        )
    cycle = cycles[0]
    m = len(cycle)
    if k % m != 0:
        raise NotDivisibleError(f"cycle length {m} does not divide exponent {k}")
    handles = z.group.handle_count
    in_cycle = set(cycle)
    cycle_totals = [
        (k // m) * sum(z.coeffs.entry(i, r) for i in cycle) for r in range(1, handles + 1)
    ]
    rows = []
    for i in range(1, z.group.n + 1):
        if i in in_cycle:
            rows.append(tuple(cycle_totals))
        else:
            rows.append(tuple(k * z.coeffs.entry(i, r) for r in range(1, handles + 1)))
    return CoeffVector(tuple(rows))


def order(x: Element) -> OrderResult:
    """Order of x: finite iff every cycle of the permutation part has zero
    coefficient sum in every handle and every fixed strand has zero
    coefficients; then the order equals the order of the permutation part."""
    handles = x.group.handle_count
    for cycle in x.perm.cycles(include_fixed=True):
        for r in range(1, handles + 1):
            if sum(x.coeffs.entry(i, r) for i in cycle) != 0:
                return OrderResult.infinite()
    return OrderResult.finite(x.perm.order())


def conjugator_to_section(theta: Element) -> Element:
    """A pure-lattice alpha with alpha * section(w) * alpha^{-1} == theta,
    where w is the permutation part of theta; theta must have finite order.

    Along each cycle (c_0, c_1, ...) the conjugation condition telescopes to
    partial sums of theta's coefficients, anchored at p[c_0] = 0; fixed
    strands get 0.
    """
    if not order(theta).is_finite:
        raise InfiniteOrderError("only finite-order elements are conjugate to a section")
    n, handles = theta.group.n, theta.group.handle_count
    rows = [[0] * handles for _ in range(n)]
    for cycle in theta.perm.cycles():
        for r in range(1, handles + 1):
            acc = 0
            for c in cycle[1:]:
                acc += theta.coeffs.entry(c, r)
                rows[c - 1][r - 1] = acc
    alpha = Element.from_coeffs(theta.group, rows)
    assert Element.section(theta.group, theta.perm).conjugated_by(alpha) == theta
    return alpha


def conjugating_permutation(p: Permutation, q: Permutation) -> Permutation | None:
    """Lexicographically least xi with xi * p * xi^{-1} == q, or None when the
    cycle types differ.

    Greedy: scan i = 1..n; for the first unassigned strand of each p-cycle
    pick the smallest unused image whose q-cycle has the same length, then
    propagate xi(p^t(i)) = q^t(v) around the cycle.  Whole cycles are
    consumed at once, so the greedy minimum is the global lexicographic
    minimum.
    """
    if p.n != q.n:
        return None
    if p.cycle_type() != q.cycle_type():
        return None
    n = p.n
    q_cycle_len = [0] * (n + 1)
    for cycle in q.cycles(include_fixed=True):
        for v in cycle:
            q_cycle_len[v] = len(cycle)
    images = [0] * (n + 1)
    used = [False] * (n + 1)
    for i in range(1, n + 1):
        if images[i]:
            continue
        cycle = [i]
        v = p(i)
        while v != i:
            cycle.append(v)
            v = p(v)
        target = next(
            v for v in range(1, n + 1) if not used[v] and q_cycle_len[v] == len(cycle)
        )
        w = target
        for c in cycle:
            images[c] = w
            used[w] = True
            w = q(w)
    return Permutation(tuple(images[1:]))


def conjugacy_test(e1: Element, e2: Element) -> Element | None:
    """Decide conjugacy of two finite-order elements; conjugate iff their
    permutation parts share a cycle type.  Returns a verified conjugator c
    with c * e1 * c^{-1} == e2, or None."""
    if e1.group != e2.group:
        raise GroupMismatchError("conjugacy test requires elements of the same group")
    for e in (e1, e2):
        if not order(e).is_finite:
            raise InfiniteOrderError("conjugacy is only decided for finite-order elements")
    xi = conjugating_permutation(e1.perm, e2.perm)
    if xi is None:
        return None
    alpha1 = conjugator_to_section(e1)
    alpha2 = conjugator_to_section(e2)
    c = alpha2 * Element.section(e1.group, xi) * alpha1.inverse()
    assert e1.conjugated_by(c) == e2
    return c


def symmetric_copy_conjugator(group: GroupDescriptor, images: list[Element]) -> Element:
    """Given involutions alpha_1..alpha_{n-1} over the adjacent transpositions
    that satisfy the symmetric-group relations, return a pure-lattice x with
    x * section(t_i) * x^{-1} == alpha_i for every i.

    The involution condition forces each alpha_i to carry opposite
    coefficients a_i, -a_i on strands i, i+1 (per handle); the conjugator
    coordinates telescope as x_{i+1} = x_i - a_i with x_1 = 0.
    """
    group.require_orientable("symmetric-group copies")
    n, handles = group.n, group.handle_count
    if len(images) != n - 1:
        raise NotAnSnEmbeddingError(f"need {n - 1} images, got {len(images)}")
    identity = Element.identity(group)
    for i, alpha in enumerate(images, start=1):
        if alpha.group != group:
            raise GroupMismatchError("images must live in the given group")
        if alpha.perm != Permutation.transposition(n, i):
            raise NotAnSnEmbeddingError(f"image {i} does not project to the transposition ({i},{i + 1})")
        if alpha * alpha != identity:
            raise NotAnSnEmbeddingError(f"image {i} is not an involution")
    for i in range(1, n - 1):
        a, b = images[i - 1], images[i]
        if a * b * a != b * a * b:
            raise NotAnSnEmbeddingError(f"braid relation fails at images {i}, {i + 1}")
        for j in range(i + 2, n):
            c = images[j - 1]
            if a * c != c * a:
                raise NotAnSnEmbeddingError(f"images {i} and {j} do not commute")
    rows = [[0] * handles for _ in range(n)]
    for i in range(1, n):
        a_i = [images[i - 1].coeffs.entry(i, r) for r in range(1, handles + 1)]
        for r in range(handles):
            rows[i][r] = rows[i - 1][r] - a_i[r]
    x = Element.from_coeffs(group, rows)
    for i in range(1, n):
        sect = Element.section(group, Permutation.transposition(n, i))
        if sect.conjugated_by(x) != images[i - 1]:
            raise NotAnSnEmbeddingError(f"conjugation identity fails at image {i}")
    return x


@dataclass(frozen=True)
class FrobeniusEmbedding:
    """Parameters of an embedded order-10 Frobenius group over five strands.

    For each handle block r the lattice part of the order-5 generator image
    is (a1, a2, a3, a4, -a1-a2-a3-a4) and the order-2 generator image is
    forced to (x, y, -y, -x, 0) with x = -a2-a3-a4 and y = -a3.
    """

    genus: int
    blocks: tuple[tuple[int, int, int, int], ...]

    N_STRANDS = 5

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError(f"genus must be >= 1, got {self.genus}")
        if len(self.blocks) != 2 * self.genus:
            raise ValueError(f"need {2 * self.genus} parameter blocks, got {len(self.blocks)}")
        if any(len(b) != 4 for b in self.blocks):
            raise ValueError("each parameter block has exactly four integers")

    @classmethod
    def zero(cls, genus: int) -> FrobeniusEmbedding:
        return cls(genus, tuple((0, 0, 0, 0) for _ in range(2 * genus)))

    @classmethod
    def single_block(cls, genus: int, r: int, params: tuple[int, int, int, int]) -> FrobeniusEmbedding:
        if not 1 <= r <= 2 * genus:
            raise ValueError(f"handle index {r} out of range 1..{2 * genus}")
        blocks = [(0, 0, 0, 0)] * (2 * genus)
        blocks[r - 1] = tuple(int(v) for v in params)
        return cls(genus, tuple(blocks))

    @property
    def group(self) -> GroupDescriptor:
        return GroupDescriptor.orientable(self.N_STRANDS, self.genus)

    @property
    def five_cycle(self) -> Permutation:
        return Permutation.from_cycles(self.N_STRANDS, (1, 2, 3, 4, 5))

    @property
    def double_transposition(self) -> Permutation:
        return Permutation.from_cycles(self.N_STRANDS, (1, 4), (2, 3))


def frobenius_embed(emb: FrobeniusEmbedding) -> tuple[Element, Element]:
    """Images (v1, v2) of the order-5 and order-2 generators: v1**5 == 1,
    v2**2 == 1 and v2 * v1 * v2^{-1} == v1**4."""
    g2 = 2 * emb.genus
    rows1 = []
    rows2 = []
    for i in range(5):
        row1 = []
        row2 = []
        for r in range(g2):
            a1, a2, a3, a4 = emb.blocks[r]
            col1 = (a1, a2, a3, a4, -a1 - a2 - a3 - a4)
            x, y = -a2 - a3 - a4, -a3
            col2 = (x, y, -y, -x, 0)
            row1.append(col1[i])
            row2.append(col2[i])
        rows1.append(tuple(row1))
        rows2.append(tuple(row2))
    group = emb.group
    v1 = Element(group, CoeffVector(tuple(rows1)), emb.five_cycle)
    v2 = Element(group, CoeffVector(tuple(rows2)), emb.double_transposition)
    return v1, v2


def frobenius_conjugator(emb: FrobeniusEmbedding) -> Element:
    """A pure-lattice a with a * section(w_i) * a^{-1} == v_i for both
    Frobenius generator images; per block the coordinates are the partial
    sums (a1, a1+a2, a1+a2+a3, a1+..+a4, 0)."""
    g2 = 2 * emb.genus
    rows = []
    for i in range(5):
        row = []
        for r in range(g2):
            block = emb.blocks[r]
            row.append(sum(block[: i + 1]) if i < 4 else 0)
        rows.append(tuple(row))
    group = emb.group
    a = Element(group, CoeffVector(tuple(rows)), Permutation.identity(5))
    v1, v2 = frobenius_embed(emb)
    assert Element.section(group, emb.five_cycle).conjugated_by(a) == v1
    assert Element.section(group, emb.double_transposition).conjugated_by(a) == v2
    return a


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _multiplicative_order(l: int, p: int) -> int:
    acc, k = l % p, 1
    while acc != 1:
        acc = (acc * l) % p
        k += 1
        if k > p:
            raise ArithmeticError("unit has no multiplicative order; modulus not prime?")
    return k


def default_multiplier(p: int) -> int:
    """Smallest unit of multiplicative order (p-1)/2 modulo p."""
    target = (p - 1) // 2
    for l in range(2, p):
        if _multiplicative_order(l, p) == target:
            return l
    raise BadPrimeError(f"no unit of order {(p - 1) // 2} modulo {p}")


def multiplication_permutation(p: int, l: int) -> Permutation:
    """The permutation of 1..p given by i -> l*i mod p, with p playing the
    role of the zero residue (so p is a fixed point)."""
    images = [((l * i - 1) % p) + 1 for i in range(1, p + 1)]
    return Permutation(tuple(images))


def frobenius_torsion_element(
    group: GroupDescriptor,
    p: int,
    l: int | None = None,
    lift1: CoeffVector | None = None,
    lift2: CoeffVector | None = None,
) -> Element:
    """An order-p element in any subgroup projecting onto the Frobenius group
    generated by the p-cycle w1 = (1,2,...,p) and the multiplication-by-l
    permutation w2, where l has multiplicative order (p-1)/2.

    Given arbitrary lattice lifts v_i = lift_i * section(w_i), the element
    v2 * v1 * v2^{-1} * v1^{-l} * v1^{l-1} has zero coefficient sum in
    every handle and a nontrivial p-cycle permutation part, hence order
    exactly p.  This is why no such subgroup is torsion free.
    """
    group.require_orientable("Frobenius torsion construction")
    if not _is_prime(p) or p < 5:
        raise BadPrimeError(f"p must be an odd prime >= 5, got {p}")
    if group.n != p:
        raise GroupMismatchError(f"group has {group.n} strands, need n = p = {p}")
    if l is None:
        l = default_multiplier(p)
    if not 2 <= l <= p - 1 or _multiplicative_order(l, p) != (p - 1) // 2:
        raise BadMultiplierError(f"{l} does not have multiplicative order {(p - 1) // 2} mod {p}")
    handles = group.handle_count
    if lift1 is None:
        lift1 = CoeffVector.zero(p, handles)
    if lift2 is None:
        lift2 = CoeffVector.zero(p, handles)
    w1 = Permutation.from_cycles(p, tuple(range(1, p + 1)))
    w2 = multiplication_permutation(p, l)
    assert w2 * w1 * w2.inverse() == w1**l
    v1 = Element(group, lift1, w1)
    v2 = Element(group, lift2, w2)
    v = v2 * v1 * v2.inverse() * v1 ** (-l) * v1 ** (l - 1)
    assert not v.perm.is_identity()
    return v
