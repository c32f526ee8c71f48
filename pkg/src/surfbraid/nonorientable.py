"""Quotient structures for the sphere and for non-orientable closed surfaces.

Neither quotient is crystallographic: the kernel of the permutation map
has torsion, and its torsion part is a nontrivial finite normal subgroup.

For a non-orientable surface of genus g the kernel is generated per
strand j by a[j,1], ..., a[j,g] subject to the single relation
a[j,1]^2 ... a[j,g]^2 = 1, giving Z_2 + Z^{g-1} per strand.  The working
coordinates are: a torsion bit (the class of the full product
a[j,1]...a[j,g]) and g-1 free coordinates (the images of
a[j,1], ..., a[j,g-1]); the last generator a[j,g] maps to torsion bit 1
with free part (-1, ..., -1).  This change of basis is validated against
a Smith-normal-form oracle in the test suite.

For the sphere (n >= 3) the kernel is Z_2 + Z^{n(n-3)/2} with the full
twist generating the torsion summand; no strand action on that basis is
available here, so only the structure and the verdict are exposed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from . import core
from .core import GroupDescriptor, Verdict
from .errors import GroupMismatchError, UnsupportedSurfaceError
from .permutations import Permutation
from .words import BraidWord, check_letter, full_twist_word


@dataclass(frozen=True)
class AbelianInvariants:
    """Torsion orders, free rank, and named torsion generators of the kernel."""

    torsion: tuple[int, ...]
    free_rank: int
    torsion_generator_words: tuple[str, ...]

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "torsion": list(self.torsion),
            "free_rank": self.free_rank,
            "torsion_generators": list(self.torsion_generator_words),
        }


@dataclass(frozen=True)
class FiniteNormalWitness:
    """A finite normal subgroup certifying that the quotient is not crystallographic."""

    generator_words: tuple[str, ...]
    subgroup_order: int
    normality_verified: bool
    note: str

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "generators": list(self.generator_words),
            "order": self.subgroup_order,
            "normality_verified": self.normality_verified,
            "note": self.note,
        }


def _strand_product_word(j: int, genus: int) -> str:
    return " ".join(f"a[{j},{r}]" for r in range(1, genus + 1))


def kernel_structure(group: GroupDescriptor) -> AbelianInvariants:
    """Abelian invariants of the kernel of the permutation map."""
    if group.kind == core.SPHERE:
        if group.n < 3:
            raise UnsupportedSurfaceError(
                f"sphere kernel structure is only available for n >= 3, got n={group.n}"
            )
        twist = full_twist_word(group).text()
        return AbelianInvariants((2,), group.n * (group.n - 3) // 2, (twist,))
    if group.kind == core.NONORIENTABLE:
        g = group.genus
        gens = tuple(_strand_product_word(j, g) for j in range(1, group.n + 1))
        return AbelianInvariants((2,) * group.n, group.n * (g - 1), gens)
    raise UnsupportedSurfaceError(
        "kernel structure is reported for the sphere and non-orientable surfaces; "
        "orientable kernels are free abelian of rank 2ng"
    )


@dataclass(frozen=True)
class MixedElement:
    """Normal form over a non-orientable surface: torsion bits, free part, permutation.

    bits[j-1] is the Z_2 coordinate of strand j, free[j-1] its g-1 free
    coordinates; the permutation acts by relabelling strands, exactly as in
    the orientable model.
    """

    group: GroupDescriptor
    bits: tuple[int, ...]
    free: tuple[tuple[int, ...], ...]
    perm: Permutation

    def __post_init__(self):
        if self.group.kind != core.NONORIENTABLE:
            raise UnsupportedSurfaceError("MixedElement arithmetic is the non-orientable model")
        n, g = self.group.n, self.group.genus
        if len(self.bits) != n or len(self.free) != n or self.perm.n != n:
            raise ValueError("component sizes do not match the group")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("torsion bits must be 0 or 1")
        if any(len(row) != g - 1 for row in self.free):
            raise ValueError(f"free part rows must have length {g - 1}")

    @classmethod
    def identity(cls, group: GroupDescriptor) -> MixedElement:
        n, g = group.n, group.genus
        return cls(group, (0,) * n, tuple((0,) * (g - 1) for _ in range(n)), Permutation.identity(n))

    @classmethod
    def section(cls, group: GroupDescriptor, w: Permutation) -> MixedElement:
        n, g = group.n, group.genus
        return cls(group, (0,) * n, tuple((0,) * (g - 1) for _ in range(n)), w)

    @classmethod
    def strand_generator(cls, group: GroupDescriptor, j: int, r: int) -> MixedElement:
        """Image of a[j,r] in the torsion-bit/free coordinates."""
        n, g = group.n, group.genus
        if not (1 <= j <= n and 1 <= r <= g):
            raise ValueError(f"generator index ({j},{r}) out of range")
        bits = [0] * n
        free = [[0] * (g - 1) for _ in range(n)]
        if r == g:
            bits[j - 1] = 1
            free[j - 1] = [-1] * (g - 1)
        else:
            free[j - 1][r - 1] = 1
        return cls(group, tuple(bits), tuple(tuple(row) for row in free), Permutation.identity(n))

    def _permuted_bits(self, w: Permutation, bits: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * len(bits)
        for j in range(1, len(bits) + 1):
            out[w(j) - 1] = bits[j - 1]
        return tuple(out)

    def _permuted_free(
        self, w: Permutation, free: tuple[tuple[int, ...], ...]
    ) -> tuple[tuple[int, ...], ...]:
        out: list[tuple[int, ...] | None] = [None] * len(free)
        for j in range(1, len(free) + 1):
            out[w(j) - 1] = free[j - 1]
        return tuple(out)

    def __mul__(self, other: MixedElement) -> MixedElement:
        if self.group != other.group:
            raise GroupMismatchError("operands live in different groups")
        bits = tuple(
            (a + b) % 2 for a, b in zip(self.bits, self._permuted_bits(self.perm, other.bits))
        )
        free = tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.free, self._permuted_free(self.perm, other.free))
        )
        return MixedElement(self.group, bits, free, self.perm * other.perm)

    def inverse(self) -> MixedElement:
        w_inv = self.perm.inverse()
        bits = self._permuted_bits(w_inv, self.bits)
        free = self._permuted_free(w_inv, tuple(tuple(-v for v in row) for row in self.free))
        return MixedElement(self.group, bits, free, w_inv)

    def __pow__(self, k: int) -> MixedElement:
        if k < 0:
            return self.inverse() ** (-k)
        result = MixedElement.identity(self.group)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return (
            all(b == 0 for b in self.bits)
            and all(v == 0 for row in self.free for v in row)
            and self.perm.is_identity()
        )

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "n": self.group.n,
            "g": self.group.genus,
            "perm": list(self.perm.images),
            "torsion_bits": list(self.bits),
            "coeffs": [list(row) for row in self.free],
        }

    @classmethod
    def from_json_obj(cls, group: GroupDescriptor, obj: dict[str, Any]) -> MixedElement:
        if obj.get("n") != group.n or obj.get("g") != group.genus:
            raise ValueError("element size does not match the group")
        return cls(
            group,
            tuple(int(b) for b in obj["torsion_bits"]),
            tuple(tuple(int(v) for v in row) for row in obj["coeffs"]),
            Permutation(tuple(int(v) for v in obj["perm"])),
        )


def normalize_word(group: GroupDescriptor, word: BraidWord) -> MixedElement:
    """Left-fold rewriting to the mixed normal form (non-orientable surfaces):
    s_i letters multiply the permutation by the transposition, a[j,r]^e
    letters add e copies of the strand generator image at the relabelled
    strand."""
    if group.kind != core.NONORIENTABLE:
        raise UnsupportedSurfaceError("mixed normalization requires a non-orientable surface")
    n, g = group.n, group.genus
    bits = [0] * n
    free = [[0] * (g - 1) for _ in range(n)]
    perm = Permutation.identity(n)
    for letter in word.letters:
        check_letter(group, letter)
        if letter.kind == "s":
            if letter.exp % 2:
                perm = perm * Permutation.transposition(n, letter.i)
        else:
            j, r, e = perm(letter.i), letter.r, letter.exp
            if r == g:
                bits[j - 1] = (bits[j - 1] + e) % 2
                for s in range(g - 1):
                    free[j - 1][s] -= e
            else:
                free[j - 1][r - 1] += e
    return MixedElement(group, tuple(bits), tuple(tuple(row) for row in free), perm)


def torsion_subgroup_elements(group: GroupDescriptor) -> list[MixedElement]:
    """Generators of the torsion subgroup T: one bit per strand, no free part."""
    return [
        MixedElement(
            group,
            tuple(1 if i == j else 0 for i in range(1, group.n + 1)),
            tuple((0,) * (group.genus - 1) for _ in range(group.n)),
            Permutation.identity(group.n),
        )
        for j in range(1, group.n + 1)
    ]


def _in_torsion_subgroup(x: MixedElement) -> bool:
    return x.perm.is_identity() and all(v == 0 for row in x.free for v in row)


def finite_normal_subgroup(group: GroupDescriptor) -> FiniteNormalWitness:
    """A nontrivial finite normal subgroup of the quotient.

    Sphere (n >= 3): the order-2 subgroup generated by the full twist class;
    its centrality is recorded, not recomputed, since no strand action is
    available on the sphere kernel.  Non-orientable: the subgroup generated
    by the per-strand products a[j,1]...a[j,g], isomorphic to Z_2^n (for
    the projective plane this is the entire kernel); normality is verified
    by conjugating every generator by every group generator.
    """
    if group.kind == core.SPHERE:
        if group.n < 3:
            raise UnsupportedSurfaceError(
                f"sphere structure is only available for n >= 3, got n={group.n}"
            )
        return FiniteNormalWitness(
            (full_twist_word(group).text(),),
            2,
            False,
            "order-2 full twist class; centrality recorded, not recomputed",
        )
    if group.kind != core.NONORIENTABLE:
        raise UnsupportedSurfaceError("orientable quotients have no finite normal subgroup witness")
    n, g = group.n, group.genus
    torsion_gens = torsion_subgroup_elements(group)
    conjugators = [MixedElement.section(group, Permutation.transposition(n, i)) for i in range(1, n)]
    conjugators += [
        MixedElement.strand_generator(group, j, r)
        for j in range(1, n + 1)
        for r in range(1, g + 1)
    ]
    for t in torsion_gens:
        for c in conjugators:
            if not _in_torsion_subgroup(c * t * c.inverse()):
                raise AssertionError("torsion subgroup failed the normality check")
    note = "entire kernel (projective plane)" if g == 1 else "per-strand torsion classes"
    return FiniteNormalWitness(
        tuple(_strand_product_word(j, g) for j in range(1, n + 1)),
        2**n,
        True,
        note,
    )


def crystallographic_verdict(group: GroupDescriptor) -> Verdict:
    """False with a finite-normal-subgroup witness for the sphere and
    non-orientable surfaces; true (delegating to the orientable check)
    otherwise."""
    if group.kind == core.ORIENTABLE:
        return core.verify_crystallographic(group)
    witness = finite_normal_subgroup(group)
    obj = witness.to_json_obj()
    obj["kind"] = "finite_normal_subgroup"
    obj["justification"] = (
        "a crystallographic group has no nontrivial finite normal subgroup; "
        "the listed torsion classes generate one"
    )
    return Verdict(
        is_crystallographic=False,
        dimension=None,
        holonomy_order=None,
        witness=obj,
    )
