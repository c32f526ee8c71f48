"""Normal-form arithmetic in the lattice-by-symmetric-group quotient of a
surface braid group.

For a closed orientable surface of genus g and n strands, the quotient of
the braid group by the commutator subgroup of the pure braid group splits
as a semidirect product: a free abelian lattice of rank 2ng (one generator
``a[i,r]`` per strand i and handle coordinate r in 1..2g) extended by the
symmetric group S_n, which acts by permuting strand indices.  Every
element has a unique normal form ``lattice_part * section(permutation)``,
stored as a (CoeffVector, Permutation) pair; the lattice part sits on the
left.

Conjugating a strand generator ``a[j,r]`` by an element with permutation
part w yields ``a[w(j),r]`` (w applied per the composition convention of
:mod:`surfbraid.permutations`); this determines the product rule below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

from .errors import GroupMismatchError, UnsupportedSurfaceError
from .permutations import Permutation

ORIENTABLE = "orientable"
SPHERE = "sphere"
NONORIENTABLE = "nonorientable"


@dataclass(frozen=True)
class GroupDescriptor:
    """Surface kind plus strand count; selects the arithmetic model."""

    kind: str
    n: int
    genus: int | None = None

    def __post_init__(self):
        if self.kind not in (ORIENTABLE, SPHERE, NONORIENTABLE):
            raise ValueError(f"unknown surface kind {self.kind!r}")
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")
        if self.kind == SPHERE:
            if self.genus is not None:
                raise ValueError("the sphere has no genus parameter")
        elif self.genus is None or self.genus < 1:
            raise ValueError(f"genus must be >= 1, got {self.genus}")

    @classmethod
    def orientable(cls, n: int, genus: int) -> GroupDescriptor:
        return cls(ORIENTABLE, n, genus)

    @classmethod
    def torus(cls, n: int) -> GroupDescriptor:
        return cls(ORIENTABLE, n, 1)

    @classmethod
    def sphere(cls, n: int) -> GroupDescriptor:
        return cls(SPHERE, n)

    @classmethod
    def nonorientable(cls, n: int, genus: int) -> GroupDescriptor:
        return cls(NONORIENTABLE, n, genus)

    @property
    def is_orientable(self) -> bool:
        return self.kind == ORIENTABLE

    @property
    def handle_count(self) -> int:
        """Handle generators per strand: 2g (orientable) or g (non-orientable)."""
        if self.kind == ORIENTABLE:
            return 2 * self.genus
        if self.kind == NONORIENTABLE:
            return self.genus
        raise UnsupportedSurfaceError("the sphere model exposes no handle generators")

    @property
    def lattice_rank(self) -> int:
        """Rank of the free abelian kernel in the orientable model (2ng)."""
        if self.kind != ORIENTABLE:
            raise UnsupportedSurfaceError(
                f"lattice rank is defined for orientable surfaces only, not {self.kind}"
            )
        return 2 * self.n * self.genus

    def require_orientable(self, what: str) -> None:
        if self.kind != ORIENTABLE:
            raise UnsupportedSurfaceError(f"{what} requires an orientable surface, got {self.kind}")


@dataclass(frozen=True)
class CoeffVector:
    """Exponent matrix of the lattice part: rows[i-1][r-1] is the exponent of a[i,r]."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def handles(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def zero(cls, n: int, handles: int) -> CoeffVector:
        return cls(tuple((0,) * handles for _ in range(n)))

    @classmethod
    def basis(cls, n: int, handles: int, i: int, r: int) -> CoeffVector:
        """The vector with a single 1 at strand i, handle r."""
        if not (1 <= i <= n and 1 <= r <= handles):
            raise ValueError(f"basis index ({i},{r}) out of range")
        return cls(
            tuple(
                tuple(1 if (row == i and col == r) else 0 for col in range(1, handles + 1))
                for row in range(1, n + 1)
            )
        )

    @classmethod
    def from_rows(cls, rows) -> CoeffVector:
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    def entry(self, i: int, r: int) -> int:
        return self.rows[i - 1][r - 1]

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.rows for v in row)

    def __add__(self, other: CoeffVector) -> CoeffVector:
        return CoeffVector(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows))
        )

    def __sub__(self, other: CoeffVector) -> CoeffVector:
        return self + (-other)

    def __neg__(self) -> CoeffVector:
        return CoeffVector(tuple(tuple(-v for v in row) for row in self.rows))

    def scaled(self, k: int) -> CoeffVector:
        return CoeffVector(tuple(tuple(k * v for v in row) for row in self.rows))

    def permuted(self, w: Permutation) -> CoeffVector:
        """Strand action: the row at strand i moves to strand w(i); handles are fixed."""
        rows: list[tuple[int, ...] | None] = [None] * self.n
        for i in range(1, self.n + 1):
            rows[w(i) - 1] = self.rows[i - 1]
        return CoeffVector(tuple(rows))

    def handle_sums(self) -> tuple[int, ...]:
        """Coordinate sum over strands, one integer per handle index."""
        return tuple(sum(row[r] for row in self.rows) for r in range(self.handles))


@dataclass(frozen=True)
class Element:
    """Normal form ``coeffs * section(perm)`` of a quotient-group element."""

    group: GroupDescriptor
    coeffs: CoeffVector
    perm: Permutation

    def __post_init__(self):
        self.group.require_orientable("Element arithmetic")
        if self.coeffs.n != self.group.n or self.perm.n != self.group.n:
            raise ValueError("coefficient/permutation size does not match the group")
        if self.coeffs.rows and self.coeffs.handles != self.group.handle_count:
            raise ValueError("handle count does not match the group")

    @classmethod
    def identity(cls, group: GroupDescriptor) -> Element:
        return cls(group, CoeffVector.zero(group.n, group.handle_count), Permutation.identity(group.n))

    @classmethod
    def section(cls, group: GroupDescriptor, w: Permutation) -> Element:
        """The canonical section of a permutation: trivial lattice part."""
        return cls(group, CoeffVector.zero(group.n, group.handle_count), w)

    @classmethod
    def strand_generator(cls, group: GroupDescriptor, i: int, r: int) -> Element:
        """The lattice generator a[i,r]."""
        return cls(
            group,
            CoeffVector.basis(group.n, group.handle_count, i, r),
            Permutation.identity(group.n),
        )

    @classmethod
    def from_coeffs(cls, group: GroupDescriptor, rows) -> Element:
        return cls(group, CoeffVector.from_rows(rows), Permutation.identity(group.n))

    def _check_group(self, other: Element) -> None:
        if self.group != other.group:
            raise GroupMismatchError(f"operands live in different groups: {self.group} vs {other.group}")

    def __mul__(self, other: Element) -> Element:
        self._check_group(other)
        return Element(
            self.group,
            self.coeffs + other.coeffs.permuted(self.perm),
            self.perm * other.perm,
        )

    def inverse(self) -> Element:
        w_inv = self.perm.inverse()
        return Element(self.group, (-self.coeffs).permuted(w_inv), w_inv)

    def __pow__(self, k: int) -> Element:
        if k < 0:
            return self.inverse() ** (-k)
        result = Element.identity(self.group)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugated_by(self, by: Element) -> Element:
        """Return by * self * by^{-1}."""
        return by * self * by.inverse()

    def is_identity(self) -> bool:
        return self.coeffs.is_zero() and self.perm.is_identity()

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "n": self.group.n,
            "g": self.group.genus,
            "perm": list(self.perm.images),
            "coeffs": [list(row) for row in self.coeffs.rows],
        }

    @classmethod
    def from_json_obj(cls, group: GroupDescriptor, obj: dict[str, Any]) -> Element:
        if obj.get("n") != group.n or obj.get("g") != group.genus:
            raise ValueError(f"element encodes (n={obj.get('n')}, g={obj.get('g')}), expected "
                             f"(n={group.n}, g={group.genus})")
        perm = Permutation(tuple(int(v) for v in obj["perm"]))
        coeffs = CoeffVector.from_rows(obj["coeffs"])
        return cls(group, coeffs, perm)

    def as_word_text(self) -> str:
        """A braid word in the generator grammar that normalizes back to this element."""
        parts = []
        for i in range(1, self.group.n + 1):
            for r in range(1, self.group.handle_count + 1):
                e = self.coeffs.entry(i, r)
                if e == 1:
                    parts.append(f"a[{i},{r}]")
                elif e != 0:
                    parts.append(f"a[{i},{r}]^{e}")
        parts.extend(f"s{i}" for i in self.perm.adjacent_word())
        return " ".join(parts)

    def __str__(self) -> str:
        word = self.as_word_text()
        return word if word else "<identity>"


@dataclass(frozen=True)
class Verdict:
    """Outcome of the crystallographic test, with a machine-checkable witness."""

    is_crystallographic: bool
    dimension: int | None
    holonomy_order: int | None
    witness: dict[str, Any]

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "is_crystallographic": self.is_crystallographic,
            "dimension": self.dimension,
            "holonomy_order": self.holonomy_order,
            "witness": self.witness,
        }


def identity(group: GroupDescriptor) -> Element:
    return Element.identity(group)


def section(group: GroupDescriptor, w: Permutation) -> Element:
    return Element.section(group, w)


def action(w: Permutation, v: CoeffVector) -> CoeffVector:
    """The lattice automorphism induced by w: strand i is sent to w(i)."""
    return v.permuted(w)


def mul(x: Element, y: Element) -> Element:
    return x * y


def inverse(x: Element) -> Element:
    return x.inverse()


def power(x: Element, k: int) -> Element:
    return x**k


def conjugate(x: Element, by: Element) -> Element:
    return x.conjugated_by(by)


def verify_crystallographic(group: GroupDescriptor) -> Verdict:
    """Decide crystallographicity of the quotient for this surface.

    Orientable surfaces give a crystallographic group of dimension 2ng with
    holonomy S_n, witnessed by the strand action being faithful: each
    adjacent transposition moves a lattice basis vector.  The sphere and
    non-orientable surfaces are delegated to
    :func:`surfbraid.nonorientable.crystallographic_verdict`, which exhibits
    a nontrivial finite normal subgroup.
    """
    if group.kind != ORIENTABLE:
        from . import nonorientable

        return nonorientable.crystallographic_verdict(group)

    n, handles = group.n, group.handle_count
    moves = []
    for i in range(1, n):
        tau = Permutation.transposition(n, i)
        moved = CoeffVector.basis(n, handles, i, 1).permuted(tau)
        assert moved == CoeffVector.basis(n, handles, i + 1, 1)
        moves.append({"transposition": i, "from": [i, 1], "to": [i + 1, 1]})
    return Verdict(
        is_crystallographic=True,
        dimension=group.lattice_rank,
        holonomy_order=math.factorial(n),
        witness={
            "kind": "faithful_strand_action",
            "generator_moves": moves,
            "justification": "every non-identity permutation moves some strand, hence "
                             "moves a lattice basis vector; conjugation acts faithfully",
        },
    )
