"""Built-in property suites for the `selftest` CLI subcommand.

Each suite raises AssertionError on failure; the runner prints one
TAP-style line per suite.
"""

from __future__ import annotations

import random
from typing import Callable, TextIO

from . import nonorientable, torsion, words
from .bieberbach import make_bieberbach
from .core import CoeffVector, Element, GroupDescriptor, verify_crystallographic
from .intpoly import IntPoly
from .invariants import CyclicRep, anosov_check, betti_numbers, kahler_check, orientability
from .permutations import Permutation


def _random_element(rng: random.Random, group: GroupDescriptor, bound: int = 3) -> Element:
    n, handles = group.n, group.handle_count
    rows = tuple(
        tuple(rng.randint(-bound, bound) for _ in range(handles)) for _ in range(n)
    )
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Element(group, CoeffVector(rows), Permutation(tuple(images)))


def _suite_group_axioms() -> None:
    rng = random.Random(101)
    for n, g in [(2, 1), (3, 2), (4, 1)]:
        group = GroupDescriptor.orientable(n, g)
        e = Element.identity(group)
        for _ in range(40):
            x, y, z = (_random_element(rng, group) for _ in range(3))
            assert (x * y) * z == x * (y * z)
            assert x * e == x and e * x == x
            assert x * x.inverse() == e
            assert (x * y).perm == x.perm * y.perm


def _suite_relations() -> None:
    for n, g in [(3, 1), (4, 2)]:
        report = words.check_relations(GroupDescriptor.orientable(n, g))
        assert report.ok, f"relation failures: {report.failures}"


def _suite_power_formula() -> None:
    rng = random.Random(202)
    for n, g in [(3, 1), (5, 2)]:
        group = GroupDescriptor.orientable(n, g)
        for _ in range(40):
            m = rng.randint(2, n)
            cycle = tuple(rng.sample(range(1, n + 1), m))
            perm = Permutation.from_cycles(n, cycle)
            rows = tuple(
                tuple(rng.randint(-2, 2) for _ in range(group.handle_count))
                for _ in range(n)
            )
            z = Element(group, CoeffVector(rows), perm)
            k = m * rng.randint(1, 4)
            assert torsion.cycle_power_coeffs(z, k) == (z**k).coeffs


def _suite_conjugacy() -> None:
    group = GroupDescriptor.torus(3)
    t1 = Element.section(group, Permutation.transposition(3, 1))
    t2 = Element.section(group, Permutation.transposition(3, 2))
    three = Element.section(group, Permutation.from_cycles(3, (1, 2, 3)))
    assert torsion.conjugacy_test(t1, t2) is not None
    assert torsion.conjugacy_test(t1, three) is None
    rng = random.Random(303)
    for _ in range(20):
        c = _random_element(rng, group)
        theta = three.conjugated_by(c)
        assert torsion.order(theta).value == 3
        assert torsion.conjugacy_test(theta, three) is not None


def _suite_bieberbach() -> None:
    for n, g in [(2, 1), (3, 2), (4, 1)]:
        desc = make_bieberbach(n, g)
        matrix = desc.holonomy_matrix()
        assert matrix.char_poly() == IntPoly.x_pow_minus_one(n) ** (2 * g)
        assert matrix.det() == 1
        assert len(desc.centre()) == 2 * g


def _suite_invariants() -> None:
    for n, g in [(2, 1), (3, 1), (4, 2)]:
        rep = CyclicRep(make_bieberbach(n, g).holonomy_matrix(), n)
        betti = betti_numbers(rep)
        assert betti[1] == 2 * g
        assert sum((-1) ** i * b for i, b in enumerate(betti)) == 0
        assert orientability(rep) and anosov_check(rep) and kahler_check(rep)


def _suite_frobenius() -> None:
    rng = random.Random(404)
    for _ in range(20):
        emb = torsion.FrobeniusEmbedding(
            1, (tuple(rng.randint(-3, 3) for _ in range(4)), tuple(rng.randint(-3, 3) for _ in range(4)))
        )
        v1, v2 = torsion.frobenius_embed(emb)
        assert (v1**5).is_identity() and (v2**2).is_identity()
        assert v1.conjugated_by(v2) == v1**4
        torsion.frobenius_conjugator(emb)
    group = GroupDescriptor.torus(5)
    v = torsion.frobenius_torsion_element(group, 5, 4)
    assert torsion.order(v).value == 5


def _suite_nonorientable() -> None:
    rng = random.Random(505)
    for n, g in [(2, 2), (3, 3), (3, 1)]:
        group = GroupDescriptor.nonorientable(n, g)
        e = nonorientable.MixedElement.identity(group)
        for i in range(1, n):
            s = nonorientable.MixedElement.section(group, Permutation.transposition(n, i))
            assert s * s == e
        for _ in range(20):
            xs = []
            for _ in range(3):
                bits = tuple(rng.randint(0, 1) for _ in range(n))
                free = tuple(
                    tuple(rng.randint(-2, 2) for _ in range(g - 1)) for _ in range(n)
                )
                images = list(range(1, n + 1))
                rng.shuffle(images)
                xs.append(nonorientable.MixedElement(group, bits, free, Permutation(tuple(images))))
            x, y, z = xs
            assert (x * y) * z == x * (y * z)
            assert x * x.inverse() == e
        assert not nonorientable.crystallographic_verdict(group).is_crystallographic
    assert not nonorientable.crystallographic_verdict(GroupDescriptor.sphere(4)).is_crystallographic
    assert verify_crystallographic(GroupDescriptor.orientable(3, 2)).is_crystallographic


SUITES: list[tuple[str, Callable[[], None]]] = [
    ("group axioms hold on random elements", _suite_group_axioms),
    ("presentation relations normalize to equal elements", _suite_relations),
    ("cycle power formula matches repeated multiplication", _suite_power_formula),
    ("conjugacy classified by cycle type", _suite_conjugacy),
    ("bieberbach holonomy matrices and centre", _suite_bieberbach),
    ("flat manifold invariants", _suite_invariants),
    ("frobenius embeddings and torsion", _suite_frobenius),
    ("non-orientable and sphere models", _suite_nonorientable),
]


def run_selftest(out: TextIO) -> bool:
    ok = True
    print(f"1..{len(SUITES)}", file=out)
    for idx, (name, suite) in enumerate(SUITES, start=1):
        try:
            suite()
        except Exception as exc:  # report and keep going
            ok = False
            print(f"not ok {idx} - {name}: {exc}", file=out)
        else:
            print(f"ok {idx} - {name}", file=out)
    return ok
