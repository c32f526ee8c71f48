"""Exact arithmetic in crystallographic quotients of surface braid groups.

The quotient of the braid group of a closed surface by the commutator
subgroup of its pure braid group is, for orientable surfaces, a
crystallographic group: a rank-2ng lattice extended by the symmetric
group acting by strand relabelling.  This package computes in that group
in exact normal form, classifies finite-order elements and their
conjugacy, constructs the cyclic-holonomy torsion-free subgroup with its
flat-manifold invariants, and certifies that the sphere and
non-orientable quotients are not crystallographic.
"""

from .bieberbach import BieberbachDescriptor, GnMembership, TorsionScanReport, make_bieberbach
from .core import (
    CoeffVector,
    Element,
    GroupDescriptor,
    Verdict,
    verify_crystallographic,
)
from .errors import DomainError
from .intmatrix import IntMatrix
from .intpoly import IntPoly, cyclotomic, cyclotomic_multiplicities
from .invariants import (
    CyclicRep,
    anosov_check,
    betti_numbers,
    invariant_report,
    kahler_check,
    orientability,
)
from .nonorientable import (
    AbelianInvariants,
    FiniteNormalWitness,
    MixedElement,
    crystallographic_verdict,
    finite_normal_subgroup,
    kernel_structure,
)
from .permutations import Permutation
from .torsion import (
    FrobeniusEmbedding,
    OrderResult,
    conjugacy_test,
    conjugator_to_section,
    cycle_power_coeffs,
    frobenius_conjugator,
    frobenius_embed,
    frobenius_torsion_element,
    order,
    symmetric_copy_conjugator,
)
from .words import BraidWord, Letter, RelationReport, check_relations, normalize, parse

__version__ = "0.1.0"

__all__ = [
    "AbelianInvariants",
    "BieberbachDescriptor",
    "BraidWord",
    "CoeffVector",
    "CyclicRep",
    "DomainError",
    "Element",
    "FiniteNormalWitness",
    "FrobeniusEmbedding",
    "GnMembership",
    "GroupDescriptor",
    "IntMatrix",
    "IntPoly",
    "Letter",
    "MixedElement",
    "OrderResult",
    "Permutation",
    "RelationReport",
    "TorsionScanReport",
    "Verdict",
    "anosov_check",
    "betti_numbers",
    "check_relations",
    "conjugacy_test",
    "conjugator_to_section",
    "crystallographic_verdict",
    "cycle_power_coeffs",
    "cyclotomic",
    "cyclotomic_multiplicities",
    "finite_normal_subgroup",
    "frobenius_conjugator",
    "frobenius_embed",
    "frobenius_torsion_element",
    "invariant_report",
    "kahler_check",
    "kernel_structure",
    "make_bieberbach",
    "normalize",
    "order",
    "orientability",
    "parse",
    "symmetric_copy_conjugator",
    "verify_crystallographic",
    "__version__",
]
