"""Exact integrality and distance-integrality checks for Cayley graphs over Dic(A, y)."""

from __future__ import annotations

from .abelian import AbelianGroup, Character, parse_group
from .criteria import (
    DistancePowerBuilder,
    Verdict,
    boolean_pair_equivalence,
    cyclic_corollary_check,
    distance_integrality_criterion,
    distance_power_sets,
    equivalence_theorem_check,
    family_corollary_check,
    integrality_criterion,
    proposition_conditions,
    sufficient_condition_check,
    symmetric_S2_criterion,
)
from .cyclotomic import CyclotomicInt, cyclotomic_poly
from .dicyclic import (
    ConnectionSet,
    DicyclicGroup,
    construct_dicyclic,
    make_connection_set,
    symmetric_connection_sets,
    word_lengths,
)
from .graphs import bfs_distances, cayley_graph, distance_matrix, distance_power
from .representations import irrep_inventory
from .spectra import SpectrumReport, babai_oracle, char_poly_exact, hl_oracle, integer_spectrum, phi_matrix
from .sweep import SweepConfig, catalog_asymmetric_integral, run_sweep

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "Character",
    "ConnectionSet",
    "CyclotomicInt",
    "DicyclicGroup",
    "DistancePowerBuilder",
    "SpectrumReport",
    "SweepConfig",
    "Verdict",
    "babai_oracle",
    "bfs_distances",
    "boolean_pair_equivalence",
    "catalog_asymmetric_integral",
    "cayley_graph",
    "char_poly_exact",
    "construct_dicyclic",
    "cyclic_corollary_check",
    "cyclotomic_poly",
    "distance_integrality_criterion",
    "distance_matrix",
    "distance_power",
    "distance_power_sets",
    "equivalence_theorem_check",
    "family_corollary_check",
    "hl_oracle",
    "integer_spectrum",
    "integrality_criterion",
    "irrep_inventory",
    "make_connection_set",
    "parse_group",
    "phi_matrix",
    "proposition_conditions",
    "run_sweep",
    "sufficient_condition_check",
    "symmetric_S2_criterion",
    "symmetric_connection_sets",
    "word_lengths",
]
