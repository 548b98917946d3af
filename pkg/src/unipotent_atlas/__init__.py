"""Unipotent classes, spin component groups and the fourth roots of unity of cuspidal blocks."""
from .classical import ClassRecord, component_group_order, cuspidal_pair_exists, enumerate_classes
from .groups import GroupTable, automorphisms, f_conjugacy_classes, is_inner
from .quartic import QuarticElem, RootOfUnity4, divides, gauss_sum_numeric
from .spin import OddPartSet, TwistPattern, build_spin_group, twist_analysis
from .symbols import SpringerSymbol, enumerate_block, parity_counts
from .zeta import ZetaQuery, block_sum, eliminate_candidates, zeta_base_sl2, zeta_prime

__version__ = "0.1.0"

__all__ = [
    "ClassRecord",
    "GroupTable",
    "OddPartSet",
    "QuarticElem",
    "RootOfUnity4",
    "SpringerSymbol",
    "TwistPattern",
    "ZetaQuery",
    "automorphisms",
    "block_sum",
    "build_spin_group",
    "component_group_order",
    "cuspidal_pair_exists",
    "divides",
    "eliminate_candidates",
    "enumerate_block",
    "enumerate_classes",
    "f_conjugacy_classes",
    "gauss_sum_numeric",
    "is_inner",
    "parity_counts",
    "twist_analysis",
    "zeta_base_sl2",
    "zeta_prime",
]
