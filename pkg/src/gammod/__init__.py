"""Exact toolkit for semimodules over two-generator numerical semigroups.

Core layers:

- semigroup / semimodule: membership tables, gaps, lattice paths, syzygies,
  conductors, u-sequences, the increasing property and the split lemma.
- enumeration: the tree of increasing semimodules plus a brute-force oracle.
- symbolic / puiseux: exact polynomial and truncated-series arithmetic and
  plane-branch parameterizations.
- realization: constructs a curve and an element z with v(R + zR) equal to a
  prescribed increasing semimodule.
- valuation: independent value-set computation used to verify realizations.

The FastAPI service in gammod.service and the CLI in gammod.cli expose every
operation with machine-readable output.
"""
from .semigroup import Gap, Semigroup, make_semigroup
from .semimodule import (CSequence, GammaSemimodule, LatticePath, SyzygyData,
                         USequence, c_sequence, conductor_semimodule,
                         delorme_split, is_increasing, is_lean, lattice_path,
                         normalize_semimodule, syzygy, u_sequence)
from .enumeration import (TreeNode, brute_force_increasing,
                          candidate_generators, export_tree, increasing_tree,
                          tree_from_json)
from .symbolic import ABOVE_TRUNCATION, MPoly, TruncSeries
from .puiseux import PuiseuxParam, coefficient_count
from .valuation import CurveRing, ValueSet, delorme_reduction, kaehler_semimodule, value_set
from .realization import (GENERAL, KAEHLER, ConditionSystem, RealizationResult,
                          Schedule, build_generators, realize, run_blocks,
                          schedule, solve_forward)

__all__ = [
    "ABOVE_TRUNCATION", "CSequence", "ConditionSystem", "CurveRing", "GENERAL",
    "Gap", "GammaSemimodule", "KAEHLER", "LatticePath", "MPoly", "PuiseuxParam",
    "RealizationResult", "Schedule", "Semigroup", "SyzygyData", "TreeNode",
    "TruncSeries", "USequence", "ValueSet", "brute_force_increasing",
    "build_generators", "c_sequence", "candidate_generators",
    "coefficient_count", "conductor_semimodule", "delorme_reduction",
    "delorme_split", "export_tree", "increasing_tree", "is_increasing",
    "is_lean", "kaehler_semimodule", "lattice_path", "make_semigroup",
    "normalize_semimodule", "realize", "run_blocks", "schedule",
    "solve_forward", "syzygy", "tree_from_json", "u_sequence", "value_set",
]
