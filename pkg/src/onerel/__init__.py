"""Outer automorphism groups of two-generator one-relator groups with torsion."""

from .autdetect import AutVerdict, delta_syntactic, is_relator_auto
from .classify import (
    ClassificationReport,
    OutClass,
    Witnesses,
    classify_out,
    emit_aut_presentation,
    emit_out_presentation,
    replay_trace,
)
from .errors import HypothesisError, InputError, NotABasisError, TheoryViolation
from .estimators import OutClassifier, RelatorBalancer
from .maps import GenMap, abel_matrix, apply, compose, family, mod_inn_equal, nielsen_reduce_pair, parse_map
from .normalize import BalancedPresentation, Branch, balance_relator, detect_branch
from .presentations import GroupPresentation
from .primitive import primitive_out_order, realize_primitive_out
from .words import CyclicWord, Word, cyclically_equal, parse_word, scan_extremes

__version__ = "0.1.0"

__all__ = [
    "AutVerdict", "BalancedPresentation", "Branch", "ClassificationReport", "CyclicWord", "GenMap",
    "GroupPresentation", "HypothesisError", "InputError", "NotABasisError", "OutClass", "OutClassifier",
    "RelatorBalancer", "TheoryViolation", "Witnesses", "Word", "abel_matrix", "apply", "balance_relator",
    "classify_out", "compose", "cyclically_equal", "delta_syntactic", "detect_branch",
    "emit_aut_presentation", "emit_out_presentation", "family", "is_relator_auto", "mod_inn_equal",
    "nielsen_reduce_pair", "parse_map", "parse_word", "primitive_out_order", "realize_primitive_out",
    "replay_trace", "scan_extremes",
]
