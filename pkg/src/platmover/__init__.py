"""Coloured braids, simple branched covers of the sphere, and covering-move rewriting."""

from .algebra import Permutation, Transposition, compose, conjugate, shared_symbols
from .braid import ArcDescriptor, BraidWord, arc_to_word, conjugate_word, free_reduce, hurwitz_endo, relation_step
from .coloring import (
    ColoredPlat,
    ColoringError,
    MonodromySequence,
    half_twist_type,
    is_connected,
    is_liftable,
    standard_coloring,
    total_monodromy,
    transport,
)
from .cover import CoverSurface, NotLiftable, build_cover, homology_action, kernel_check, lift_arc
from .kernels import BACKEND
from .liftgen import GeneratorEntry, generating_set, generator_count, kernel_normal_gens
from .moves import MoveRule, destabilize, load_rules, markov_stabilize, stabilize, validate_rule, verify_script
from .standardize import LocalMove, apply_local_move, standardize

__all__ = [
    "ArcDescriptor",
    "BACKEND",
    "BraidWord",
    "ColoredPlat",
    "ColoringError",
    "CoverSurface",
    "GeneratorEntry",
    "LocalMove",
    "MonodromySequence",
    "MoveRule",
    "NotLiftable",
    "Permutation",
    "Transposition",
    "apply_local_move",
    "arc_to_word",
    "build_cover",
    "compose",
    "conjugate",
    "conjugate_word",
    "destabilize",
    "free_reduce",
    "generating_set",
    "generator_count",
    "half_twist_type",
    "homology_action",
    "hurwitz_endo",
    "is_connected",
    "is_liftable",
    "kernel_check",
    "kernel_normal_gens",
    "lift_arc",
    "load_rules",
    "markov_stabilize",
    "relation_step",
    "shared_symbols",
    "stabilize",
    "standard_coloring",
    "standardize",
    "total_monodromy",
    "transport",
    "validate_rule",
    "verify_script",
]
