"""
Root combinatorics of the symmetric group.

One-line permutations, the rank-n type A roots, the bijection between
roots and cosets of the parabolic subgroup fixing the last two one-line
positions, Bruhat order on the coset space, and Costas permutations,
together with exhaustive verifiers over small ranks.
"""

from .bruhat import (
    ChainStep,
    bruhat_leq,
    bruhat_leq_oracle,
    chain,
    chain_start,
    chain_step,
    comparable,
    coset_leq,
    hasse_covers,
    verify_equal_height_comparable,
    verify_height_separation,
)
from .cosets import (
    coset_count,
    coset_of,
    fixed_cosets_count,
    fixed_roots_count,
    in_parabolic,
    max_rep,
    max_rep_length,
    min_rep,
    parabolic_elements,
    parabolic_generators,
    verify_character_identity,
)
from .costas import (
    enumerate_costas,
    is_costas,
    is_costas_via_roots,
    verify_costas_height_property,
)
from .permutation import (
    Permutation,
    all_permutations,
    apply_simple,
    conjugacy_class_representatives,
    cycle_type,
    evaluate_word,
    format_one_line,
    identity,
    parse_one_line,
    reduced_word,
    simple_reflection,
    swap_values,
    transposition,
)
from .report import CostasReport, VerificationReport
from .roots import Root, act, all_roots, decompose, parse_root, positive_roots, simple_roots

__version__ = "0.1.0"
