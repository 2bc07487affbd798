"""Computational toolkit for finitely generated free groups.

Reduced word arithmetic, Whitehead graphs and their cut vertices, the two
kinds of Whitehead automorphisms, primitivity testing by cyclic length
minimization, subgroup graphs by folding, and batch verification sweeps
with a command line front end (``python -m freegroups`` or the
``freegroups`` script).
"""

from .automorphisms import (
    MultiplierAut,
    PermutationAut,
    apply_aut,
    enumerate_kind1,
    enumerate_kind2,
    is_automorphism_witness,
    kind2_count,
    letter_order,
)
from .primitivity import (
    MinimizationTrace,
    is_basis_pair_f2,
    is_primitive,
    primitive_orbit_oracle,
    whitehead_minimize,
)
from .stallings import SubgroupGraph, build_subgroup_graph
from .verify import (
    CLAIM_IDS,
    VerificationReport,
    WijFamily,
    build_w,
    make_report,
    primitive_density,
    run_claims,
    select_wij,
    verify_claim_one,
    verify_claim_two,
    verify_fact1,
    verify_fincov,
    verify_lemma38,
    verify_nielsen_xcheck,
    verify_npbig,
    verify_prop24,
    verify_section3,
    wij_family,
)
from .whitehead_graph import (
    CutVertexVerdict,
    WhiteheadGraph,
    build_whitehead_graph,
    whitehead_edges,
)
from .words import (
    CyclicWord,
    Word,
    WordParseError,
    are_conjugate,
    canonical_rotation,
    commutator,
    count_reduced_words,
    cyclically_reduce,
    format_word,
    free_reduce,
    invert,
    iter_reduced_words,
    letter_key,
    letter_name,
    multiply,
    parse_word,
    word_sort_key,
)

__version__ = "0.1.0"

__all__ = [
    "CLAIM_IDS",
    "CutVertexVerdict",
    "CyclicWord",
    "MinimizationTrace",
    "MultiplierAut",
    "PermutationAut",
    "SubgroupGraph",
    "VerificationReport",
    "WhiteheadGraph",
    "WijFamily",
    "Word",
    "WordParseError",
    "apply_aut",
    "are_conjugate",
    "build_subgroup_graph",
    "build_w",
    "build_whitehead_graph",
    "canonical_rotation",
    "commutator",
    "count_reduced_words",
    "cyclically_reduce",
    "enumerate_kind1",
    "enumerate_kind2",
    "format_word",
    "free_reduce",
    "invert",
    "is_automorphism_witness",
    "is_basis_pair_f2",
    "is_primitive",
    "iter_reduced_words",
    "kind2_count",
    "letter_key",
    "letter_name",
    "letter_order",
    "make_report",
    "multiply",
    "parse_word",
    "primitive_density",
    "primitive_orbit_oracle",
    "run_claims",
    "select_wij",
    "verify_claim_one",
    "verify_claim_two",
    "verify_fact1",
    "verify_fincov",
    "verify_lemma38",
    "verify_nielsen_xcheck",
    "verify_npbig",
    "verify_prop24",
    "verify_section3",
    "whitehead_edges",
    "whitehead_minimize",
    "wij_family",
    "word_sort_key",
]
