from posets.detection import is_antichain, violating_pairs
from posets.graded import GradedChannel, NaturalBounds, RankRange, RankSelection, precedes, resolve_range
from posets.selection import kleitman_rank_selection, residue_optimum
from posets.structure import (
    check_poset_axioms,
    chain_list_check,
    cover_graph,
    is_rank_unimodal,
    is_regular,
    normalized_matching_check,
)

__all__ = [
    "GradedChannel",
    "NaturalBounds",
    "RankRange",
    "RankSelection",
    "chain_list_check",
    "check_poset_axioms",
    "cover_graph",
    "is_antichain",
    "is_rank_unimodal",
    "is_regular",
    "kleitman_rank_selection",
    "normalized_matching_check",
    "precedes",
    "residue_optimum",
    "resolve_range",
    "violating_pairs",
]
