"""Structural certificates for graded channels: axioms, regularity, normality."""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import networkx as nx

from config import config
from counting import is_unimodal
from posets.graded import GradedChannel, RankRange, precedes, resolve_range
from utils.errors import ResourceError

logger = logging.getLogger(__name__)


@dataclass
class AxiomReport:
    """Outcome of the exhaustive poset-axiom check; failures hold rendered pairs."""

    element_count: int
    reflexive: bool = True
    antisymmetric: bool = True
    transitive: bool = True
    rank_compatible: bool = True
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.reflexive and self.antisymmetric and self.transitive and self.rank_compatible


@dataclass
class ChainListReport:
    uniform: bool
    multiplicity: Dict[int, Optional[int]]
    problems: List[str] = field(default_factory=list)


def _guarded_elements(ch: GradedChannel, r: RankRange, guard: int, purpose: str) -> List:
    count = ch.element_count(r)
    if count > guard:
        raise ResourceError(
            f"{purpose} over {ch.describe()} {r} needs {count} elements, above the guard of {guard}",
            size=count,
        )
    return ch.elements(r)


def check_poset_axioms(ch: GradedChannel, rank_range: Optional[RankRange] = None) -> AxiomReport:
    """Reflexivity, antisymmetry, transitivity and rank compatibility, checked exhaustively."""
    r = resolve_range(ch, rank_range)
    elements = _guarded_elements(ch, r, config.axiom_check_guard, "axiom check")
    ranks = [ch.rank(x) for x in elements]
    size = len(elements)

    # reach[i] has bit j set iff elements[i] ~> elements[j]
    reach = [0] * size
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            if ch.leq(y, x):
                reach[i] |= 1 << j

    report = AxiomReport(element_count=size)
    for i in range(size):
        if not reach[i] >> i & 1:
            report.reflexive = False
            report.failures.append(f"not reflexive at {ch.render(elements[i])}")
        for j in _bits(reach[i]):
            if j == i:
                continue
            if reach[j] >> i & 1 and report.antisymmetric:
                report.antisymmetric = False
                report.failures.append(
                    f"{ch.render(elements[i])} and {ch.render(elements[j])} reach each other"
                )
            if reach[j] & ~reach[i] and report.transitive:
                report.transitive = False
                report.failures.append(f"not transitive through {ch.render(elements[j])}")
            moved_up = ranks[j] > ranks[i]
            if (moved_up != ch.rank_increases or ranks[j] == ranks[i]) and report.rank_compatible:
                report.rank_compatible = False
                report.failures.append(
                    f"{ch.render(elements[i])} ~> {ch.render(elements[j])} moves rank the wrong way"
                )
    return report


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def cover_graph(ch: GradedChannel, rank_range: Optional[RankRange] = None) -> nx.DiGraph:
    """Cover relations of the range, as edges lower -> upper."""
    r = resolve_range(ch, rank_range)
    count = ch.element_count(r)
    if count > config.enumeration_guard:
        raise ResourceError(
            f"cover graph over {ch.describe()} {r} needs {count} elements", size=count
        )
    # every adjacent-level pair is compared once
    sizes = ch.level_sizes(r)
    pairs = sum(sizes[l] * sizes[l + 1] for l in range(r.lo, r.hi))
    if pairs > config.cover_pair_guard:
        raise ResourceError(
            f"cover graph over {ch.describe()} {r} needs {pairs} comparisons, "
            f"above the cover pair guard of {config.cover_pair_guard}",
            size=pairs,
        )
    graph = nx.DiGraph()
    levels = {l: ch.enumerate_level(l) for l in r.ranks()}
    for l, level in levels.items():
        graph.add_nodes_from(level, rank=l)
    for l in r.ranks():
        if l == r.hi:
            break
        for lower in levels[l]:
            for upper in levels[l + 1]:
                if precedes(ch, lower, upper):
                    graph.add_edge(lower, upper)
    logger.debug(f"cover graph of {ch.describe()} {r}: {graph.number_of_edges()} covers")
    return graph


def is_regular(ch: GradedChannel, rank_range: Optional[RankRange] = None) -> bool:
    """True iff up-degree and down-degree are constant on every level."""
    r = resolve_range(ch, rank_range)
    graph = cover_graph(ch, r)
    for l in r.ranks():
        level = [x for x, rank in graph.nodes(data="rank") if rank == l]
        if len({graph.out_degree(x) for x in level}) > 1:
            return False
        if len({graph.in_degree(x) for x in level}) > 1:
            return False
    return True


def normalized_matching_check(ch: GradedChannel, rank_range: Optional[RankRange] = None) -> bool:
    """|up-shadow(A)| / |X_l+1| >= |A| / |X_l| for every A inside every level X_l."""
    r = resolve_range(ch, rank_range)
    for l in r.ranks():
        if l == r.hi:
            break
        lower_size = ch.level_size(l)
        if lower_size > config.matching_level_guard:
            raise ResourceError(
                f"level {l} of {ch.describe()} has {lower_size} elements; the matching check "
                f"enumerates its subsets and is limited to {config.matching_level_guard}",
                size=lower_size,
            )
    graph = cover_graph(ch, r)
    for l in r.ranks():
        if l == r.hi:
            break
        lower = ch.enumerate_level(l)
        upper_index = {y: k for k, y in enumerate(ch.enumerate_level(l + 1))}
        up_masks = []
        for x in lower:
            mask = 0
            for y in graph.successors(x):
                mask |= 1 << upper_index[y]
            up_masks.append(mask)
        if not _matching_holds(up_masks, len(upper_index)):
            logger.info(f"normalized matching fails between levels {l} and {l + 1} of {ch.describe()}")
            return False
    return True


def _matching_holds(up_masks: Sequence[int], upper_size: int) -> bool:
    lower_size = len(up_masks)
    shadow = [0] * (1 << lower_size)
    for subset in range(1, 1 << lower_size):
        low = subset & -subset
        shadow[subset] = shadow[subset ^ low] | up_masks[low.bit_length() - 1]
        if shadow[subset].bit_count() * lower_size < subset.bit_count() * upper_size:
            return False
    return True


def chain_list_check(ch: GradedChannel, chains: Sequence[Sequence], rank_range: Optional[RankRange] = None) -> ChainListReport:
    """Whether a list of maximal chains covers each rank-l element equally often."""
    r = resolve_range(ch, rank_range)
    problems = []
    counts: Dict[object, int] = {}
    for index, chain in enumerate(chains):
        ranks = [ch.rank(x) for x in chain]
        if ranks != list(r.ranks()):
            problems.append(f"chain {index} is not maximal: ranks {ranks}")
            continue
        for lower, upper in zip(chain, chain[1:]):
            if not precedes(ch, lower, upper):
                problems.append(
                    f"chain {index}: {ch.render(lower)} is not below {ch.render(upper)}"
                )
        for x in chain:
            counts[x] = counts.get(x, 0) + 1

    multiplicity: Dict[int, Optional[int]] = {}
    for l in r.ranks():
        seen = {counts.get(x, 0) for x in ch.enumerate_level(l)}
        multiplicity[l] = seen.pop() if len(seen) == 1 else None
        if multiplicity[l] is None:
            problems.append(f"rank {l} elements appear {sorted(seen)} times")
        elif multiplicity[l] == 0:
            problems.append(f"rank {l} elements appear in no chain")
    return ChainListReport(uniform=not problems, multiplicity=multiplicity, problems=problems)


def is_rank_unimodal(ch: GradedChannel, rank_range: Optional[RankRange] = None) -> bool:
    r = resolve_range(ch, rank_range)
    sizes = ch.level_sizes(r)
    return is_unimodal([sizes[l] for l in r.ranks()])
