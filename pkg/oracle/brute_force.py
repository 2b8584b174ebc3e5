"""Exhaustive maximum t-detecting codes, independent of any counting formula.

Two codewords conflict when the channel relates them and their ranks differ by
at most t; an optimal code is a maximum independent set of the conflict graph.
The optimum is found as a maximum clique of the complement graph with a greedy
colouring bound (each colour class is a clique of conflicts, so a code holds at
most one of its members). A second pass walks the elements in canonical
(rank, encoding) order and keeps each one that still leaves room for an
optimal code, which yields the lexicographically least maximizer.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from codes import ALL, resolve_radius
from config import config
from posets import GradedChannel, RankRange, resolve_range
from utils.errors import ResourceError

logger = logging.getLogger(__name__)


@dataclass
class OracleResult:
    optimum: int
    witness: Tuple
    explored_nodes: int
    t: object
    element_count: int


def build_conflict_graph(ch: GradedChannel, rank_range: Optional[RankRange] = None, t=ALL) -> nx.Graph:
    """Nodes are elements in canonical order; edges join pairs no code may hold together."""
    r = resolve_range(ch, rank_range)
    bound = None if t == ALL else resolve_radius(t, r)
    graph = nx.Graph()
    elements = ch.elements(r)
    for index, x in enumerate(elements):
        graph.add_node(x, rank=ch.rank(x), index=index)
    for i, x in enumerate(elements):
        for y in elements[i + 1:]:
            gap = abs(ch.rank(x) - ch.rank(y))
            if gap == 0 or (bound is not None and gap > bound):
                continue
            if ch.leq(y, x) or ch.leq(x, y):
                graph.add_edge(x, y)
    return graph


class _Search:
    """Bitset search state; vertex i is bit i, in canonical element order."""

    def __init__(self, conflicts: Sequence[int]):
        self.conflicts = conflicts
        self.size = len(conflicts)
        self.everything = (1 << self.size) - 1
        self.nodes = 0

    def colour_classes(self, candidates: int) -> Tuple[List[int], List[int]]:
        """Greedy partition of ``candidates`` into conflict cliques.

        A code holds at most one vertex per class, so the running class count
        bounds the code size over any prefix of ``order``.
        """
        order, colours = [], []
        colour = 0
        while candidates:
            colour += 1
            pool = candidates
            while pool:
                low = pool & -pool
                v = low.bit_length() - 1
                candidates ^= low
                pool = (pool ^ low) & self.conflicts[v]
                order.append(v)
                colours.append(colour)
        return order, colours

    def maximum(self, candidates: int, floor: int = 0, stop_at: Optional[int] = None) -> int:
        """Largest independent set inside ``candidates`` if it beats ``floor``, else ``floor``.

        With ``stop_at`` the search ends as soon as a set of that size is seen.
        """
        self.best = floor

        def expand(candidates: int, size: int) -> bool:
            self.nodes += 1
            order, colours = self.colour_classes(candidates)
            for k in range(len(order) - 1, -1, -1):
                if size + colours[k] <= self.best:
                    return False
                v = order[k]
                rest = candidates & ~self.conflicts[v] & ~(1 << v)
                if rest:
                    if expand(rest, size + 1):
                        return True
                elif size + 1 > self.best:
                    self.best = size + 1
                if stop_at is not None and self.best >= stop_at:
                    return True
                candidates &= ~(1 << v)
            return False

        if candidates:
            expand(candidates, 0)
        return self.best

    def holds(self, candidates: int, need: int) -> bool:
        if need <= 0:
            return True
        return self.maximum(candidates, floor=need - 1, stop_at=need) >= need

    def least_maximizer(self, target: int) -> Tuple[int, ...]:
        """Lexicographically least independent set of size ``target``.

        Walks vertices in index order and keeps each one whose inclusion still
        leaves room for the remaining codewords.
        """
        chosen: List[int] = []
        candidates = self.everything
        while len(chosen) < target:
            self.nodes += 1
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            rest = candidates & ~self.conflicts[v]
            if self.holds(rest, target - len(chosen) - 1):
                chosen.append(v)
                candidates = rest
        return tuple(chosen)

    def exhaustive(self) -> Tuple[int, ...]:
        """Unbounded include-first search; the first largest set found wins."""
        best: List[Tuple[int, ...]] = [()]

        def walk(candidates: int, chosen: Tuple[int, ...]):
            self.nodes += 1
            if not candidates:
                if len(chosen) > len(best[0]):
                    best[0] = chosen
                return
            low = candidates & -candidates
            v = low.bit_length() - 1
            rest = candidates ^ low
            walk(rest & ~self.conflicts[v], chosen + (v,))
            walk(rest, chosen)

        walk(self.everything, ())
        return best[0]


def _conflict_masks(graph: nx.Graph, elements: Sequence) -> List[int]:
    index = {x: i for i, x in enumerate(elements)}
    masks = [0] * len(elements)
    for x, y in graph.edges():
        masks[index[x]] |= 1 << index[y]
        masks[index[y]] |= 1 << index[x]
    return masks


def brute_force_optimal(
    ch: GradedChannel,
    rank_range: Optional[RankRange] = None,
    t=ALL,
    guard: Optional[int] = None,
    prune: bool = True,
) -> OracleResult:
    """Largest code in the range detecting up to t errors ("all" for every pattern)."""
    r = resolve_range(ch, rank_range)
    limit = guard if guard is not None else config.oracle_guard
    count = ch.element_count(r)
    if count > limit:
        raise ResourceError(
            f"brute-force search over {ch.describe()} {r} has {count} elements, "
            f"above the oracle guard of {limit}",
            size=count,
        )
    elements = ch.elements(r)
    graph = build_conflict_graph(ch, r, t)
    search = _Search(_conflict_masks(graph, elements))

    if prune:
        optimum = search.maximum(search.everything, floor=len(_greedy(search)))
        witness = search.least_maximizer(optimum)
    else:
        witness = search.exhaustive()
        optimum = len(witness)

    logger.debug(
        f"oracle {ch.describe()} {r} t={t}: optimum {optimum} over {count} elements, "
        f"{search.nodes} nodes, {graph.number_of_edges()} conflicts"
    )
    return OracleResult(
        optimum=optimum,
        witness=tuple(elements[i] for i in witness),
        explored_nodes=search.nodes,
        t=t,
        element_count=count,
    )


def is_sperner(ch: GradedChannel, rank_range: Optional[RankRange] = None, guard: Optional[int] = None) -> bool:
    """True when no antichain is larger than the largest level."""
    r = resolve_range(ch, rank_range)
    widest = max(ch.level_sizes(r).values())
    return brute_force_optimal(ch, r, ALL, guard=guard).optimum == widest


def _greedy(search: _Search) -> Tuple[int, ...]:
    """A maximal code used as the search floor: the better of the first
    include-first leaf and a fewest-conflicts-first pass."""
    by_index = range(search.size)
    by_degree = sorted(by_index, key=lambda v: (search.conflicts[v].bit_count(), v))
    best: Tuple[int, ...] = ()
    for order in (by_index, by_degree):
        chosen = []
        blocked = 0
        for v in order:
            if not blocked >> v & 1:
                chosen.append(v)
                blocked |= search.conflicts[v] | 1 << v
        if len(chosen) > len(best):
            best = tuple(chosen)
    return best
