"""Detection predicates: antichains and t-detecting codes."""
from typing import Iterable, List, Optional, Tuple

from posets.graded import GradedChannel, RankRange


def _canonical(ch: GradedChannel, s: Iterable, rank_range: Optional[RankRange]) -> List:
    elements = list(dict.fromkeys(s))
    for x in elements:
        ch.validate(x, rank_range)
    return sorted(elements, key=ch.sort_key)


def is_antichain(ch: GradedChannel, s: Iterable, rank_range: Optional[RankRange] = None) -> bool:
    """True iff no two distinct elements of s are related by the channel."""
    return not violating_pairs(ch, s, None, rank_range, first_only=True)


def violating_pairs(
    ch: GradedChannel,
    s: Iterable,
    t: Optional[int],
    rank_range: Optional[RankRange] = None,
    first_only: bool = False,
) -> List[Tuple[object, object]]:
    """Pairs (x, y) of distinct elements with x ~> y and |rank x - rank y| <= t.

    ``t=None`` bounds nothing, so every related pair is reported. The list is
    empty exactly when s detects up to t errors.
    """
    if t is not None and t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    elements = _canonical(ch, s, rank_range)
    ranks = [ch.rank(x) for x in elements]
    pairs = []
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            if i == j:
                continue
            if t is not None and abs(ranks[i] - ranks[j]) > t:
                continue
            # equal ranks are never related in a graded channel
            if ranks[i] == ranks[j]:
                continue
            if ch.leq(y, x):
                pairs.append((x, y))
                if first_only:
                    return pairs
    return pairs
