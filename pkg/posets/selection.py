"""Rank selection: which level sets to unite into an optimal t-detecting code.

In a normal poset the largest t-detecting family has the size of the heaviest
rank selection whose consecutive ranks differ by more than t. The dynamic
program below finds that selection exactly; the residue form restricts it to
full residue classes mod t+1, which is optimal when the levels are unimodal.
"""
import logging
from typing import Mapping, Optional, Sequence

from posets.graded import RankSelection

logger = logging.getLogger(__name__)


def _ordered_ranks(level_sizes: Mapping[int, int]) -> Sequence[int]:
    if not level_sizes:
        raise ValueError("level sizes must cover a non-empty rank range")
    ranks = sorted(level_sizes)
    if ranks != list(range(ranks[0], ranks[-1] + 1)):
        raise ValueError(f"level sizes must cover a contiguous rank range, got {ranks}")
    return ranks


def _check_t(t: int):
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")


def residue_class(ranks: Sequence[int], m: int, t: int):
    return tuple(l for l in ranks if l % (t + 1) == m)


def residue_of(ranks: Sequence[int], chosen: Sequence[int], t: int) -> Optional[int]:
    """The residue m whose full class in ``ranks`` is exactly ``chosen``, if any."""
    if not chosen:
        return None
    m = chosen[0] % (t + 1)
    return m if residue_class(ranks, m, t) == tuple(chosen) else None


def residue_optimum(level_sizes: Mapping[int, int], t: int) -> RankSelection:
    """Best full residue class mod t+1; ties go to the smallest m."""
    _check_t(t)
    ranks = _ordered_ranks(level_sizes)
    best = None
    for m in range(t + 1):
        chosen = residue_class(ranks, m, t)
        total = sum(level_sizes[l] for l in chosen)
        if best is None or total > best.total:
            best = RankSelection(residue=m, chosen_ranks=chosen, total=total, t=t)
    return best


def kleitman_rank_selection(level_sizes: Mapping[int, int], t: int) -> RankSelection:
    """Heaviest set of ranks with pairwise gaps of at least t+1."""
    _check_t(t)
    ranks = _ordered_ranks(level_sizes)
    # best[i]: optimum over the first i ranks, as (total, chosen)
    best = [(0, ())]
    for i, l in enumerate(ranks):
        skip = best[i]
        prior = best[max(0, i - t)]
        take = (prior[0] + level_sizes[l], prior[1] + (l,))
        best.append(take if take[0] > skip[0] else skip)
    total, chosen = best[-1]
    if not chosen:
        # every level is empty; any single rank is an optimal selection
        chosen = (ranks[0],)
    selection = RankSelection(
        residue=residue_of(ranks, chosen, t), chosen_ranks=chosen, total=total, t=t
    )
    logger.debug(f"rank selection for t={t}: ranks {selection.chosen_ranks} total {total}")
    return selection
