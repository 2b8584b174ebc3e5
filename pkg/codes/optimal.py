"""Maximum sizes of t-detecting codes, and codes that attain them.

A union of level sets whose ranks differ pairwise by more than t detects up to
t errors; in a normal channel the heaviest such union is optimal. The generic
size below is that heaviest union, found by dynamic programming over the
level sizes; the closed forms are the per-family sums with the maximizing
residue stated explicitly.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Tuple, Union

from sympy import isprime

from counting import (
    BigCount,
    binomial,
    compositions_count,
    is_unimodal,
    partitions_count,
    q_binomial,
    render_count,
)
from posets import (
    GradedChannel,
    RankRange,
    RankSelection,
    kleitman_rank_selection,
    residue_optimum,
    resolve_range,
)
from utils.errors import DomainError

logger = logging.getLogger(__name__)

ALL = "all"
Radius = Union[int, str]

# families whose displayed sum is only a lower bound on the optimum
BOUND_ONLY_FAMILIES = {"shift"}
# families whose closed form is stated for the whole channel, not a restriction
FULL_RANGE_FAMILIES = {"subset", "zchannel", "subspace", "shift"}


def resolve_radius(t: Radius, rank_range: RankRange) -> int:
    """Map "all" to the rank span, which already forbids every related pair."""
    if t == ALL:
        return rank_range.span
    if not isinstance(t, int) or isinstance(t, bool) or t < 0:
        raise DomainError(f"t must be a non-negative integer or '{ALL}', got {t!r}")
    return t


def identity_params(ch: GradedChannel) -> Dict[str, int]:
    """Channel parameters plus the dual marker, as written to headers and reports."""
    params = dict(ch.params())
    if ch.is_dual:
        params["dual"] = 1
    return params


@dataclass
class Code:
    channel: GradedChannel
    t: Radius
    codewords: Tuple
    rank_range: RankRange

    def sorted_codewords(self) -> Tuple:
        return tuple(sorted(self.codewords, key=self.channel.sort_key))

    def __len__(self):
        return len(self.codewords)


@dataclass
class SizeReport:
    family: str
    params: Dict[str, int]
    t: Radius
    generic_total: BigCount
    closed_form_total: Optional[BigCount]
    residue: Optional[int]
    ranks: Tuple[int, ...]
    residue_total: BigCount
    bound_only: bool
    rank_unimodal: bool
    selection: RankSelection = field(repr=False, default=None)
    middle_residue_total: Optional[BigCount] = None

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "t": self.t,
            "size": render_count(self.generic_total),
            "residue": self.residue,
            "ranks": list(self.ranks),
            "bound_only": self.bound_only,
            "closed_form": None if self.closed_form_total is None else render_count(self.closed_form_total),
            "residue_total": render_count(self.residue_total),
            "rank_unimodal": self.rank_unimodal,
            "middle_residue_total": (
                None if self.middle_residue_total is None else render_count(self.middle_residue_total)
            ),
        }


def _congruent_sum(top: int, m: int, t: int, term) -> BigCount:
    return sum(term(l) for l in range(top + 1) if l % (t + 1) == m % (t + 1))


def _require(condition: bool, message: str):
    if not condition:
        raise DomainError(message)


def _zchannel_residue_sum(a, n, t, m):
    return _congruent_sum(n * (a - 1), m, t, lambda l: compositions_count(a - 1, n, l))


def zchannel_middle_residue_size(a: int, n: int, t: int) -> BigCount:
    """Words whose weight is congruent to the middle weight n(a-1)//2 mod t+1.

    Often optimal but not always; ``closed_form_size`` takes the best residue.
    """
    _require(a >= 2 and n >= 1 and t >= 0, f"invalid Z-channel parameters a={a}, n={n}, t={t}")
    return _zchannel_residue_sum(a, n, t, n * (a - 1) // 2)


def closed_form_size(family: str, params: Dict[str, int], t: int) -> BigCount:
    """The family's residue sum: the middle residue for subset, subspace and
    shift, the best residue for the Z-channel, and top-anchored sums for the
    multiset and deletion channels.

    Full-domain families (subset, zchannel, subspace, shift) accept lo/hi only
    when they span the whole channel; multiset and deletion need hi.
    """
    _require(isinstance(t, int) and t >= 0, f"t must be a non-negative integer, got {t!r}")
    n, a, p, w = (params.get(k) for k in ("n", "a", "p", "w"))
    lo, hi = params.get("lo", 0), params.get("hi")
    _require(lo >= 0 and (hi is None or lo <= hi), f"invalid rank range [{lo}, {hi}]")

    if family in FULL_RANGE_FAMILIES:
        top = {
            "subset": lambda: n,
            "zchannel": lambda: n * (a - 1),
            "subspace": lambda: n,
            "shift": lambda: w * (n - w),
        }
        _require(n is not None and n >= 1, "n must be at least 1")
        if family == "zchannel":
            _require(a is not None and a >= 2, "a must be at least 2")
        if family == "subspace":
            _require(p is not None and isprime(p), f"p must be prime, got {p}")
        if family == "shift":
            _require(w is not None and 0 <= w <= n, f"w must be in [0, n], got {w}")
        full = top[family]()
        _require(lo == 0 and (hi is None or hi == full), "the closed form covers only the full rank range")

    if family == "subset":
        return _congruent_sum(n, n // 2, t, lambda l: binomial(n, l))
    if family == "zchannel":
        # the middle residue n(a-1)//2 is not always a maximizer (a=3, n=3, t=1 gives 13 < 14)
        return max(_zchannel_residue_sum(a, n, t, m) for m in range(t + 1))
    if family == "subspace":
        return _congruent_sum(n, n // 2, t, lambda l: q_binomial(n, l, p))
    if family == "shift":
        top_rank = w * (n - w)
        return _congruent_sum(top_rank, top_rank // 2, t, lambda l: partitions_count(n - w, w, l))
    if family == "multiset":
        _require(n is not None and n >= 1, "n must be at least 1")
        _require(hi is not None, "the multiset closed form needs hi")
        return sum(binomial(hi - i * (t + 1) + n - 1, n - 1) for i in range((hi - lo) // (t + 1) + 1))
    if family == "deletion":
        _require(a is not None and a >= 2, "a must be at least 2")
        _require(hi is not None, "the deletion closed form needs hi")
        return sum(a ** (hi - j * (t + 1)) for j in range((hi - lo) // (t + 1) + 1))
    raise DomainError(f"no closed form for family '{family}'")


def _has_closed_form(ch: GradedChannel, r: RankRange) -> bool:
    if ch.family not in FULL_RANGE_FAMILIES:
        return True
    natural = ch.natural_range()
    return r.lo == natural.lo and r.hi == natural.hi


def optimal_code_size(ch: GradedChannel, rank_range: Optional[RankRange] = None, t: Radius = 0) -> SizeReport:
    r = resolve_range(ch, rank_range)
    radius = resolve_radius(t, r)
    sizes = ch.level_sizes(r)

    best = kleitman_rank_selection(sizes, radius)
    by_residue = residue_optimum(sizes, radius)
    selection = by_residue if by_residue.total == best.total else best
    if selection is best:
        logger.info(
            f"{ch.describe()} t={t}: ranks {best.chosen_ranks} beat every residue class "
            f"({best.total} > {by_residue.total})"
        )

    params = identity_params(ch)
    closed = None
    if _has_closed_form(ch, r):
        closed = closed_form_size(ch.family, dict(ch.params(), lo=r.lo, hi=r.hi), radius)
    bound_only = ch.family in BOUND_ONLY_FAMILIES
    if closed is not None and closed != best.total:
        if bound_only and closed < best.total:
            logger.warning(
                f"{ch.describe()} t={t}: lower bound {closed} is below the rank selection {best.total}"
            )
        else:
            logger.warning(f"{ch.describe()} t={t}: closed form {closed} differs from {best.total}")

    middle = None
    if ch.family == "zchannel" and closed is not None:
        middle = zchannel_middle_residue_size(ch.params()["a"], ch.params()["n"], radius)
        if middle < best.total:
            logger.warning(
                f"{ch.describe()} t={t}: the middle residue gives {middle}, below the optimum {best.total}"
            )

    return SizeReport(
        family=ch.family,
        params=params,
        t=t,
        generic_total=best.total,
        closed_form_total=closed,
        residue=selection.residue,
        ranks=selection.chosen_ranks,
        residue_total=by_residue.total,
        bound_only=bound_only,
        rank_unimodal=is_unimodal([sizes[l] for l in r.ranks()]),
        selection=selection,
        middle_residue_total=middle,
    )


def construct_code(ch: GradedChannel, rank_range: Optional[RankRange] = None, t: Radius = 0) -> Code:
    """Union of the level sets chosen by ``optimal_code_size``."""
    r = resolve_range(ch, rank_range)
    report = optimal_code_size(ch, r, t)
    codewords = []
    for l in report.ranks:
        codewords.extend(ch.enumerate_level(l))
    logger.debug(f"constructed {len(codewords)} codewords for {ch.describe()} t={t}")
    return Code(channel=ch, t=t, codewords=tuple(codewords), rank_range=r)


def code_from(ch: GradedChannel, codewords: Iterable, t: Radius, rank_range: Optional[RankRange] = None) -> Code:
    r = resolve_range(ch, rank_range)
    return Code(channel=ch, t=t, codewords=tuple(codewords), rank_range=r)
