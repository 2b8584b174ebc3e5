"""The graded-channel contract shared by every channel family."""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from config import config
from counting import BigCount
from utils.errors import DomainError, ResourceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RankRange:
    """Inclusive rank interval [lo, hi] of a restricted channel."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 0:
            raise DomainError(f"rank range must start at 0 or above, got lo={self.lo}")
        if self.lo > self.hi:
            raise DomainError(f"empty rank range [{self.lo}, {self.hi}]")

    @property
    def span(self) -> int:
        return self.hi - self.lo

    def ranks(self) -> range:
        return range(self.lo, self.hi + 1)

    def contains(self, rank: int) -> bool:
        return self.lo <= rank <= self.hi

    def within(self, other: "RankRange") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class RankSelection:
    """Ranks whose level sets form a code; consecutive ranks differ by at least t+1.

    ``residue`` is set when the ranks are every rank congruent to it mod t+1
    inside the range, and None for a general selection.
    """

    residue: Optional[int]
    chosen_ranks: Tuple[int, ...]
    total: BigCount
    t: int

    def __post_init__(self):
        for prev, cur in zip(self.chosen_ranks, self.chosen_ranks[1:]):
            if cur - prev < self.t + 1:
                raise DomainError(
                    f"ranks {prev} and {cur} are closer than t+1={self.t + 1}"
                )


class GradedChannel(ABC):
    """A channel whose reachability relation is a graded partial order.

    ``leq(y, x)`` is the channel relation x ~> y: y can be received when x is
    sent. Reduction channels lower the rank along the channel action;
    ``rank_increases`` marks channels (and duals) that raise it.
    """

    family: str = ""
    rank_increases: bool = False
    is_dual: bool = False

    def __init__(self, rank_range: Optional[RankRange] = None):
        natural = self.natural_range()
        if rank_range is None:
            if natural.hi is None:
                raise DomainError(f"the {self.family} channel needs an explicit rank range")
            rank_range = RankRange(natural.lo, natural.hi)
        if rank_range.lo < natural.lo or (natural.hi is not None and rank_range.hi > natural.hi):
            raise DomainError(
                f"rank range {rank_range} outside the {self.family} channel's ranks "
                f"[{natural.lo}, {natural.hi if natural.hi is not None else 'inf'}]"
            )
        self.rank_range = rank_range

    @abstractmethod
    def natural_range(self) -> "NaturalBounds":
        """Rank bounds of the unrestricted channel (hi is None when unbounded)."""

    @abstractmethod
    def rank(self, x) -> int:
        ...

    @abstractmethod
    def leq(self, y, x) -> bool:
        """True iff x ~> y."""

    @abstractmethod
    def level_size(self, l: int) -> BigCount:
        ...

    @abstractmethod
    def _generate_level(self, l):
        """Elements of rank l in any order."""

    @abstractmethod
    def check(self, x):
        """Raise DomainError unless x is an element of the unrestricted channel."""

    @abstractmethod
    def render(self, x) -> str:
        ...

    @abstractmethod
    def parse(self, text: str):
        ...

    @abstractmethod
    def params(self) -> Dict[str, int]:
        """Family parameters in a fixed order (used by headers and reports)."""

    def validate(self, x, rank_range: Optional[RankRange] = None) -> None:
        self.check(x)
        r = rank_range or self.rank_range
        if not r.contains(self.rank(x)):
            raise DomainError(
                f"element {self.render(x)} has rank {self.rank(x)} outside {r}"
            )

    def enumerate_level(self, l: int) -> List:
        """Level l, duplicate-free and sorted by canonical encoding."""
        size = self.level_size(l)
        if size > config.enumeration_guard:
            raise ResourceError(
                f"level {l} of the {self.family} channel has {size} elements, "
                f"above the enumeration guard of {config.enumeration_guard}",
                size=size,
            )
        if size == 0:
            return []
        level = sorted(self._generate_level(l), key=self.render)
        logger.debug(f"enumerated level {l} of {self.describe()}: {len(level)} elements")
        return level

    def level_sizes(self, rank_range: Optional[RankRange] = None) -> Dict[int, BigCount]:
        r = rank_range or self.rank_range
        return {l: self.level_size(l) for l in r.ranks()}

    def element_count(self, rank_range: Optional[RankRange] = None) -> BigCount:
        return sum(self.level_sizes(rank_range).values())

    def elements(self, rank_range: Optional[RankRange] = None) -> List:
        """All elements of the range in canonical (rank, encoding) order."""
        r = rank_range or self.rank_range
        result = []
        for l in r.ranks():
            result.extend(self.enumerate_level(l))
        return result

    def sort_key(self, x) -> Tuple[int, str]:
        return (self.rank(x), self.render(x))

    def describe(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in self.params().items())
        suffix = " (dual)" if self.is_dual else ""
        return f"{self.family}[{params}]{suffix}"

    def __repr__(self):
        return f"<{type(self).__name__} {self.describe()}>"


@dataclass(frozen=True)
class NaturalBounds:
    lo: int
    hi: Optional[int]


def precedes(ch: GradedChannel, lower, upper) -> bool:
    """The graded order, rank increasing upward, whatever the action direction."""
    if ch.rank_increases:
        return ch.leq(upper, lower)
    return ch.leq(lower, upper)


def resolve_range(ch: GradedChannel, rank_range: Optional[RankRange]) -> RankRange:
    """Default to the channel's own range; reject ranges outside it."""
    if rank_range is None:
        return ch.rank_range
    if not rank_range.within(ch.rank_range):
        raise DomainError(f"rank range {rank_range} outside {ch.describe()} range {ch.rank_range}")
    return rank_range
