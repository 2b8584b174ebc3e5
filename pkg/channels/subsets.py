"""Power-set channel: packets of a transmitted set can be lost, never added."""
from itertools import combinations
from typing import Optional

from channels.elements import SubsetElem, expect_kind
from counting import binomial
from posets.graded import GradedChannel, NaturalBounds, RankRange
from utils.errors import DomainError


class SubsetChannel(GradedChannel):
    family = "subset"

    def __init__(self, n: int, rank_range: Optional[RankRange] = None):
        if n < 1:
            raise DomainError(f"subset channel needs n >= 1, got {n}")
        self.n = n
        super().__init__(rank_range)

    def natural_range(self):
        return NaturalBounds(0, self.n)

    def rank(self, x):
        return x.mask.bit_count()

    def leq(self, y, x):
        """x ~> y iff y is a subset of x."""
        self.check(x)
        self.check(y)
        return y.mask & ~x.mask == 0

    def level_size(self, l):
        return binomial(self.n, l)

    def _generate_level(self, l):
        for members in combinations(range(self.n), l):
            yield SubsetElem(self.n, sum(1 << i for i in members))

    def check(self, x):
        expect_kind(x, SubsetElem, self.family)
        if x.width != self.n or not 0 <= x.mask < 1 << self.n:
            raise DomainError(f"{x!r} is not a subset of {{1..{self.n}}}")

    def render(self, x):
        return "".join("1" if x.mask >> i & 1 else "0" for i in range(x.width))

    def parse(self, text):
        text = text.strip()
        if len(text) != self.n or set(text) - {"0", "1"}:
            raise DomainError(f"{text!r} is not a {self.n}-bit subset indicator")
        return SubsetElem(self.n, sum(1 << i for i, bit in enumerate(text) if bit == "1"))

    def from_members(self, members) -> SubsetElem:
        """Build an element from 1-based members, e.g. {1, 2, 5}."""
        mask = 0
        for m in members:
            if not 1 <= m <= self.n:
                raise DomainError(f"{m} is not in {{1..{self.n}}}")
            mask |= 1 << (m - 1)
        return SubsetElem(self.n, mask)

    def params(self):
        return {"n": self.n, "lo": self.rank_range.lo, "hi": self.rank_range.hi}
