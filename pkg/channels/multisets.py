"""Multiset channel: symbols of a multiset can be deleted, never inserted."""
from typing import Iterator, Optional, Tuple

from channels.elements import MultisetElem, expect_kind
from counting import binomial
from posets.graded import GradedChannel, NaturalBounds, RankRange
from utils.errors import DomainError


def bounded_compositions(total: int, parts: int, bound: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Vectors of ``parts`` entries in [0, bound] summing to ``total``, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    top = total if bound is None else min(bound, total)
    for first in range(top + 1):
        rest = total - first
        if bound is not None and rest > bound * (parts - 1):
            continue
        for tail in bounded_compositions(rest, parts - 1, bound):
            yield (first,) + tail


class MultisetChannel(GradedChannel):
    family = "multiset"

    def __init__(self, n: int, rank_range: RankRange):
        if n < 1:
            raise DomainError(f"multiset channel needs n >= 1, got {n}")
        self.n = n
        super().__init__(rank_range)

    def natural_range(self):
        return NaturalBounds(0, None)

    def rank(self, x):
        return sum(x.multiplicities)

    def leq(self, y, x):
        """x ~> y iff every multiplicity of y is at most that of x."""
        self.check(x)
        self.check(y)
        return all(b <= a for a, b in zip(x.multiplicities, y.multiplicities))

    def level_size(self, l):
        if l < 0:
            return 0
        return binomial(l + self.n - 1, self.n - 1)

    def _generate_level(self, l):
        for vector in bounded_compositions(l, self.n):
            yield MultisetElem(vector)

    def check(self, x):
        expect_kind(x, MultisetElem, self.family)
        if len(x.multiplicities) != self.n or any(m < 0 for m in x.multiplicities):
            raise DomainError(f"{x!r} is not a multiplicity vector of length {self.n}")

    def render(self, x):
        return ",".join(str(m) for m in x.multiplicities)

    def parse(self, text):
        fields = text.strip().split(",")
        if len(fields) != self.n or not all(f.isascii() and f.isdigit() for f in fields):
            raise DomainError(f"{text!r} is not {self.n} comma-separated multiplicities")
        return MultisetElem(tuple(int(f) for f in fields))

    def params(self):
        return {"n": self.n, "lo": self.rank_range.lo, "hi": self.rank_range.hi}
