"""Bit-shift (timing) channel: ones of a binary word can only move right.

Words of one Hamming weight w form their own poset L(n-w, w); the channel is
therefore built per weight. Moving a one to the right raises the rank.
"""
from typing import Iterator, Optional, Tuple

from channels.elements import ShiftElem, expect_kind
from counting import partitions_count
from posets.graded import GradedChannel, NaturalBounds, RankRange
from utils.errors import DomainError


def nondecreasing_sequences(total: int, length: int, low: int, high: int) -> Iterator[Tuple[int, ...]]:
    """Non-decreasing tuples of ``length`` values in [low, high] summing to ``total``."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(low, high + 1):
        rest = total - first
        if rest < first * (length - 1) or rest > high * (length - 1):
            continue
        for tail in nondecreasing_sequences(rest, length - 1, first, high):
            yield (first,) + tail


class ShiftChannel(GradedChannel):
    family = "shift"
    rank_increases = True

    def __init__(self, n: int, w: int, rank_range: Optional[RankRange] = None):
        if n < 1:
            raise DomainError(f"word length must be at least 1, got {n}")
        if not 0 <= w <= n:
            raise DomainError(f"weight must be in [0, {n}], got {w}")
        self.n = n
        self.w = w
        super().__init__(rank_range)

    def natural_range(self):
        return NaturalBounds(0, self.w * (self.n - self.w))

    def rank(self, x):
        return sum(x.offsets)

    def leq(self, y, x):
        """x ~> y iff every one of x can be shifted right onto the matching one of y."""
        self.check(x)
        self.check(y)
        return all(a <= b for a, b in zip(x.offsets, y.offsets))

    def leq_by_positions(self, y, x):
        """Same relation, decided on the unadjusted one-positions."""
        self.check(x)
        self.check(y)
        return all(a <= b for a, b in zip(x.positions(), y.positions()))

    def level_size(self, l):
        return partitions_count(self.n - self.w, self.w, l)

    def _generate_level(self, l):
        for offsets in nondecreasing_sequences(l, self.w, 0, self.n - self.w):
            yield ShiftElem(self.n, offsets)

    def check(self, x):
        expect_kind(x, ShiftElem, self.family)
        if x.width != self.n or x.weight != self.w:
            raise DomainError(f"{x!r} is not a length-{self.n} word of weight {self.w}")
        offsets = x.offsets
        if any(a > b for a, b in zip(offsets, offsets[1:])) or (
            offsets and not 0 <= offsets[0] <= offsets[-1] <= self.n - self.w
        ):
            raise DomainError(f"{x!r} has invalid adjusted positions")

    def render(self, x):
        ones = set(x.positions())
        return "".join("1" if i in ones else "0" for i in range(1, x.width + 1))

    def parse(self, text):
        text = text.strip()
        if len(text) != self.n or set(text) - {"0", "1"}:
            raise DomainError(f"{text!r} is not a binary word of length {self.n}")
        positions = [i for i, bit in enumerate(text, start=1) if bit == "1"]
        if len(positions) != self.w:
            raise DomainError(f"{text!r} does not have weight {self.w}")
        return ShiftElem(self.n, tuple(pos - i for i, pos in enumerate(positions, start=1)))

    def params(self):
        return {"n": self.n, "w": self.w, "lo": self.rank_range.lo, "hi": self.rank_range.hi}
