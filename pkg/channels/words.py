"""Generalized Z-channel: each symbol of a word can only decrease."""
from typing import Optional

from channels.elements import SYMBOLS, WordElem, expect_kind, parse_symbols, render_symbols
from channels.multisets import bounded_compositions
from counting import compositions_count
from posets.graded import GradedChannel, NaturalBounds, RankRange
from utils.errors import DomainError


class ZChannel(GradedChannel):
    family = "zchannel"

    def __init__(self, a: int, n: int, rank_range: Optional[RankRange] = None):
        if not 2 <= a <= len(SYMBOLS):
            raise DomainError(f"alphabet size must be in [2, {len(SYMBOLS)}], got {a}")
        if n < 1:
            raise DomainError(f"word length must be at least 1, got {n}")
        self.a = a
        self.n = n
        super().__init__(rank_range)

    def natural_range(self):
        return NaturalBounds(0, self.n * (self.a - 1))

    def rank(self, x):
        return sum(x.symbols)

    def leq(self, y, x):
        """x ~> y iff y_i <= x_i for every position i."""
        self.check(x)
        self.check(y)
        return all(b <= a for a, b in zip(x.symbols, y.symbols))

    def level_size(self, l):
        return compositions_count(self.a - 1, self.n, l)

    def _generate_level(self, l):
        for vector in bounded_compositions(l, self.n, self.a - 1):
            yield WordElem(vector)

    def check(self, x):
        expect_kind(x, WordElem, self.family)
        if len(x.symbols) != self.n or any(not 0 <= s < self.a for s in x.symbols):
            raise DomainError(f"{x!r} is not a word in {{0..{self.a - 1}}}^{self.n}")

    def render(self, x):
        return render_symbols(x.symbols)

    def parse(self, text):
        text = text.strip()
        if len(text) != self.n:
            raise DomainError(f"{text!r} does not have length {self.n}")
        return WordElem(parse_symbols(text, self.a))

    def params(self):
        return {"a": self.a, "n": self.n, "lo": self.rank_range.lo, "hi": self.rank_range.hi}
