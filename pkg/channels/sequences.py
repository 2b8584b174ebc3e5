"""Deletion channel: symbols of a word can be dropped, shortening it."""
from itertools import product
from typing import List, Sequence

from channels.elements import EMPTY, SYMBOLS, SeqElem, expect_kind, parse_symbols, render_symbols
from posets.graded import GradedChannel, NaturalBounds, RankRange
from utils.errors import DomainError


def is_subsequence(short: Sequence[int], long: Sequence[int]) -> bool:
    """Greedy left-to-right embedding of ``short`` into ``long``."""
    it = iter(long)
    return all(any(s == c for c in it) for s in short)


class DeletionChannel(GradedChannel):
    family = "deletion"

    def __init__(self, a: int, rank_range: RankRange):
        if not 2 <= a <= len(SYMBOLS):
            raise DomainError(f"alphabet size must be in [2, {len(SYMBOLS)}], got {a}")
        self.a = a
        super().__init__(rank_range)

    def natural_range(self):
        return NaturalBounds(0, None)

    def rank(self, x):
        return len(x.symbols)

    def leq(self, y, x):
        """x ~> y iff y is a subsequence of x."""
        self.check(x)
        self.check(y)
        return len(y.symbols) <= len(x.symbols) and is_subsequence(y.symbols, x.symbols)

    def level_size(self, l):
        return self.a ** l if l >= 0 else 0

    def _generate_level(self, l):
        for word in product(range(self.a), repeat=l):
            yield SeqElem(word)

    def check(self, x):
        expect_kind(x, SeqElem, self.family)
        if any(not 0 <= s < self.a for s in x.symbols):
            raise DomainError(f"{x!r} is not a word over {{0..{self.a - 1}}}")

    def render(self, x):
        return render_symbols(x.symbols) if x.symbols else EMPTY

    def parse(self, text):
        text = text.strip()
        if text == EMPTY:
            return SeqElem(())
        return SeqElem(parse_symbols(text, self.a))

    def prefix_chains(self) -> List[List[SeqElem]]:
        """The a^hi maximal chains x[:lo] < ... < x[:hi], one per word x of length hi.

        Every word of rank l lies on exactly a^(hi-l) of them.
        """
        lo, hi = self.rank_range.lo, self.rank_range.hi
        chains = []
        for word in product(range(self.a), repeat=hi):
            chains.append([SeqElem(word[:l]) for l in range(lo, hi + 1)])
        return chains

    def params(self):
        return {"a": self.a, "lo": self.rank_range.lo, "hi": self.rank_range.hi}
