"""Subspace channel over F_p: a transmitted space can lose dimensions.

Subspaces are identified with their reduced row echelon basis, which is unique,
so two spaces are equal exactly when their encodings are.
"""
from itertools import combinations, product
from typing import Optional, Sequence, Tuple

import numpy as np
from sympy import isprime

from channels.elements import EMPTY, SYMBOLS, SubspaceElem, expect_kind, parse_symbols, render_symbols
from counting import q_binomial
from posets.graded import GradedChannel, NaturalBounds, RankRange
from utils.errors import DomainError

Rows = Tuple[Tuple[int, ...], ...]


def row_reduce(vectors: Sequence[Sequence[int]], p: int, width: int) -> Rows:
    """Reduced row echelon basis of the span of ``vectors`` over F_p."""
    if len(vectors) == 0:
        return ()
    m = np.array(vectors, dtype=np.int64).reshape(len(vectors), width) % p
    rows = m.shape[0]
    pivot_row = 0
    for col in range(width):
        nonzero = np.nonzero(m[pivot_row:, col])[0]
        if len(nonzero) == 0:
            continue
        r = pivot_row + int(nonzero[0])
        if r != pivot_row:
            m[[pivot_row, r]] = m[[r, pivot_row]]
        inverse = pow(int(m[pivot_row, col]), -1, p)
        m[pivot_row] = (m[pivot_row] * inverse) % p
        for other in range(rows):
            if other != pivot_row and m[other, col]:
                m[other] = (m[other] - m[other, col] * m[pivot_row]) % p
        pivot_row += 1
        if pivot_row == rows:
            break
    return tuple(tuple(int(v) for v in row) for row in m[:pivot_row])


def pivots(rows: Rows) -> Tuple[int, ...]:
    return tuple(next(j for j, v in enumerate(row) if v) for row in rows)


def in_row_space(vector: Sequence[int], rows: Rows, p: int) -> bool:
    """Membership test against an RREF basis: v = sum of v[pivot_i] * row_i."""
    v = np.array(vector, dtype=np.int64) % p
    if not rows:
        return not v.any()
    basis = np.array(rows, dtype=np.int64)
    coefficients = v[list(pivots(rows))]
    return bool(np.array_equal((coefficients @ basis) % p, v))


class SubspaceChannel(GradedChannel):
    family = "subspace"

    def __init__(self, p: int, n: int, rank_range: Optional[RankRange] = None):
        if not isprime(p):
            raise DomainError(f"field size must be prime, got {p}")
        if p > len(SYMBOLS):
            raise DomainError(f"field size must be at most {len(SYMBOLS)}, got {p}")
        if n < 1:
            raise DomainError(f"ambient dimension must be at least 1, got {n}")
        self.p = p
        self.n = n
        super().__init__(rank_range)

    def natural_range(self):
        return NaturalBounds(0, self.n)

    def rank(self, x):
        return len(x.rows)

    def leq(self, y, x):
        """x ~> y iff y is a subspace of x."""
        for elem in (x, y):
            expect_kind(elem, SubspaceElem, self.family)
            if elem.width != self.n:
                raise DomainError(f"{elem!r} is not a subspace of F_{self.p}^{self.n}")
        if len(y.rows) > len(x.rows):
            return False
        return all(in_row_space(row, x.rows, self.p) for row in y.rows)

    def level_size(self, l):
        return q_binomial(self.n, l, self.p)

    def _generate_level(self, l):
        for pivot_cols in combinations(range(self.n), l):
            free = [
                (i, j)
                for i, pivot in enumerate(pivot_cols)
                for j in range(pivot + 1, self.n)
                if j not in pivot_cols
            ]
            for values in product(range(self.p), repeat=len(free)):
                rows = [[0] * self.n for _ in pivot_cols]
                for i, pivot in enumerate(pivot_cols):
                    rows[i][pivot] = 1
                for (i, j), value in zip(free, values):
                    rows[i][j] = value
                yield SubspaceElem(self.n, tuple(tuple(row) for row in rows))

    def check(self, x):
        expect_kind(x, SubspaceElem, self.family)
        if x.width != self.n or any(len(row) != self.n for row in x.rows):
            raise DomainError(f"{x!r} is not a subspace of F_{self.p}^{self.n}")
        if any(not 0 <= v < self.p for row in x.rows for v in row):
            raise DomainError(f"{x!r} has entries outside F_{self.p}")
        if row_reduce(x.rows, self.p, self.n) != x.rows:
            raise DomainError(f"{self.render(x)} is not a reduced row echelon basis")

    def span(self, vectors: Sequence[Sequence[int]]) -> SubspaceElem:
        """The subspace spanned by arbitrary vectors, in canonical form."""
        for v in vectors:
            if len(v) != self.n:
                raise DomainError(f"vector {tuple(v)} does not have length {self.n}")
        return SubspaceElem(self.n, row_reduce(vectors, self.p, self.n))

    def render(self, x):
        if not x.rows:
            return EMPTY
        return ";".join(render_symbols(row) for row in x.rows)

    def parse(self, text):
        text = text.strip()
        if text == EMPTY:
            return SubspaceElem(self.n, ())
        rows = tuple(parse_symbols(row, self.p) for row in text.split(";"))
        elem = SubspaceElem(self.n, rows)
        self.check(elem)
        return elem

    def params(self):
        return {"p": self.p, "n": self.n, "lo": self.rank_range.lo, "hi": self.rank_range.hi}
