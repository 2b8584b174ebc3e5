"""Exact combinatorial counts for the level sets of every channel family.

All values are Python ints, so sums and products never overflow. Rows of
compositions and partitions are built by dynamic programming and memoized;
the caches only ever hold values that are pure functions of their keys.
"""
from functools import lru_cache
from typing import List, Sequence, Tuple

from utils.errors import DomainError

BigCount = int


def render_count(value: BigCount) -> str:
    """Decimal rendering used in text, JSON and TSV output."""
    if value < 0:
        raise DomainError(f"counts are non-negative, got {value}")
    return str(value)


def parse_count(text: str) -> BigCount:
    text = text.strip()
    if not (text.isascii() and text.isdigit()):
        raise DomainError(f"not a decimal count: {text!r}")
    return int(text)


def _require_natural(name, value):
    if value < 0:
        raise DomainError(f"{name} must be non-negative, got {value}")


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> BigCount:
    """C(n, k), zero outside 0 <= k <= n."""
    _require_natural("n", n)
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        # result * (n - i + 1) is always divisible by i
        result = result * (n - i + 1) // i
    return result


@lru_cache(maxsize=None)
def q_binomial(n: int, l: int, q: int) -> BigCount:
    """Gaussian coefficient: the number of l-dimensional subspaces of F_q^n."""
    if q < 2:
        raise DomainError(f"q must be at least 2, got {q}")
    _require_natural("n", n)
    if l < 0 or l > n:
        return 0
    result = 1
    for i in range(l):
        # after step i the partial product is the Gaussian coefficient (n, i+1)
        result = result * (q ** (n - i) - 1) // (q ** (i + 1) - 1)
    return result


@lru_cache(maxsize=None)
def _compositions_row(N: int, M: int) -> Tuple[BigCount, ...]:
    """Counts of vectors in {0..N}^M by coordinate sum, for sums 0..N*M."""
    row = [1]
    for _ in range(M):
        nxt = [0] * (len(row) + N)
        for weight, count in enumerate(row):
            if not count:
                continue
            for part in range(N + 1):
                nxt[weight + part] += count
        row = nxt
    return tuple(row)


def compositions_count(N: int, M: int, l: int) -> BigCount:
    """c(N, M, l): vectors in {0, ..., N}^M with coordinate sum l."""
    _require_natural("N", N)
    _require_natural("M", M)
    if l < 0 or l > N * M:
        return 0
    return _compositions_row(N, M)[l]


@lru_cache(maxsize=None)
def _partitions_row(N: int, M: int) -> Tuple[BigCount, ...]:
    """Counts of partitions into at most M parts, each <= N, for sums 0..N*M."""
    if N == 0 or M == 0:
        return (1,)
    # either fewer than M parts, or exactly M parts with one removed from each
    fewer = _partitions_row(N, M - 1)
    shrunk = _partitions_row(N - 1, M)
    row = [0] * (N * M + 1)
    for weight, count in enumerate(fewer):
        row[weight] += count
    for weight, count in enumerate(shrunk):
        row[weight + M] += count
    return tuple(row)


def partitions_count(N: int, M: int, l: int) -> BigCount:
    """p(N, M, l): partitions of l into at most M positive parts, each <= N."""
    _require_natural("N", N)
    _require_natural("M", M)
    if l < 0 or l > N * M:
        return 0
    return _partitions_row(N, M)[l]


def gaussian_polynomial(N: int, M: int) -> List[BigCount]:
    """Coefficients [p(N,M,0), ..., p(N,M,N*M)] of the Gaussian polynomial."""
    _require_natural("N", N)
    _require_natural("M", M)
    return list(_partitions_row(N, M))


def evaluate_polynomial(coefficients: Sequence[BigCount], q: int) -> BigCount:
    total = 0
    for coefficient in reversed(coefficients):
        total = total * q + coefficient
    return total


def is_unimodal(values: Sequence[int]) -> bool:
    """True if the sequence never increases again once it has decreased."""
    decreasing = False
    for prev, cur in zip(values, values[1:]):
        if cur > prev and decreasing:
            return False
        if cur < prev:
            decreasing = True
    return True


def is_symmetric(values: Sequence[int]) -> bool:
    return list(values) == list(reversed(values))
