"""Canonical element kinds, one per channel family.

Every kind is an immutable, hashable value; equal mathematical objects have
equal fields, so they can key dictionaries and graph nodes directly.
"""
from dataclasses import dataclass
from typing import ClassVar, Tuple, Union

from utils.errors import DomainError

SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"
EMPTY = "-"


def render_symbols(values) -> str:
    return "".join(SYMBOLS[v] for v in values)


def parse_symbols(text: str, alphabet_size: int) -> Tuple[int, ...]:
    values = []
    for ch in text:
        value = SYMBOLS.find(ch)
        if value < 0 or value >= alphabet_size:
            raise DomainError(f"symbol {ch!r} is not in the alphabet of size {alphabet_size}")
        values.append(value)
    return tuple(values)


@dataclass(frozen=True)
class SubsetElem:
    """Subset of {1..width}; bit i of ``mask`` is set iff i+1 is a member."""

    kind: ClassVar[str] = "subset"
    width: int
    mask: int


@dataclass(frozen=True)
class MultisetElem:
    kind: ClassVar[str] = "multiset"
    multiplicities: Tuple[int, ...]


@dataclass(frozen=True)
class WordElem:
    """Fixed-length word over {0..a-1}."""

    kind: ClassVar[str] = "zchannel"
    symbols: Tuple[int, ...]


@dataclass(frozen=True)
class SeqElem:
    """Variable-length word over {0..a-1}; the empty tuple is the empty word."""

    kind: ClassVar[str] = "deletion"
    symbols: Tuple[int, ...]


@dataclass(frozen=True)
class SubspaceElem:
    """Subspace of F_p^width held as its reduced row echelon basis."""

    kind: ClassVar[str] = "subspace"
    width: int
    rows: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class ShiftElem:
    """Binary word of length ``width`` stored by its adjusted one-positions.

    ``offsets[i]`` is the (i+1)-th one's position minus (i+1), so offsets are
    non-decreasing and lie in [0, width - weight].
    """

    kind: ClassVar[str] = "shift"
    width: int
    offsets: Tuple[int, ...]

    @property
    def weight(self) -> int:
        return len(self.offsets)

    def positions(self) -> Tuple[int, ...]:
        """1-based positions of the ones."""
        return tuple(o + i + 1 for i, o in enumerate(self.offsets))


Element = Union[SubsetElem, MultisetElem, WordElem, SeqElem, SubspaceElem, ShiftElem]


def expect_kind(x, cls, family: str):
    if not isinstance(x, cls):
        raise DomainError(f"{x!r} is not an element of the {family} channel")
