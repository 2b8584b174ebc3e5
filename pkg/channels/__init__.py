from channels.dual import DualChannel, dual
from channels.elements import (
    Element,
    MultisetElem,
    SeqElem,
    ShiftElem,
    SubsetElem,
    SubspaceElem,
    WordElem,
)
from channels.multisets import MultisetChannel
from channels.registry import FAMILIES, ChannelSpecArgs, build_channel, spec_from_params
from channels.sequences import DeletionChannel, is_subsequence
from channels.shifts import ShiftChannel
from channels.subsets import SubsetChannel
from channels.subspaces import SubspaceChannel, row_reduce
from channels.words import ZChannel


def channel_leq(ch, y, x) -> bool:
    """True iff x ~> y in ch."""
    return ch.leq(y, x)


def channel_level_size(ch, l: int) -> int:
    return ch.level_size(l)


def channel_enumerate_level(ch, l: int):
    return ch.enumerate_level(l)


__all__ = [
    "FAMILIES",
    "ChannelSpecArgs",
    "DeletionChannel",
    "DualChannel",
    "Element",
    "MultisetChannel",
    "MultisetElem",
    "SeqElem",
    "ShiftChannel",
    "ShiftElem",
    "SubsetChannel",
    "SubsetElem",
    "SubspaceChannel",
    "SubspaceElem",
    "WordElem",
    "ZChannel",
    "build_channel",
    "channel_enumerate_level",
    "channel_leq",
    "channel_level_size",
    "dual",
    "is_subsequence",
    "row_reduce",
    "spec_from_params",
]
