"""Build any channel family from CLI-style parameters."""
from dataclasses import dataclass, fields
from typing import Dict, Optional

from channels.dual import dual
from channels.multisets import MultisetChannel
from channels.sequences import DeletionChannel
from channels.shifts import ShiftChannel
from channels.subsets import SubsetChannel
from channels.subspaces import SubspaceChannel
from channels.words import ZChannel
from posets.graded import GradedChannel, RankRange
from utils.errors import DomainError

# family -> (required parameters, whether the rank range is mandatory)
FAMILIES = {
    "subset": (("n",), False),
    "multiset": (("n",), True),
    "zchannel": (("a", "n"), False),
    "subspace": (("p", "n"), False),
    "deletion": (("a",), True),
    "shift": (("n", "w"), False),
}


@dataclass
class ChannelSpecArgs:
    family: str
    n: Optional[int] = None
    a: Optional[int] = None
    p: Optional[int] = None
    w: Optional[int] = None
    lo: Optional[int] = None
    hi: Optional[int] = None
    dual: bool = False

    def validate(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown channel family '{self.family}'; choose from {', '.join(FAMILIES)}")
        required, range_required = FAMILIES[self.family]
        missing = [name for name in required if getattr(self, name) is None]
        if range_required and self.hi is None:
            missing.append("hi")
        if missing:
            raise DomainError(f"the {self.family} channel needs --{', --'.join(missing)}")
        extra = [
            name
            for name in ("n", "a", "p", "w")
            if name not in required and getattr(self, name) is not None
        ]
        if extra:
            raise DomainError(f"the {self.family} channel does not take --{', --'.join(extra)}")
        for name in ("n", "a", "p", "w", "lo", "hi"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise DomainError(f"--{name} must be non-negative, got {value}")


def _rank_range(args, natural_hi):
    if args.lo is None and args.hi is None:
        return None
    lo = args.lo if args.lo is not None else 0
    hi = args.hi if args.hi is not None else natural_hi
    if hi is None:
        raise DomainError("an explicit --hi is required for this channel")
    return RankRange(lo, hi)


def build_channel(args: ChannelSpecArgs) -> GradedChannel:
    args.validate()
    family = args.family
    if family == "subset":
        channel = SubsetChannel(args.n, _rank_range(args, args.n))
    elif family == "multiset":
        channel = MultisetChannel(args.n, _rank_range(args, None))
    elif family == "zchannel":
        channel = ZChannel(args.a, args.n, _rank_range(args, args.n * (args.a - 1)))
    elif family == "subspace":
        channel = SubspaceChannel(args.p, args.n, _rank_range(args, args.n))
    elif family == "deletion":
        channel = DeletionChannel(args.a, _rank_range(args, None))
    else:
        channel = ShiftChannel(args.n, args.w, _rank_range(args, args.w * max(args.n - args.w, 0)))
    return dual(channel) if args.dual else channel


def spec_from_params(family: str, params: Dict[str, int], is_dual: bool = False) -> ChannelSpecArgs:
    """Inverse of ``GradedChannel.params``, used when reading code files."""
    known = {f.name for f in fields(ChannelSpecArgs)} - {"family", "dual"}
    unknown = set(params) - known
    if unknown:
        raise DomainError(f"unknown channel parameters: {', '.join(sorted(unknown))}")
    return ChannelSpecArgs(family=family, dual=is_dual, **params)
