"""Check that a code detects up to t errors (or all error patterns)."""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from codes.optimal import ALL, Code, Radius
from posets import violating_pairs
from utils.errors import DomainError


@dataclass
class VerifyReport:
    passed: bool
    t: Radius
    checked: int
    violations: List[Tuple[object, object]] = field(default_factory=list)


def verify_code(code: Code, t: Optional[Radius] = None) -> VerifyReport:
    """Pairs (x, y) of codewords with x ~> y that t errors could confuse.

    In "all" mode every related pair is a violation, i.e. the code must be an
    antichain.
    """
    ch = code.channel
    radius = code.t if t is None else t
    if radius == ALL:
        bound = None
    elif isinstance(radius, int) and not isinstance(radius, bool) and radius >= 0:
        bound = radius
    else:
        raise DomainError(f"t must be a non-negative integer or '{ALL}', got {radius!r}")
    pairs = violating_pairs(ch, code.codewords, bound, code.rank_range)
    return VerifyReport(passed=not pairs, t=radius, checked=len(set(code.codewords)), violations=pairs)
