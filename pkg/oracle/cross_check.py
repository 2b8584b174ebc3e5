"""Compare the counting formulas with the brute-force optimum on small channels."""
import logging
from dataclasses import dataclass
from typing import Optional

from codes import optimal_code_size
from oracle.brute_force import brute_force_optimal
from posets import GradedChannel, RankRange, resolve_range

logger = logging.getLogger(__name__)


@dataclass
class CrossValidation:
    formula: Optional[int]
    dp: int
    residue: int
    oracle: int
    passed: bool
    bound_only: bool
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "formula": None if self.formula is None else str(self.formula),
            "dp": str(self.dp),
            "residue": str(self.residue),
            "oracle": str(self.oracle),
            "passed": self.passed,
            "bound_only": self.bound_only,
            "note": self.note,
        }


def cross_validate(
    ch: GradedChannel,
    rank_range: Optional[RankRange] = None,
    t=0,
    guard: Optional[int] = None,
) -> CrossValidation:
    """Closed form, rank selection and oracle must agree, except where the
    closed form is only a lower bound; there it may not exceed the oracle."""
    r = resolve_range(ch, rank_range)
    report = optimal_code_size(ch, r, t)
    result = brute_force_optimal(ch, r, t, guard=guard)
    formula = report.closed_form_total

    if report.bound_only:
        passed = (formula is None or formula <= result.optimum) and report.generic_total <= result.optimum
        note = "lower bound"
        if report.generic_total < result.optimum:
            note = f"rank selection {report.generic_total} is below the optimum {result.optimum}"
            logger.warning(f"{ch.describe()} {r} t={t}: {note}")
    else:
        values = {report.generic_total, result.optimum}
        if formula is not None:
            values.add(formula)
        passed = len(values) == 1
        note = "" if passed else f"disagreement: formula={formula} dp={report.generic_total} oracle={result.optimum}"
        if not passed:
            logger.error(f"{ch.describe()} {r} t={t}: {note}")

    logger.info(f"cross-validated {ch.describe()} {r} t={t}: {'ok' if passed else 'FAILED'}")
    return CrossValidation(
        formula=formula,
        dp=report.generic_total,
        residue=report.residue_total,
        oracle=result.optimum,
        passed=passed,
        bound_only=report.bound_only,
        note=note,
    )
