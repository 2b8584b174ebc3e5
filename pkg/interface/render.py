"""Text, JSON and TSV renderings of reports. Output is deterministic."""
import json
from typing import Iterable, List, Optional, Sequence

from codes import SizeReport, VerifyReport
from counting import render_count
from oracle import OracleResult
from posets import GradedChannel
from storage.code_files import render_params, render_t

TABLE_HEADER = ("t", "generic", "closed_form", "oracle")


def _json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=False)


def render_size(report: SizeReport, fmt: str = "text") -> str:
    if fmt == "json":
        return _json(report.to_dict())
    closed = "-" if report.closed_form_total is None else render_count(report.closed_form_total)
    lines = [
        f"family: {report.family}",
        f"params: {render_params(report.params)}",
        f"t: {render_t(report.t)}",
        f"size: {render_count(report.generic_total)}",
        f"closed_form: {closed}",
        f"residue: {'-' if report.residue is None else report.residue}",
        f"ranks: {','.join(str(l) for l in report.ranks)}",
        f"bound_only: {str(report.bound_only).lower()}",
    ]
    if report.bound_only:
        lines.append("note: closed form is a lower bound for this channel")
    middle = report.middle_residue_total
    if middle is not None and middle < report.generic_total:
        lines.append(f"note: the middle residue gives only {render_count(middle)}")
    return "\n".join(lines)


def render_verify(report: VerifyReport, ch: GradedChannel, fmt: str = "text") -> str:
    pairs = [(ch.render(x), ch.render(y)) for x, y in report.violations]
    if fmt == "json":
        return _json({
            "passed": report.passed,
            "t": report.t,
            "checked": report.checked,
            "violations": [list(pair) for pair in pairs],
        })
    if report.passed:
        return "PASS"
    lines = [f"FAIL: {len(pairs)} violating pair(s)"]
    lines.extend(f"{x} ~> {y}" for x, y in pairs)
    return "\n".join(lines)


def render_oracle(result: OracleResult, ch: GradedChannel, fmt: str = "text") -> str:
    witness = [ch.render(x) for x in result.witness]
    if fmt == "json":
        return _json({
            "optimum": str(result.optimum),
            "t": result.t,
            "witness_size": len(witness),
            "explored_nodes": result.explored_nodes,
            "witness": witness,
        })
    lines = [
        f"optimum: {result.optimum}",
        f"witness_size: {len(witness)}",
        f"explored_nodes: {result.explored_nodes}",
    ]
    lines.extend(witness)
    return "\n".join(lines)


def render_table(rows: Iterable[Sequence[Optional[int]]], fmt: str = "text") -> str:
    """Rows are (t, generic, closed_form, oracle); missing values render as '-'."""
    rows = list(rows)
    if fmt == "json":
        return _json([
            {key: (None if v is None else str(v)) for key, v in zip(TABLE_HEADER, row)}
            for row in rows
        ])
    lines: List[str] = ["\t".join(TABLE_HEADER)]
    for row in rows:
        lines.append("\t".join("-" if v is None else str(v) for v in row))
    return "\n".join(lines)
