"""Result serialization and report rendering.

``outcome_to_document`` is the one source of the machine-readable result
payload; the CLI's ``structured`` format and every HTTP endpoint emit exactly
these bytes, so the two surfaces can be diffed directly.

Human-facing rendering goes through :class:`ReportDocument`, an ordered list
of titled tables whose cells keep full precision alongside display-rounding
metadata (2 decimals for FFN components, 4 for utilities).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Sequence

from .errors import ShapeError
from .ffn import FFN
from .marcos import FFMatrix, MarcosResult
from .pipeline import EvaluationOutcome
from .robustness import (
    AlphaSweepRow,
    EntropyComparison,
    PerturbationRow,
)

FFN_DIGITS = 2
UTILITY_DIGITS = 4
WEIGHT_DIGITS = 4


@dataclass(frozen=True)
class Cell:
    """One table cell: the exact value plus how to round it for display."""

    value: Any
    digits: int | None = None

    def display(self) -> str:
        if self.digits is None or not isinstance(self.value, float):
            return str(self.value)
        return f"{self.value:.{self.digits}f}"


@dataclass(frozen=True)
class Section:
    title: str
    headers: tuple[str, ...]
    rows: tuple[tuple[Cell, ...], ...]


@dataclass(frozen=True)
class ReportDocument:
    sections: tuple[Section, ...]


def _ffn_cell(f: FFN) -> Cell:
    return Cell(f"({f.mu:.{FFN_DIGITS}f}, {f.nu:.{FFN_DIGITS}f})")


def _matrix_section(title: str, matrix: FFMatrix) -> Section:
    headers = ("",) + matrix.col_ids
    rows = tuple(
        (Cell(rid),) + tuple(_ffn_cell(c) for c in row)
        for rid, row in zip(matrix.row_ids, matrix.cells)
    )
    return Section(title, headers, rows)


def build_report(outcome: EvaluationOutcome) -> ReportDocument:
    """Assemble the standard evaluation report."""
    crit_ids = outcome.aggregated.col_ids
    weights_rows = tuple(
        (
            Cell(cid),
            Cell(outcome.entropies.values[j], WEIGHT_DIGITS),
            Cell(outcome.weights.objective[j], WEIGHT_DIGITS),
            Cell(outcome.weights.subjective[j], WEIGHT_DIGITS),
            Cell(outcome.weights.integrated[j], WEIGHT_DIGITS),
        )
        for j, cid in enumerate(crit_ids)
    )
    scores_headers = ("",) + crit_ids
    scores_rows = tuple(
        (Cell(rid),) + tuple(Cell(c.normalized_score, FFN_DIGITS) for c in row)
        for rid, row in zip(outcome.weighted.row_ids, outcome.weighted.cells)
    )
    result = outcome.result
    utility_rows = tuple(
        (
            Cell(aid),
            Cell(result.s[i], UTILITY_DIGITS),
            Cell(result.u_minus[i], UTILITY_DIGITS),
            Cell(result.u_plus[i], UTILITY_DIGITS),
            Cell(result.f_u[i], UTILITY_DIGITS),
            Cell(result.rank_of(aid)),
        )
        for i, aid in enumerate(result.alternatives)
    )
    ranking_rows = tuple(
        (Cell(pos + 1), Cell(aid), Cell(result.f_u[result.alternatives.index(aid)], UTILITY_DIGITS))
        for pos, aid in enumerate(result.order)
    )
    return ReportDocument(
        sections=(
            Section(
                "Criterion weights",
                ("criterion", "entropy", "objective", "subjective", "integrated"),
                weights_rows,
            ),
            _matrix_section("Aggregated decision matrix", outcome.aggregated),
            _matrix_section("Normalized decision matrix", outcome.normalized),
            _matrix_section("Weighted normalized matrix", outcome.weighted),
            Section("Score values", scores_headers, scores_rows),
            Section(
                "Utilities",
                ("alternative", "S", "U-", "U+", "f(U)", "rank"),
                utility_rows,
            ),
            Section("Ranking", ("rank", "alternative", "f(U)"), ranking_rows),
        )
    )


# ---------------------------------------------------------------------------
# Renderers
# ---------------------------------------------------------------------------


def render_table(report: ReportDocument) -> bytes:
    """Fixed-width plain-text tables."""
    lines: list[str] = []
    for section in report.sections:
        lines.append(section.title)
        lines.append("-" * len(section.title))
        grid = [list(section.headers)] + [
            [cell.display() for cell in row] for row in section.rows
        ]
        widths = [max(len(r[j]) for r in grid) for j in range(len(section.headers))]
        for r in grid:
            lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
        lines.append("")
    return "\n".join(lines).encode("utf-8")


def render_section_csv(section: Section) -> bytes:
    """One section as CSV: header row, then one row per entry."""
    out = [",".join(section.headers)]
    for row in section.rows:
        out.append(",".join(_csv_field(cell.display()) for cell in row))
    return ("\n".join(out) + "\n").encode("utf-8")


def _csv_field(value: str) -> str:
    if "," in value or '"' in value or "\n" in value:
        return '"' + value.replace('"', '""') + '"'
    return value


def render_csv(report: ReportDocument) -> bytes:
    """All sections as CSV blocks, each preceded by a `# title` comment line."""
    blocks = []
    for section in report.sections:
        blocks.append(f"# {section.title}\n".encode("utf-8") + render_section_csv(section))
    return b"\n".join(blocks)


# ---------------------------------------------------------------------------
# Structured (machine-readable) payloads
# ---------------------------------------------------------------------------


def _matrix_payload(matrix: FFMatrix) -> dict[str, Any]:
    return {
        "rows": list(matrix.row_ids),
        "columns": list(matrix.col_ids),
        "orientations": list(matrix.orientations),
        "cells": [[[c.mu, c.nu] for c in row] for row in matrix.cells],
    }


def _marcos_payload(result: MarcosResult) -> dict[str, Any]:
    return {
        "alternatives": list(result.alternatives),
        "s": list(result.s),
        "s_pis": result.s_pis,
        "s_nis": result.s_nis,
        "u_minus": list(result.u_minus),
        "u_plus": list(result.u_plus),
        "f_u": list(result.f_u),
        "order": list(result.order),
        "ranks": [result.rank_of(a) for a in result.alternatives],
    }


def weights_payload(outcome: EvaluationOutcome) -> dict[str, Any]:
    return {
        "criteria": list(outcome.aggregated.col_ids),
        "expert": {
            "ids": [e[0] for e in outcome.panel.experts],
            "grades": [e[1] for e in outcome.panel.experts],
            "weights": list(outcome.panel.weights),
        },
        "entropies": {
            "model": outcome.entropies.model,
            "reduction": outcome.entropies.reduction,
            "values": list(outcome.entropies.values),
        },
        "piprecia": {
            "crisp": list(outcome.trace.crisp),
            "s": list(outcome.trace.s),
            "kappa": list(outcome.trace.kappa),
            "q": list(outcome.trace.q),
        },
        "objective": list(outcome.weights.objective),
        "subjective": list(outcome.weights.subjective),
        "alpha": outcome.weights.alpha,
        "integrated": list(outcome.weights.integrated),
    }


def outcome_to_document(outcome: EvaluationOutcome, include_intermediate: bool = False) -> dict[str, Any]:
    """Machine-readable evaluation result; shared by CLI and HTTP service."""
    doc: dict[str, Any] = {
        "schema_version": 1,
        "title": outcome.problem.title,
        "weights": weights_payload(outcome),
        "marcos": _marcos_payload(outcome.result),
    }
    if include_intermediate:
        doc["intermediate"] = {
            "aggregated": _matrix_payload(outcome.aggregated),
            "normalized": _matrix_payload(outcome.normalized),
            "weighted": _matrix_payload(outcome.weighted),
            "pis": [[f.mu, f.nu] for f in outcome.pis],
            "nis": [[f.mu, f.nu] for f in outcome.nis],
            "scores": [
                [c.normalized_score for c in row] for row in outcome.weighted.cells
            ],
        }
    return doc


def sweep_to_document(rows: Sequence[AlphaSweepRow], alternatives: Sequence[str]) -> dict[str, Any]:
    return {
        "schema_version": 1,
        "alternatives": list(alternatives),
        "alpha_grid": [row.alpha for row in rows],
        "results": [
            {"alpha": row.alpha, "f_u": list(row.f_u), "order": list(row.order)} for row in rows
        ],
    }


def perturbation_to_document(
    rows: Sequence[PerturbationRow], base_order: Sequence[str], delta: float
) -> dict[str, Any]:
    return {
        "schema_version": 1,
        "delta": delta,
        "base_order": list(base_order),
        "scenarios": [
            {
                "criterion": row.criterion,
                "direction": row.direction,
                "weights": list(row.weights),
                "order": list(row.order),
                "tau": row.tau,
            }
            for row in rows
        ],
    }


def comparison_to_document(comparison: EntropyComparison) -> dict[str, Any]:
    models = list(comparison.orders)
    return {
        "schema_version": 1,
        "models": {
            m: {
                "order": list(comparison.orders[m]),
                "objective": list(comparison.objective[m]),
                "integrated": list(comparison.integrated[m]),
            }
            for m in models
        },
        "tau_matrix": {m1: dict(comparison.tau_matrix[m1]) for m1 in models},
    }


def dominance_to_document(dominance_map: dict[str, tuple[float, ...]], criteria: Sequence[str]) -> dict[str, Any]:
    return {
        "schema_version": 1,
        "criteria": list(criteria),
        "dominance": {m: list(v) for m, v in dominance_map.items()},
    }


def render_structured(doc: dict[str, Any]) -> bytes:
    """Canonical JSON bytes: 2-space indent, insertion key order, UTF-8."""
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def render_report(outcome: EvaluationOutcome, format: str = "table") -> bytes:
    """One evaluation as deterministic report bytes in the chosen format."""
    if format in ("table", "plain-table"):
        return render_table(build_report(outcome))
    if format == "csv":
        return render_csv(build_report(outcome))
    if format == "structured":
        return render_structured(outcome_to_document(outcome, include_intermediate=True))
    raise ShapeError(f"unknown report format {format!r}")
