"""Comparison-table scoring and risk classification.

Objects are ranked by comparing their degree rows pairwise across all
parameters. Count mode tallies, for each ordered pair (i, j), the number of
parameters on which object i's degree is at least object j's; difference mode
sums the degree differences instead. An object's score is its comparison-table
row sum minus its column sum; higher scores rank as higher risk.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

import numpy as np

from .softset import FuzzySoftSet, product_n
from .variables import HEALTHY_CONTROL, PATIENT

__all__ = [
    "COMPARISON_EPSILON",
    "HIGH_RISK",
    "HEALTHY",
    "ComparisonTable",
    "ScoreReport",
    "comparison_table",
    "scores",
    "classify",
    "evaluate",
    "score_pipeline",
    "report_to_csv",
    "format_report_text",
]

# Degrees come from exact piecewise-linear arithmetic, so true ties are common
# (many 1.0 cells); the epsilon keeps float ties counting as ties.
COMPARISON_EPSILON = 1e-9

HIGH_RISK = "high-risk"
HEALTHY = "healthy"

# A high-risk call is correct for a record labeled as patient.
_PREDICTION_FOR_LABEL = {PATIENT: HIGH_RISK, HEALTHY_CONTROL: HEALTHY}


@dataclass(frozen=True, eq=False)
class ComparisonTable:
    """Square pairwise-comparison matrix over an ordered universe."""

    universe: tuple[str, ...]
    counts: np.ndarray = field(repr=False)
    mode: str = "count"
    parameter_count: int = 0

    def __post_init__(self) -> None:
        n = len(self.universe)
        counts = np.ascontiguousarray(self.counts)
        if counts.shape != (n, n):
            raise ValueError(f"comparison table must be {n}x{n}, got {counts.shape}")
        if self.mode not in ("count", "difference"):
            raise ValueError(f"mode must be 'count' or 'difference', got {self.mode!r}")
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)

    def cell(self, row_id: str, col_id: str) -> float:
        i = self.universe.index(row_id)
        j = self.universe.index(col_id)
        value = self.counts[i, j]
        return int(value) if self.mode == "count" else float(value)


@dataclass(frozen=True, eq=False)
class ScoreReport:
    """Row sums, column sums, scores, and (optionally) predictions and accuracy."""

    universe: tuple[str, ...]
    row_sums: np.ndarray = field(repr=False)
    column_sums: np.ndarray = field(repr=False)
    scores: np.ndarray = field(repr=False)
    mode: str = "count"
    parameter_count: int = 0
    predictions: dict[str, str] | None = None
    accuracy: float | None = None

    def score(self, object_id: str) -> float:
        value = self.scores[self.universe.index(object_id)]
        return int(value) if self.mode == "count" else float(value)

    def triple(self, object_id: str) -> tuple:
        i = self.universe.index(object_id)
        cast = int if self.mode == "count" else float
        return (cast(self.row_sums[i]), cast(self.column_sums[i]), cast(self.scores[i]))


def comparison_table(s: FuzzySoftSet, mode: str = "count") -> ComparisonTable:
    """Pairwise comparison of all objects across all parameters.

    count mode: c[i][j] = number of parameters e with d_i(e) >= d_j(e) - eps.
    difference mode: c[i][j] = sum over e of (d_i(e) - d_j(e)).
    """
    if not s.universe or not s.parameters:
        raise ValueError("comparison_table needs a non-empty universe and parameters")
    d = s.degrees
    if mode == "count":
        counts = (d[:, None, :] >= d[None, :, :] - COMPARISON_EPSILON).sum(axis=2).astype(np.int64)
    elif mode == "difference":
        counts = (d[:, None, :] - d[None, :, :]).sum(axis=2)
    else:
        raise ValueError(f"mode must be 'count' or 'difference', got {mode!r}")
    return ComparisonTable(s.universe, counts, mode, parameter_count=len(s.parameters))


def scores(table: ComparisonTable) -> ScoreReport:
    """Row sums, column sums and scores (row minus column) of a comparison table."""
    r = table.counts.sum(axis=1)
    t = table.counts.sum(axis=0)
    return ScoreReport(
        universe=table.universe,
        row_sums=r,
        column_sums=t,
        scores=r - t,
        mode=table.mode,
        parameter_count=table.parameter_count,
    )


def classify(report: ScoreReport, threshold: float = 0.0) -> dict[str, str]:
    """Predict high-risk for every object scoring strictly above ``threshold``."""
    return {
        oid: (HIGH_RISK if report.scores[i] > threshold else HEALTHY)
        for i, oid in enumerate(report.universe)
    }


def evaluate(predictions: Mapping[str, str], labels: Mapping[str, str]) -> float:
    """Fraction of objects whose risk call matches the ground-truth class."""
    if not labels:
        raise ValueError("evaluate needs a non-empty label set")
    if set(predictions) != set(labels):
        raise ValueError(
            f"prediction/label object sets differ: {sorted(set(predictions) ^ set(labels))}"
        )
    correct = sum(
        1 for oid, label in labels.items() if predictions[oid] == _PREDICTION_FOR_LABEL.get(label)
    )
    return correct / len(labels)


def score_pipeline(
    sets: Sequence[FuzzySoftSet],
    combiner: str = "max",
    mode: str = "count",
    threshold: float = 0.0,
) -> ScoreReport:
    """Product the input sets, build the comparison table, score and classify.

    Returns the full report; ``parameter_count`` records how many product
    parameters the intermediate set had.
    """
    prod = product_n(sets, combiner)
    report = scores(comparison_table(prod, mode))
    return replace(report, predictions=classify(report, threshold))


def report_to_csv(report: ScoreReport, labels: Mapping[str, str] | None = None) -> str:
    """CSV rendering: ``object,row_sum,column_sum,score,prediction,label``."""
    fmt = (lambda v: str(int(v))) if report.mode == "count" else (lambda v: f"{float(v):.6f}")
    lines = ["object,row_sum,column_sum,score,prediction,label"]
    for i, oid in enumerate(report.universe):
        pred = report.predictions.get(oid, "") if report.predictions else ""
        label = labels.get(oid, "") if labels else ""
        lines.append(
            f"{oid},{fmt(report.row_sums[i])},{fmt(report.column_sums[i])},"
            f"{fmt(report.scores[i])},{pred},{label}"
        )
    return "\n".join(lines) + "\n"


def format_report_text(report: ScoreReport, decimals: int = 2) -> str:
    """Aligned text table of row sums, column sums, scores and predictions."""
    if report.mode == "count":
        fmt = lambda v: str(int(v))
    else:
        fmt = lambda v: f"{float(v):.{decimals}f}"
    rows = [("Sample No", "Row Sum", "Column Sum", "Score", "Prediction")]
    for i, oid in enumerate(report.universe):
        pred = report.predictions.get(oid, "") if report.predictions else ""
        rows.append(
            (oid, fmt(report.row_sums[i]), fmt(report.column_sums[i]), fmt(report.scores[i]), pred)
        )
    widths = [max(len(r[c]) for r in rows) for c in range(5)]
    lines = ["  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)).rstrip() for row in rows]
    if report.accuracy is not None:
        lines.append(f"accuracy: {report.accuracy:.2f}")
    return "\n".join(lines) + "\n"
