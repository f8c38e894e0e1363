"""Verification of computed results against the published reference tables.

Each check recomputes one stage from the variable definitions and compares it
with the corresponding published table. Checks are "hard" when the published
table should be reproducible (up to its known misprints, which must then show
up in the errata and nowhere else) and "soft" where the study is internally
inconsistent and only a match rate can be reported.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import fixtures
from .ingest import builtin_table1
from .scoring import HIGH_RISK, classify, comparison_table, evaluate, scores
from .softset import FuzzySoftSet, product
from .variables import default_variable_specs, errata_report, fuzzify_cohort

__all__ = ["CellDelta", "CheckResult", "VerificationReport", "verify_fixtures"]

TOLERANCE = 0.01

# Divergence bars for the per-variable tables: (cells in table, minimum cells
# that must match the published values within TOLERANCE).
_TABLE_BARS = {"AGE": (40, 40), "ADP": (30, 30), "INS": (30, 28), "LPN": (40, 33), "BMI": (30, 22)}

# The published insulin table must diverge at exactly these cells.
_INSULIN_ERRATA = {("μ_45", "(INS)_H"), ("μ_60", "(INS)_L")}

# Off-diagonal agreement bar for the published comparison table when it is
# recomputed from the published 72-column product table.
_CONSISTENCY_BAR = 0.85


@dataclass(frozen=True)
class CellDelta:
    object_id: str
    parameter: str
    computed: float
    printed: float

    def __str__(self) -> str:
        return (
            f"({self.object_id}, {self.parameter}): computed {self.computed:.4f} "
            f"vs printed {self.printed:.4f}"
        )


@dataclass
class CheckResult:
    name: str
    passed: bool
    hard: bool
    summary: str
    details: list[str] = field(default_factory=list)

    def format(self, verbose: bool = False) -> str:
        status = "PASS" if self.passed else ("FAIL" if self.hard else "SOFT-FAIL")
        lines = [f"[{status}] {self.name}: {self.summary}"]
        if verbose or not self.passed:
            lines.extend(f"    {d}" for d in self.details)
        return "\n".join(lines)


@dataclass
class VerificationReport:
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        """True when every hard check passed (soft checks never gate this)."""
        return all(c.passed for c in self.checks if c.hard)

    def format(self, verbose: bool = False) -> str:
        return "\n".join(c.format(verbose) for c in self.checks) + "\n"


def _computed_variable_sets() -> dict[str, FuzzySoftSet]:
    records = builtin_table1()
    specs = default_variable_specs()
    return {spec.name: s for spec, s in zip(specs, fuzzify_cohort(records, specs))}


def _check_variable_table(var: str, computed: FuzzySoftSet) -> CheckResult:
    printed = fixtures.published_variable_tables()[var]
    total, bar = _TABLE_BARS[var]
    cells = errata_report(computed, printed, TOLERANCE)
    within = total - len(cells)
    details = [str(CellDelta(c.object_id, c.parameter, c.computed, c.printed)) for c in cells]
    passed = within >= bar
    if var == "INS":
        found = {(c.object_id, c.parameter) for c in cells}
        passed = passed and found == _INSULIN_ERRATA
    return CheckResult(
        name=f"{var.lower()}-table",
        passed=passed,
        hard=True,
        summary=f"{within}/{total} cells within {TOLERANCE}"
        + (f", {len(cells)} divergent cell(s) in errata" if cells else ""),
        details=details,
    )


def _check_age_bmi_product(sets: dict[str, FuzzySoftSet]) -> CheckResult:
    printed = fixtures.published_age_bmi_product()
    computed = product(sets["AGE"], sets["BMI"], "max")
    printed_tables = fixtures.published_variable_tables()
    age_errata = {
        (c.object_id, c.parameter)
        for c in errata_report(sets["AGE"], printed_tables["AGE"], TOLERANCE)
    }
    bmi_errata = {
        (c.object_id, c.parameter)
        for c in errata_report(sets["BMI"], printed_tables["BMI"], TOLERANCE)
    }
    delta = np.abs(computed.degrees - printed.degrees)
    divergent = np.argwhere(delta > TOLERANCE)
    n_bmi = len(sets["BMI"].parameters)
    details = []
    all_traceable = True
    for i, k in divergent:
        oid = computed.universe[i]
        a_label = sets["AGE"].parameters[k // n_bmi]
        b_label = sets["BMI"].parameters[k % n_bmi]
        traceable = (oid, a_label) in age_errata or (oid, b_label) in bmi_errata
        all_traceable = all_traceable and traceable
        details.append(
            f"({oid}, {computed.parameters[k]}): computed {computed.degrees[i, k]:.4f} "
            f"vs printed {printed.degrees[i, k]:.4f}"
            + ("" if traceable else " [NOT traceable to an input erratum]")
        )
    matched = 120 - len(divergent)
    return CheckResult(
        name="age-bmi-product",
        passed=all_traceable,
        hard=True,
        summary=f"{matched}/120 cells within {TOLERANCE}; "
        f"all divergences traceable to input errata: {all_traceable}",
        details=details,
    )


def _check_score_table() -> CheckResult:
    report = scores(fixtures.published_comparison_table())
    details = []
    exact = True
    for oid, printed_triple in fixtures.PUBLISHED_SCORE_ROWS.items():
        got = report.triple(oid)
        if got != printed_triple:
            exact = False
            details.append(f"{oid}: computed {got} vs printed {printed_triple}")
    total = int(report.scores.sum())
    if total != 0:
        exact = False
        details.append(f"scores sum to {total}, expected 0")
    return CheckResult(
        name="score-table",
        passed=exact,
        hard=True,
        summary="all ten (row sum, column sum, score) triples exact; scores sum to 0"
        if exact
        else "score table mismatch",
        details=details,
    )


def _check_comparison_consistency() -> CheckResult:
    computed = comparison_table(fixtures.published_product_table(), "count")
    printed = fixtures.published_comparison_table()
    diag_ok = bool(np.all(np.diag(computed.counts) == 72))
    off = ~np.eye(10, dtype=bool)
    agree = (computed.counts == printed.counts) & off
    n_agree = int(agree.sum())
    rate = n_agree / off.sum()
    details = []
    for i, j in np.argwhere((computed.counts != printed.counts) & off):
        details.append(
            f"({computed.universe[i]}, {computed.universe[j]}): "
            f"computed {computed.counts[i, j]} vs printed {printed.counts[i, j]}"
        )
    return CheckResult(
        name="comparison-consistency",
        passed=diag_ok and rate >= _CONSISTENCY_BAR,
        hard=False,
        summary=f"diagonal 72/72 match: {diag_ok}; off-diagonal {n_agree}/90 = {rate:.1%} "
        f"(bar {_CONSISTENCY_BAR:.0%}); every mismatch listed",
        details=details,
    )


def _check_accuracy() -> CheckResult:
    report = scores(fixtures.published_comparison_table())
    predictions = classify(report, threshold=0.0)
    acc = evaluate(predictions, fixtures.GROUND_TRUTH)
    high = sorted(
        (oid for oid, p in predictions.items() if p == HIGH_RISK),
        key=fixtures.COHORT_IDS.index,
    )
    expected_high = ["μ_31", "μ_45", "μ_71", "μ_82", "μ_91", "μ_104"]
    passed = acc == fixtures.PUBLISHED_ACCURACY and high == expected_high
    return CheckResult(
        name="accuracy",
        passed=passed,
        hard=True,
        summary=f"threshold-0 accuracy {acc:.2f} (published {fixtures.PUBLISHED_ACCURACY:.2f}); "
        f"high-risk set {'matches' if high == expected_high else 'differs from'} the published split",
        details=[f"high-risk: {', '.join(high)}"],
    )


def verify_fixtures() -> VerificationReport:
    """Run every fixture check and return the per-check report."""
    sets = _computed_variable_sets()
    checks = [_check_variable_table(var, sets[var]) for var in ("AGE", "BMI", "INS", "LPN", "ADP")]
    checks.append(_check_age_bmi_product(sets))
    checks.append(_check_score_table())
    checks.append(_check_comparison_consistency())
    checks.append(_check_accuracy())
    return VerificationReport(checks)
