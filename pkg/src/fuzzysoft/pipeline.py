"""End-to-end pipeline: ingest, fuzzify, reduce, product, score, emit.

Every run writes the per-variable fuzzy-soft-set tables, the errata report,
the reduction summary, the product table that was scored, the comparison
table, the score report, and a JSON manifest recording the configuration.
Outputs are deterministic: identical configurations produce byte-identical
files, and each text output ends with a comment line naming the config hash
and tool version. Files are written to a temp name and atomically renamed, so
a failing run leaves no partial outputs.

The scored product table has two possible sources. "computed" rebuilds it
from the variable definitions (after the optional per-variable reduction).
"published" uses the study's own 72-column product table, which is the only
way to reproduce the published end-to-end result: that table is not derivable
from the study's variable definitions, so it ships as an opaque fixture.
"auto" (the default) picks "published" exactly when the configuration is
study-faithful (built-in cohort, default variables, max combiner, count mode)
and "computed" otherwise.
"""
from __future__ import annotations

import hashlib
import io
import json
import os
from dataclasses import dataclass, field, replace
from pathlib import Path

from . import __version__, fixtures
from .errors import ConfigError, DataError, InternalError
from .ingest import DEFAULT_SCHEMA, DatasetSchema, builtin_table1, load_csv
from .reduction import find_reductions
from .scoring import (
    ScoreReport,
    classify,
    comparison_table,
    evaluate,
    format_report_text,
    report_to_csv,
    scores,
)
from .softset import product_n, restrict, to_table
from .variables import (
    VariableSpec,
    default_variable_specs,
    errata_report,
    fuzzify_cohort,
    load_variable_specs,
)

__all__ = ["BUILTIN_SOURCE", "PipelineConfig", "RunResult", "run_pipeline", "emit_curves"]

BUILTIN_SOURCE = "builtin-table1"

_COMBINERS = ("max", "min")
_MODES = ("count", "difference")
_REDUCTIONS = ("per-variable", "off")
_PRODUCT_SOURCES = ("auto", "published", "computed")


@dataclass(frozen=True)
class PipelineConfig:
    """Everything a run needs; defaults reproduce the published pipeline."""

    data_source: str = BUILTIN_SOURCE
    schema: DatasetSchema = field(default_factory=lambda: DEFAULT_SCHEMA)
    spec_path: str | None = None
    combiner: str = "max"
    mode: str = "count"
    reduction: str = "per-variable"
    threshold: float = 0.0
    out_dir: str = "out"
    round_digits: int = 2
    product_source: str = "auto"

    def validate(self) -> None:
        if self.combiner not in _COMBINERS:
            raise ConfigError(f"combiner must be one of {_COMBINERS}, got {self.combiner!r}")
        if self.mode not in _MODES:
            raise ConfigError(f"mode must be one of {_MODES}, got {self.mode!r}")
        if self.reduction not in _REDUCTIONS:
            raise ConfigError(f"reduction must be one of {_REDUCTIONS}, got {self.reduction!r}")
        if self.product_source not in _PRODUCT_SOURCES:
            raise ConfigError(
                f"product source must be one of {_PRODUCT_SOURCES}, got {self.product_source!r}"
            )
        if not (self.threshold == self.threshold and abs(self.threshold) != float("inf")):
            raise ConfigError(f"threshold must be finite, got {self.threshold}")
        if self.round_digits < 0:
            raise ConfigError(f"round digits must be non-negative, got {self.round_digits}")

    def semantic_dict(self) -> dict:
        """Config as a plain dict, excluding the output location.

        The hash covers what a run computes, not where it lands, so identical
        configurations produce byte-identical outputs in any directory.
        """
        return {
            "data_source": self.data_source,
            "schema_columns": dict(sorted(self.schema.column_map.items())),
            "schema_labels": dict(sorted(self.schema.label_encoding.items())),
            "schema_id_column": self.schema.id_column,
            "spec_path": self.spec_path,
            "combiner": self.combiner,
            "mode": self.mode,
            "reduction": self.reduction,
            "threshold": self.threshold,
            "round_digits": self.round_digits,
            "product_source": self.product_source,
        }

    def hash(self) -> str:
        canon = json.dumps(self.semantic_dict(), sort_keys=True, ensure_ascii=False)
        return hashlib.sha256(canon.encode("utf-8")).hexdigest()[:12]


@dataclass
class RunResult:
    report: ScoreReport
    accuracy: float | None
    product_source_used: str
    product_parameters: int
    config_hash: str
    files: dict[str, Path]


def _study_faithful(cfg: PipelineConfig) -> bool:
    return (
        cfg.data_source == BUILTIN_SOURCE
        and cfg.spec_path is None
        and cfg.combiner == "max"
        and cfg.mode == "count"
    )


def _atomic_write(path: Path, content: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(content)
    os.replace(tmp, path)


def run_pipeline(cfg: PipelineConfig) -> RunResult:
    """Execute the configured pipeline and write all outputs atomically."""
    cfg.validate()
    footer = f"# config={cfg.hash()} version={__version__}\n"

    out_dir = Path(cfg.out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ConfigError(f"cannot create output directory {out_dir}: {exc}") from exc
    if not os.access(out_dir, os.W_OK):
        raise ConfigError(f"output directory {out_dir} is not writable")

    # Ingest and fuzzify.
    if cfg.data_source == BUILTIN_SOURCE:
        records = builtin_table1()
    else:
        records = load_csv(cfg.data_source, cfg.schema)
        if not records:
            raise DataError(f"{cfg.data_source}: no data rows")
    specs = default_variable_specs() if cfg.spec_path is None else load_variable_specs(cfg.spec_path)
    var_sets = fuzzify_cohort(records, specs)

    # Errata against the published per-variable tables, where comparable.
    published = fixtures.published_variable_tables()
    errata_rows: list[tuple[str, str, str, float, float, float]] = []
    for spec, computed in zip(specs, var_sets):
        ref = published.get(spec.name)
        if ref is None or ref.universe != computed.universe or ref.parameters != computed.parameters:
            continue
        for cell in errata_report(computed, ref, 0.01):
            errata_rows.append(
                (spec.name, cell.object_id, cell.parameter, cell.printed, cell.computed, cell.delta)
            )

    # Optional per-variable reduction; the first (smallest) minimal reduct of
    # each variable is the one applied.
    reduction_lines: list[str] = []
    if cfg.reduction == "per-variable":
        reduced_sets = []
        for spec, s in zip(specs, var_sets):
            results = find_reductions(s)
            if not results:
                raise InternalError(f"no reduction found for {spec.name}; full set should qualify")
            best = results[0]
            reduced_sets.append(restrict(s, best.reduct))
            reduction_lines.append(
                f"{spec.name}: kept {', '.join(best.reduct)}"
                + (f"; dropped {', '.join(best.dispensable)}" if best.dispensable else "; dropped none")
                + f" ({len(results)} minimal reduction(s) found)"
            )
    else:
        reduced_sets = list(var_sets)
        reduction_lines.append("reduction off: all parameters kept")

    # Product stage.
    if cfg.product_source == "published" and not (
        cfg.data_source == BUILTIN_SOURCE and cfg.spec_path is None
    ):
        raise ConfigError(
            "product source 'published' requires the built-in cohort and default variables"
        )
    source_used = cfg.product_source
    if source_used == "auto":
        source_used = "published" if _study_faithful(cfg) else "computed"
    if source_used == "published":
        prod = fixtures.published_product_table()
    else:
        prod = product_n(reduced_sets, cfg.combiner)

    # Score and classify.
    table = comparison_table(prod, cfg.mode)
    report = scores(table)
    predictions = classify(report, cfg.threshold)
    report = replace(report, predictions=predictions)
    labels = {r.id: r.label for r in records if r.label is not None}
    accuracy = None
    if labels and set(labels) == set(report.universe):
        accuracy = evaluate(predictions, labels)
        report = replace(report, accuracy=accuracy)

    # Render everything before writing anything.
    contents: dict[str, str] = {}
    for spec, s in zip(specs, var_sets):
        contents[f"fuzzy_{spec.name}.csv"] = to_table(s, decimals=6) + footer

    buf = io.StringIO()
    buf.write("variable,object,parameter,printed,computed,delta\n")
    for var, oid, param, printed_v, computed_v, delta in errata_rows:
        buf.write(f"{var},{oid},{param},{printed_v:.6f},{computed_v:.6f},{delta:.6f}\n")
    contents["errata.csv"] = buf.getvalue() + footer

    contents["reduction.txt"] = "\n".join(reduction_lines) + "\n" + footer
    contents["product.csv"] = to_table(prod, decimals=6) + footer

    buf = io.StringIO()
    buf.write("object," + ",".join(table.universe) + "\n")
    for i, oid in enumerate(table.universe):
        if table.mode == "count":
            cells = ",".join(str(int(v)) for v in table.counts[i])
        else:
            cells = ",".join(f"{float(v):.6f}" for v in table.counts[i])
        buf.write(f"{oid},{cells}\n")
    contents["comparison.csv"] = buf.getvalue() + footer

    contents["scores.csv"] = report_to_csv(report, labels) + footer
    header = (
        f"risk ranking over {report.parameter_count} product parameter(s) "
        f"[source: {source_used}, combiner: {cfg.combiner}, mode: {cfg.mode}, "
        f"threshold: {cfg.threshold:g}]\n"
    )
    contents["report.txt"] = header + format_report_text(report, cfg.round_digits) + footer

    manifest = {
        "tool": "fuzzysoft",
        "config": cfg.semantic_dict(),
        "product_source_used": source_used,
        "product_parameters": report.parameter_count,
        "accuracy": accuracy,
        "outputs": sorted(contents) + ["manifest.json"],
        "config_hash": cfg.hash(),
        "version": __version__,
    }
    contents["manifest.json"] = json.dumps(manifest, indent=2, ensure_ascii=False) + "\n"

    files = {}
    try:
        for name in sorted(contents):
            path = out_dir / name
            _atomic_write(path, contents[name])
            files[name] = path
    except OSError as exc:
        raise ConfigError(f"cannot write outputs to {out_dir}: {exc}") from exc

    return RunResult(
        report=report,
        accuracy=accuracy,
        product_source_used=source_used,
        product_parameters=report.parameter_count,
        config_hash=cfg.hash(),
        files=files,
    )


def emit_curves(
    specs: list[VariableSpec] | None = None,
    out_dir: str | os.PathLike = "curves",
    samples_per_curve: int = 101,
) -> dict[str, Path]:
    """Write one CSV per variable sampling every partition's membership curve.

    Columns are x plus one degree column per partition code, sampled evenly
    over the variable's display range. These files replace the study's curve
    figures with plot-ready data.
    """
    if samples_per_curve < 2:
        raise ConfigError(f"samples per curve must be at least 2, got {samples_per_curve}")
    if specs is None:
        specs = default_variable_specs()
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ConfigError(f"cannot create output directory {out}: {exc}") from exc
    if not os.access(out, os.W_OK):
        raise ConfigError(f"output directory {out} is not writable")

    files = {}
    for spec in specs:
        lo, hi = spec.display_range
        samples = [p.mf.sample(lo, hi, samples_per_curve) for p in spec.partitions]
        buf = io.StringIO()
        buf.write("x," + ",".join(p.code for p in spec.partitions) + "\n")
        for i in range(samples_per_curve):
            x = samples[0][i][0]
            buf.write(f"{x:.6f}," + ",".join(f"{s[i][1]:.6f}" for s in samples) + "\n")
        name = f"curves_{spec.name}.csv"
        _atomic_write(out / name, buf.getvalue())
        files[name] = out / name
    return files
