import csv
import json
from pathlib import Path

import pytest

from fuzzysoft import specs_to_json, default_variable_specs
from fuzzysoft.cli import main

MU = "μ_"


def run_cli(*argv):
    return main(list(argv))


def read_bytes_tree(root: Path) -> dict[str, bytes]:
    return {p.name: p.read_bytes() for p in sorted(root.iterdir())}


def test_run_defaults_reports_published_accuracy(tmp_path, capsys):
    out = tmp_path / "out"
    assert run_cli("run", "--out", str(out)) == 0
    stdout = capsys.readouterr().out
    assert "accuracy: 0.70" in stdout
    assert "product source: published (72 parameters)" in stdout
    report = (out / "report.txt").read_text(encoding="utf-8")
    assert "accuracy: 0.70" in report
    expected = {
        "comparison.csv", "errata.csv", "fuzzy_ADP.csv", "fuzzy_AGE.csv", "fuzzy_BMI.csv",
        "fuzzy_INS.csv", "fuzzy_LPN.csv", "manifest.json", "product.csv", "reduction.txt",
        "report.txt", "scores.csv",
    }
    assert {p.name for p in out.iterdir()} == expected


def test_rerun_is_byte_identical(tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert run_cli("run", "--out", str(out1)) == 0
    assert run_cli("run", "--out", str(out2)) == 0
    assert read_bytes_tree(out1) == read_bytes_tree(out2)


def test_every_output_ends_with_manifest_line(tmp_path):
    out = tmp_path / "out"
    assert run_cli("run", "--out", str(out)) == 0
    manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
    config_hash = manifest["config_hash"]
    for path in out.iterdir():
        if path.name == "manifest.json":
            continue
        last_line = path.read_text(encoding="utf-8").rstrip("\n").splitlines()[-1]
        assert last_line == f"# config={config_hash} version={manifest['version']}", path.name


def test_manifest_records_flags_and_products(tmp_path):
    out = tmp_path / "out"
    assert run_cli("run", "--out", str(out), "--threshold", "5") == 0
    manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
    assert manifest["config"]["threshold"] == 5.0
    assert manifest["config"]["combiner"] == "max"
    assert manifest["product_source_used"] == "published"
    assert manifest["product_parameters"] == 72
    assert manifest["accuracy"] is not None


def test_computed_product_source(tmp_path, capsys):
    out = tmp_path / "out"
    assert run_cli("run", "--out", str(out), "--product-source", "computed", "--reduction", "off") == 0
    stdout = capsys.readouterr().out
    assert "product source: computed (432 parameters)" in stdout
    assert "accuracy: 0.80" in stdout


def test_reduced_computed_product(tmp_path, capsys):
    out = tmp_path / "out"
    assert run_cli("run", "--out", str(out), "--product-source", "computed") == 0
    stdout = capsys.readouterr().out
    assert "product source: computed (2 parameters)" in stdout
    reduction = (out / "reduction.txt").read_text(encoding="utf-8")
    assert "AGE: kept (AGE)_O" in reduction
    assert "ADP: kept (ADP)_L, (ADP)_H" in reduction


def test_published_product_requires_builtin_data(tmp_path, csv_116):
    out = tmp_path / "out"
    assert run_cli("run", "--out", str(out), "--data", str(csv_116), "--product-source", "published") == 1


def test_csv_data_source_runs_computed(tmp_path, csv_116, capsys):
    out = tmp_path / "out"
    assert run_cli("run", "--out", str(out), "--data", str(csv_116)) == 0
    stdout = capsys.readouterr().out
    assert "product source: computed" in stdout
    with open(out / "scores.csv", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    assert len(rows) == 1 + 116


def test_missing_csv_exits_2(tmp_path):
    assert run_cli("run", "--out", str(tmp_path / "o"), "--data", str(tmp_path / "nope.csv")) == 2


def test_bad_flag_exits_1(capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli("run", "--not-a-flag")
    assert exc.value.code == 1


def test_unusable_output_path_exits_1(tmp_path):
    # a file where the output directory should be (works even as root,
    # where permission bits are ignored)
    blocker = tmp_path / "blocker"
    blocker.write_text("not a directory")
    assert run_cli("run", "--out", str(blocker / "out")) == 1


def test_failed_run_leaves_no_partial_outputs(tmp_path, csv_116):
    out = tmp_path / "out"
    # this config fails late (product stage), after ingest and fuzzification;
    # the render-then-write design must leave the directory empty
    code = run_cli(
        "run", "--out", str(out), "--data", str(csv_116), "--product-source", "published",
    )
    assert code == 1
    assert not out.exists() or list(out.iterdir()) == []


def test_fuzzify_subcommand_writes_tables_and_errata(tmp_path, capsys):
    out = tmp_path / "out"
    assert run_cli("fuzzify", "--out", str(out)) == 0
    stdout = capsys.readouterr().out
    assert "fuzzy_AGE.csv" in stdout and "errata.csv" in stdout
    with open(out / "errata.csv", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    assert rows[0] == ["variable", "object", "parameter", "printed", "computed", "delta"]
    cells = {(r[0], r[1], r[2]) for r in rows[1:]}
    assert ("INS", f"{MU}45", "(INS)_H") in cells
    assert ("INS", f"{MU}60", "(INS)_L") in cells
    assert ("LPN", f"{MU}31", "(LPN)_VH") in cells
    # 8 BMI + 6 LPN + 2 INS divergent cells, none for AGE or ADP
    assert len(rows) - 1 == 16
    assert not any(r[0] in ("AGE", "ADP") for r in rows[1:])


def test_score_subcommand_outputs(tmp_path, capsys):
    out = tmp_path / "out"
    assert run_cli("score", "--out", str(out)) == 0
    stdout = capsys.readouterr().out
    assert "scores.csv" in stdout
    assert "accuracy: 0.70" in stdout
    scores_text = (out / "scores.csv").read_text(encoding="utf-8")
    assert scores_text.startswith("object,row_sum,column_sum,score,prediction,label\n")


def test_reduce_and_product_subcommands(tmp_path, capsys):
    out = tmp_path / "out"
    assert run_cli("reduce", "--out", str(out)) == 0
    assert "reduction.txt" in capsys.readouterr().out
    assert run_cli("product", "--out", str(out)) == 0
    assert "product.csv" in capsys.readouterr().out
    header = (out / "product.csv").read_text(encoding="utf-8").splitlines()[0]
    assert header.split(",")[1] == "€1"  # published positional labels


def test_threshold_flag_changes_predictions(tmp_path):
    out = tmp_path / "out"
    assert run_cli("run", "--out", str(out), "--threshold", "150") == 0
    scores_text = (out / "scores.csv").read_text(encoding="utf-8")
    high_risk_rows = [l for l in scores_text.splitlines() if ",high-risk," in l]
    assert len(high_risk_rows) == 2  # only scores 220 and 170 clear a 150 threshold


def test_min_combiner_and_difference_mode_run(tmp_path):
    out = tmp_path / "out"
    code = run_cli(
        "run", "--out", str(out), "--combiner", "min", "--mode", "difference",
        "--reduction", "off",
    )
    assert code == 0
    manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
    assert manifest["product_source_used"] == "computed"  # not study-faithful


def test_spec_flag_round_trip(tmp_path, capsys):
    spec_file = tmp_path / "vars.json"
    spec_file.write_text(specs_to_json(default_variable_specs()), encoding="utf-8")
    out = tmp_path / "out"
    # explicit spec file: no longer the study-faithful default config
    assert run_cli("run", "--out", str(out), "--spec", str(spec_file)) == 0
    manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
    assert manifest["product_source_used"] == "computed"


def test_curves_defaults(tmp_path):
    out = tmp_path / "curves"
    assert run_cli("curves", "--out", str(out)) == 0
    files = sorted(p.name for p in out.iterdir())
    assert files == [
        "curves_ADP.csv", "curves_AGE.csv", "curves_BMI.csv", "curves_INS.csv", "curves_LPN.csv",
    ]
    degree_columns = 0
    for name in files:
        with open(out / name, encoding="utf-8") as fh:
            header = next(csv.reader(fh))
        assert header[0] == "x"
        degree_columns += len(header) - 1
    assert degree_columns == 17
    with open(out / "curves_AGE.csv", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    at82 = [r for r in rows[1:] if float(r[0]) == 82.0]
    assert len(at82) == 1
    assert float(at82[0][rows[0].index("O")]) == 1.0


def test_curves_single_sample_exits_1(tmp_path):
    assert run_cli("curves", "--out", str(tmp_path / "c"), "--samples", "1") == 1


def test_verify_exits_clean(capsys):
    assert run_cli("verify") == 0
    stdout = capsys.readouterr().out
    assert "[PASS] age-table" in stdout
    assert "[PASS] accuracy" in stdout
    assert "[SOFT-FAIL] comparison-consistency" in stdout
