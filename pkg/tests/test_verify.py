import numpy as np

from fuzzysoft import verify_fixtures
from fuzzysoft.fixtures import (
    PUBLISHED_SCORE_ROWS,
    published_age_bmi_product,
    published_comparison_table,
    published_product_table,
    published_variable_tables,
)


def test_fixture_shapes():
    tables = published_variable_tables()
    assert {v: s.shape for v, s in tables.items()} == {
        "AGE": (10, 4), "BMI": (10, 3), "INS": (10, 3), "LPN": (10, 4), "ADP": (10, 3),
    }
    assert published_age_bmi_product().shape == (10, 12)
    assert published_product_table().shape == (10, 72)
    assert published_comparison_table().counts.shape == (10, 10)
    assert len(PUBLISHED_SCORE_ROWS) == 10


def test_published_product_is_max_of_published_inputs():
    # the printed 12-column table is internally consistent with the printed
    # age and BMI tables under the max combiner
    tables = published_variable_tables()
    age, bmi = tables["AGE"].degrees, tables["BMI"].degrees
    recombined = np.maximum(age[:, :, None], bmi[:, None, :]).reshape(10, 12)
    assert np.allclose(recombined, published_age_bmi_product().degrees, atol=1e-12)


def test_published_comparison_diagonal():
    assert np.all(np.diag(published_comparison_table().counts) == 72)


def test_verify_report_names_and_hardness():
    report = verify_fixtures()
    by_name = {c.name: c for c in report.checks}
    assert set(by_name) == {
        "age-table", "bmi-table", "ins-table", "lpn-table", "adp-table",
        "age-bmi-product", "score-table", "comparison-consistency", "accuracy",
    }
    assert not by_name["comparison-consistency"].hard
    assert all(c.hard for name, c in by_name.items() if name != "comparison-consistency")


def test_all_hard_checks_pass():
    report = verify_fixtures()
    assert report.ok
    failing_hard = [c.name for c in report.checks if c.hard and not c.passed]
    assert failing_hard == []


def test_soft_consistency_check_reports_mismatches():
    report = verify_fixtures()
    soft = next(c for c in report.checks if c.name == "comparison-consistency")
    assert not soft.passed  # 64% agreement, below the 85% bar
    assert len(soft.details) == 32
    assert "64.4%" in soft.summary


def test_report_formatting():
    text = verify_fixtures().format()
    assert "[PASS] age-table" in text
    assert "[SOFT-FAIL] comparison-consistency" in text
