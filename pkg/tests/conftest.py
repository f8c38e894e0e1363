from pathlib import Path

import pytest

from fuzzysoft import builtin_table1, default_variable_specs, fuzzify_cohort
from fuzzysoft.fixtures import published_variable_tables

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def specs():
    return default_variable_specs()


@pytest.fixture(scope="session")
def specs_by_name(specs):
    return {s.name: s for s in specs}


@pytest.fixture(scope="session")
def cohort():
    return builtin_table1()


@pytest.fixture(scope="session")
def computed_sets(cohort, specs):
    return {spec.name: s for spec, s in zip(specs, fuzzify_cohort(cohort, specs))}


@pytest.fixture(scope="session")
def published_sets():
    return published_variable_tables()


@pytest.fixture(scope="session")
def csv_116():
    return DATA_DIR / "blood_markers_116.csv"
