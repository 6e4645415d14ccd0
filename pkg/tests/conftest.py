import pytest

from dctco import builtin_scenario_dir, evaluate, load_scenario_file


@pytest.fixture(scope="session")
def nevada():
    """The bundled call-center case-study scenario (immutable, shared)."""
    return load_scenario_file(builtin_scenario_dir() / "callcenter-nevada.json")


@pytest.fixture(scope="session")
def nevada_report(nevada):
    return evaluate(nevada)
