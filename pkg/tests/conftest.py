"""Pytest configuration and fixtures."""

import sys
from pathlib import Path

import pytest

# Add src to path for imports
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))

from artinhelly.config.settings import Settings
from artinhelly.coxeter.graph import DefiningGraph, graph_from_edges, load_graph
from artinhelly.coxeter.group import CoxeterGroup, enumerate_group
from artinhelly.garside.structure import GarsideStructure, garside_from_spherical
from artinhelly.salvetti.fc import FCGraph, certify_fc

DATA_DIR = Path(__file__).parent.parent / "data"


@pytest.fixture
def data_dir() -> Path:
    """Directory holding the sample graphs and complexes."""
    return DATA_DIR


@pytest.fixture
def test_settings():
    """Settings with small sweeps for fast tests."""
    return Settings(
        enumeration_cap=10000,
        max_family=4,
        max_radius=2,
        seed=7,
        jobs=1,
        sweep_samples=50,
        exhaustive_limit=5000,
        log_level="DEBUG",
        log_to_file=False,
        log_retention_days=7,
    )


@pytest.fixture(scope="session")
def a2_graph() -> DefiningGraph:
    return load_graph(DATA_DIR / "a2.json")


@pytest.fixture(scope="session")
def a3_graph() -> DefiningGraph:
    return load_graph(DATA_DIR / "a3.json")


@pytest.fixture(scope="session")
def a2_group(a2_graph) -> CoxeterGroup:
    return enumerate_group(a2_graph)


@pytest.fixture(scope="session")
def a3_group(a3_graph) -> CoxeterGroup:
    return enumerate_group(a3_graph)


@pytest.fixture(scope="session")
def b2_group() -> CoxeterGroup:
    return enumerate_group(load_graph(DATA_DIR / "b2.json"))


@pytest.fixture(scope="session")
def braid3(a2_group) -> GarsideStructure:
    """Garside structure of the 3-strand braid group."""
    return garside_from_spherical(a2_group)


@pytest.fixture(scope="session")
def braid4(a3_group) -> GarsideStructure:
    """Garside structure of the 4-strand braid group."""
    return garside_from_spherical(a3_group)


@pytest.fixture(scope="session")
def b2_structure(b2_group) -> GarsideStructure:
    return garside_from_spherical(b2_group)


@pytest.fixture(scope="session")
def a2_fc(a2_graph) -> FCGraph:
    return certify_fc(a2_graph)


@pytest.fixture(scope="session")
def a3_fc(a3_graph) -> FCGraph:
    return certify_fc(a3_graph)


@pytest.fixture(scope="session")
def z_fc() -> FCGraph:
    """ℤ: one vertex."""
    return certify_fc(load_graph(DATA_DIR / "z.json"))


@pytest.fixture(scope="session")
def z2_fc() -> FCGraph:
    """ℤ²: two commuting generators."""
    return certify_fc(load_graph(DATA_DIR / "z2.json"))


@pytest.fixture(scope="session")
def free_fc() -> FCGraph:
    """The free group on two generators."""
    return certify_fc(load_graph(DATA_DIR / "infinite_edge.json"))


@pytest.fixture(scope="session")
def path_fc() -> FCGraph:
    """a –3– b –2– c, whose maximal cliques {a, b} and {b, c} share b."""
    return certify_fc(load_graph(DATA_DIR / "fc_path.json"))


@pytest.fixture(scope="session")
def cube_fc() -> FCGraph:
    """ℤ³: a triangle with every label 2."""
    return certify_fc(
        graph_from_edges(["a", "b", "c"], [("a", "b", 2), ("b", "c", 2), ("a", "c", 2)])
    )
