"""
Shared fixtures: every test gets its own sweep cache directory and a single worker,
and root logging is restored after CLI runs reconfigure it.
"""

import logging

import networkx as nx
import pytest

from dlmkit.config import get_settings
from dlmkit.core.graph import Graph, from_edges
from dlmkit.families import build
from dlmkit.models import FamilySpec, FamilyTag


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    monkeypatch.setenv("DLMKIT_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.setenv("DLMKIT_WORKERS", "1")
    monkeypatch.delenv("DLMKIT_LOG_FILE", raising=False)
    get_settings.cache_clear()
    yield get_settings()
    get_settings.cache_clear()


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def family_graph(tag: FamilyTag, n: int) -> Graph:
    return build(FamilySpec(tag=tag, n=n))


@pytest.fixture
def p4() -> Graph:
    return from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def k24() -> Graph:
    return family_graph(FamilyTag.COMPLETE_BIPARTITE_2, 6)
