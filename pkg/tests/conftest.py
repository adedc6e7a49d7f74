import pytest

from src.core.arrangement import Ambient, Arrangement, Family, SubspaceA, SubspaceB
from src.core.config_manager import ConfigManager
from src.models.graphs import Graph, graph_to_arrangement


@pytest.fixture
def k3() -> Graph:
    return Graph.complete(3)


@pytest.fixture
def k3_arrangement(k3) -> Arrangement:
    return graph_to_arrangement(k3)


@pytest.fixture
def s3() -> Ambient:
    return Ambient(Family.A, 3)


@pytest.fixture
def b2() -> Ambient:
    return Ambient(Family.B, 2)


@pytest.fixture
def b2_zero_line(b2) -> Arrangement:
    """{x_1 = 0} dans B_2."""
    return Arrangement(b2, (SubspaceB.coordinate(2, 1),))


@pytest.fixture
def s4_codim2() -> Arrangement:
    """Deux sous-espaces de codimension 2 dans S_4 : x1=x2=x3 et x2=x3=x4."""
    amb = Ambient(Family.A, 4)
    return Arrangement(amb, (SubspaceA(4, ((1, 2, 3),)), SubspaceA(4, ((2, 3, 4),))))


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Chaque test part d'une configuration vierge (aucun arrlab.yaml réel)."""
    monkeypatch.setenv("ARRLAB_CONFIG_DIR", str(tmp_path / "config"))
    monkeypatch.delenv("ARRLAB_BUDGET", raising=False)
    ConfigManager.reset()
    yield
    ConfigManager.reset()
