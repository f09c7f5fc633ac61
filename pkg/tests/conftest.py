import pytest

from orbitgraph.partitions import PairType, Partition
from orbitgraph.signed_diagrams import SignedDiagram


@pytest.fixture
def P():
    return lambda *parts: Partition(tuple(parts))


@pytest.fixture
def D():
    return SignedDiagram.parse


AIII, BDI, CI, CII, DIII = (PairType.AIII, PairType.BDI, PairType.CI, PairType.CII, PairType.DIII)
