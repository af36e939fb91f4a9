from __future__ import annotations

import sys
from pathlib import Path

import pytest

from gemtopo.gem_core import ColoredGraph, generate_melon, parse

sys.path.insert(0, str(Path(__file__).resolve().parent))

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
GOLDEN = Path(__file__).resolve().parent / "golden"


def load(name: str) -> ColoredGraph:
    return parse((CORPUS / f"{name}.gem").read_text())


@pytest.fixture
def melon4() -> ColoredGraph:
    return generate_melon(4)


@pytest.fixture
def melon3() -> ColoredGraph:
    return generate_melon(3)


@pytest.fixture
def pillow0() -> ColoredGraph:
    # dipole inserted in the 0-line of melon(4)
    return ColoredGraph(4, 2, ((1, 0), (0, 1), (0, 1), (0, 1), (0, 1)))


@pytest.fixture
def pillow1() -> ColoredGraph:
    # dipole inserted in a 1-line of melon(4)
    return ColoredGraph(4, 2, ((0, 1), (1, 0), (0, 1), (0, 1), (0, 1)))


@pytest.fixture
def n4() -> ColoredGraph:
    return ColoredGraph(3, 2, ((0, 1), (0, 1), (1, 0), (1, 0)))
