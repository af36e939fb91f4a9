"""Hypothesis strategies for colored graphs."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from gemtopo.gem_core import ColoredGraph, random_connected


@st.composite
def any_graph(draw, ranks=(2, 3, 4), max_half: int = 6) -> ColoredGraph:
    """Arbitrary matching tuple; may be disconnected."""
    d = draw(st.sampled_from(ranks))
    n = draw(st.integers(1, max_half))
    perms = tuple(tuple(draw(st.permutations(range(n)))) for _ in range(d + 1))
    return ColoredGraph(d, n, perms)


@st.composite
def connected_graph(draw, ranks=(2, 3, 4), max_half: int = 6) -> ColoredGraph:
    d = draw(st.sampled_from(ranks))
    n = draw(st.integers(1, max_half))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_connected(d, n, random.Random(seed))
