"""Reference computations that share no code with the package.

GF(2) ranks use dense numpy elimination; bicolored cycle counts come from
networkx components of an explicitly built multigraph.
"""

from __future__ import annotations

import itertools

import networkx as nx
import numpy as np


def gf2_rank(matrix: np.ndarray) -> int:
    """Rank over GF(2) by row reduction of a copy of ``matrix``."""
    m = (np.asarray(matrix, dtype=np.uint8) & 1).copy()
    rows, cols = m.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivots = np.nonzero(m[rank:, col])[0]
        if len(pivots) == 0:
            continue
        p = rank + pivots[0]
        if p != rank:
            m[[rank, p]] = m[[p, rank]]
        others = np.nonzero(m[:, col])[0]
        others = others[others != rank]
        m[others] ^= m[rank]
        rank += 1
    return rank


def boundary_matrices(surface) -> tuple[np.ndarray, np.ndarray]:
    """Dense d1 (V x E) and d2 (E x F) over GF(2) from the raw cell lists."""
    d1 = np.zeros((surface.num_vertices, len(surface.edges)), dtype=np.uint8)
    for e, (a, b) in enumerate(surface.edges):
        d1[a, e] ^= 1
        d1[b, e] ^= 1
    d2 = np.zeros((len(surface.edges), len(surface.faces)), dtype=np.uint8)
    for f, walk in enumerate(surface.faces):
        for e, _ in walk:
            d2[e, f] ^= 1
    return d1, d2


def h1_rank(surface) -> int:
    d1, d2 = boundary_matrices(surface)
    return len(surface.edges) - gf2_rank(d1) - gf2_rank(d2)


def chain_vector(curve, num_edges: int) -> np.ndarray:
    v = np.zeros(num_edges, dtype=np.uint8)
    for e, _ in curve.walk:
        v[e] ^= 1
    return v


def homology_span(surface, curves) -> int:
    """Dimension of the span of ``curves`` in H1 = rank([d2 | curves]) - rank(d2)."""
    _, d2 = boundary_matrices(surface)
    if not curves:
        return 0
    cols = np.stack([chain_vector(c, len(surface.edges)) for c in curves], axis=1)
    return gf2_rank(np.concatenate([d2, cols], axis=1)) - gf2_rank(d2)


def homologous(surface, a, b) -> bool:
    _, d2 = boundary_matrices(surface)
    diff = chain_vector(a, len(surface.edges)) ^ chain_vector(b, len(surface.edges))
    return gf2_rank(np.concatenate([d2, diff[:, None]], axis=1)) == gf2_rank(d2)


def line_multigraph(g, colors) -> nx.MultiGraph:
    """Nodes ('b', k) / ('w', k); one edge per line of the given colors."""
    G = nx.MultiGraph()
    for k in range(g.half_size):
        G.add_node(("b", k))
        G.add_node(("w", k))
    for c in colors:
        for b, w in enumerate(g.matchings[c]):
            G.add_edge(("b", b), ("w", w), color=c)
    return G


def cycle_count(g, i: int, j: int) -> int:
    return nx.number_connected_components(line_multigraph(g, (i, j)))


def jacket_genus(g, order) -> int:
    """Genus of the ribbon surface with faces the consecutive-pair cycles of ``order``."""
    k = len(order)
    faces = sum(cycle_count(g, order[t], order[(t + 1) % k]) for t in range(k))
    chi = 2 * g.half_size - k * g.half_size + faces
    assert chi % 2 == 0
    return (2 - chi) // 2


def jacket_orders(colors) -> list[tuple[int, ...]]:
    """Cyclic orders up to rotation and reversal: fix the first color, keep one of each mirror pair."""
    first, *rest = colors
    seen, out = set(), []
    for perm in itertools.permutations(rest):
        order = (first, *perm)
        mirror = (first, *reversed(perm))
        if mirror in seen:
            continue
        seen.add(order)
        out.append(order)
    return out


def degree(g) -> int:
    return sum(jacket_genus(g, o) for o in jacket_orders(list(g.colors)))


def bubble_count(g, colors) -> int:
    return nx.number_connected_components(line_multigraph(g, colors))


def loop_rank(g, c: int) -> int:
    """Cycle rank of the graph of c-hat-bubbles joined by c-lines."""
    rest = [x for x in g.colors if x != c]
    comps = list(nx.connected_components(line_multigraph(g, rest)))
    return g.half_size - len(comps) + 1
