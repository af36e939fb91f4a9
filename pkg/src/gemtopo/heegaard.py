"""Heegaard splittings of rank-3 graphs: jacket surfaces and the dual-skeleton splitting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BadPairPartition, WrongRank
from .gem_core import ColoredGraph, require_valid
from .subcomplex import BicoloredCycle, Jacket, bicolored_cycles, jacket

Pair = tuple[int, int]


@dataclass(frozen=True)
class HeegaardData:
    pairs: tuple[Pair, Pair]
    jacket: Jacket
    genus_sigma: int
    genus_sigma_reduced: int
    alpha_candidates: tuple[BicoloredCycle, ...]
    beta_candidates: tuple[BicoloredCycle, ...]
    skeleton_genus: int
    comparison: int


def pair_partitions(colors: Sequence[int]) -> list[tuple[Pair, Pair]]:
    """The three ways of splitting four colors into two pairs, in fixed lexical order."""
    a, b, c, d = sorted(colors)
    return [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))]


def check_partition(colors: Sequence[int], pairs: tuple[Sequence[int], Sequence[int]]) -> tuple[Pair, Pair]:
    p, q = (tuple(sorted(x)) for x in pairs)
    if len(p) != 2 or len(q) != 2 or set(p) & set(q) or set(p) | set(q) != set(colors):
        raise BadPairPartition(f"{pairs} is not a partition of {sorted(colors)} into two pairs")
    return p, q  # type: ignore[return-value]


def jacket_order(pairs: tuple[Pair, Pair]) -> tuple[int, int, int, int]:
    """Cyclic order in which both pairs sit on opposite positions: (j1, k1, j2, k2)."""
    (j1, j2), (k1, k2) = pairs
    return (j1, k1, j2, k2)


def _require_rank3(g: ColoredGraph) -> None:
    if g.rank != 3:
        raise WrongRank(f"expected a rank-3 graph, got rank {g.rank}")
    require_valid(g)


def dual_skeleton_genus(g: ColoredGraph) -> int:
    """Genus of the splitting whose spines are the 1-skeletons of T and of its dual.

    The dual 1-skeleton is the graph itself: one vertex per node (tetrahedron) and
    one edge per line (triangle).  Its loop number is E - V + 1.
    """
    _require_rank3(g)
    v_dual = g.num_nodes
    e_dual = g.num_lines
    return e_dual - v_dual + 1


def heegaard_split(g: ColoredGraph, pairs: tuple[Sequence[int], Sequence[int]]) -> HeegaardData:
    _require_rank3(g)
    p, q = check_partition(g.colors, pairs)
    jac = jacket(g, jacket_order((p, q)))

    v, e, f = g.num_nodes, g.num_lines, len(jac.faces)
    genus = (2 - (v - e + f)) // 2
    # 2E = 4V for rank 3, so the edge count drops out.
    reduced_twice = 2 + v - f
    if (2 - (v - e + f)) % 2 or reduced_twice % 2:
        raise AssertionError("odd Euler characteristic on an orientable jacket")
    reduced = reduced_twice // 2
    if genus != reduced:
        raise AssertionError(f"jacket genus mismatch: {genus} vs {reduced}")

    skeleton = dual_skeleton_genus(g)
    comparison_twice = -(v + f)
    return HeegaardData(
        pairs=(p, q),
        jacket=jac,
        genus_sigma=genus,
        genus_sigma_reduced=reduced,
        alpha_candidates=tuple(bicolored_cycles(g, *p)),
        beta_candidates=tuple(bicolored_cycles(g, *q)),
        skeleton_genus=skeleton,
        comparison=comparison_twice // 2,
    )


def heegaard_table(g: ColoredGraph) -> list[HeegaardData]:
    return [heegaard_split(g, pp) for pp in pair_partitions(g.colors)]
