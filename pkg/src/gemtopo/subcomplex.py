"""Bubbles, bicolored cycles, jackets and the Gurau degree."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyColorSet, SameColor, TooFewColors
from .gem_core import ColoredGraph, components, require_valid


@dataclass(frozen=True)
class Bubble:
    """One connected component of the subgraph spanned by ``colors``.

    ``as_graph`` renumbers the component's black and white nodes in increasing
    order and relabels ``colors[k]`` to ``k``.  ``black_nodes``/``white_nodes``
    map the renumbered indices back to the parent's black/white indices.
    """

    index: int
    colors: tuple[int, ...]
    nodes: tuple[int, ...]
    black_nodes: tuple[int, ...]
    white_nodes: tuple[int, ...]
    as_graph: ColoredGraph

    @property
    def rank(self) -> int:
        return len(self.colors) - 1


@dataclass(frozen=True)
class BicoloredCycle:
    colors: tuple[int, int]
    walk: tuple[int, ...]  # alternating black/white node ids, starting at a black node

    @property
    def length(self) -> int:
        return len(self.walk)

    @property
    def blacks(self) -> tuple[int, ...]:
        return self.walk[::2]


@dataclass(frozen=True)
class Jacket:
    order: tuple[int, ...]
    faces: tuple[BicoloredCycle, ...]
    euler: int
    genus: int

    @property
    def missing_pairs(self) -> list[tuple[int, int]]:
        """Color pairs that are *not* consecutive in the cyclic order."""
        k = len(self.order)
        present = {frozenset((self.order[i], self.order[(i + 1) % k])) for i in range(k)}
        return [p for p in itertools.combinations(sorted(self.order), 2) if frozenset(p) not in present]


CERTIFIED_SPHERE = "CertifiedSphere"
SURFACE = "Surface"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class BubbleTopology:
    verdict: str
    evidence: str
    genus: int | None = None

    @property
    def certified_sphere(self) -> bool:
        # An exactly classified surface of genus 0 is a sphere too.
        return self.verdict == CERTIFIED_SPHERE or (self.verdict == SURFACE and self.genus == 0)

    def __str__(self) -> str:
        if self.verdict == SURFACE:
            return f"Surface(genus {self.genus})"
        return self.verdict


def bubbles(g: ColoredGraph, colors: Iterable[int]) -> list[Bubble]:
    colors = tuple(sorted(set(colors)))
    if not colors:
        raise EmptyColorSet("color set is empty")
    if len(colors) < 2:
        raise TooFewColors(f"a bubble needs at least 2 colors, got {colors}")
    n = g.half_size
    out = []
    for idx, comp in enumerate(components(g, colors)):
        blacks = tuple(u for u in comp if u < n)
        whites = tuple(u - n for u in comp if u >= n)
        w_index = {w: k for k, w in enumerate(whites)}
        perms = tuple(tuple(w_index[g.matchings[c][b]] for b in blacks) for c in colors)
        sub = ColoredGraph(len(colors) - 1, len(blacks), perms)
        out.append(Bubble(idx, colors, comp, blacks, whites, sub))
    return out


def bicolored_cycles(g: ColoredGraph, i: int, j: int) -> list[BicoloredCycle]:
    """Orbits of ``inverse(pi_j) o pi_i`` on black nodes, as closed alternating walks."""
    if i == j:
        raise SameColor(f"bicolored cycle needs two distinct colors, got ({i}, {j})")
    n = g.half_size
    pi, inv_j = g.matchings[i], g.inverses[j]
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        walk = []
        b = start
        while not seen[b]:
            seen[b] = True
            w = pi[b]
            walk += [b, n + w]
            b = inv_j[w]
        out.append(BicoloredCycle((i, j), tuple(walk)))
    return out


def count_cycles(g: ColoredGraph, i: int, j: int) -> int:
    pi, inv_j = g.matchings[i], g.inverses[j]
    seen = [False] * g.half_size
    count = 0
    for start in range(g.half_size):
        if seen[start]:
            continue
        count += 1
        b = start
        while not seen[b]:
            seen[b] = True
            b = inv_j[pi[b]]
    return count


def canonical_order(order: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest rotation or reversal of a cyclic color order."""
    k = len(order)
    seqs = []
    for seq in (tuple(order), tuple(reversed(order))):
        seqs += [seq[r:] + seq[:r] for r in range(k)]
    return min(seqs)


def cyclic_orders(colors: Sequence[int]) -> list[tuple[int, ...]]:
    """All cyclic orders of ``colors`` modulo rotation and reversal, canonical and sorted."""
    first, *rest = sorted(colors)
    if len(rest) < 2:
        return [tuple(sorted(colors))]
    orders = {(first,) + p for p in itertools.permutations(rest) if p[0] < p[-1]}
    return sorted(orders)


def jacket(g: ColoredGraph, order: Sequence[int]) -> Jacket:
    order = canonical_order(order)
    k = len(order)
    pairs = [(order[t], order[(t + 1) % k]) for t in range(k)] if k > 2 else [tuple(order)]
    faces = tuple(c for a, b in pairs for c in bicolored_cycles(g, a, b))
    chi = g.num_nodes - g.num_lines + len(faces)
    return Jacket(order, faces, chi, (2 - chi) // 2)


def jacket_genus(g: ColoredGraph, order: Sequence[int]) -> int:
    """Genus of one jacket without materializing its faces."""
    k = len(order)
    faces = sum(count_cycles(g, order[t], order[(t + 1) % k]) for t in range(k))
    chi = g.num_nodes - g.num_lines + faces
    return (2 - chi) // 2


def jackets(g: ColoredGraph) -> list[Jacket]:
    require_valid(g)
    return [jacket(g, order) for order in cyclic_orders(g.colors)]


def expected_jacket_count(d: int) -> int:
    return math.factorial(d) // 2


def gurau_degree(g: ColoredGraph) -> int:
    require_valid(g)
    return sum(jacket_genus(g, order) for order in cyclic_orders(g.colors))


def classify_bubble(b: Bubble | ColoredGraph) -> BubbleTopology:
    """Sound but incomplete topology certificate for a bubble.

    Rank 2 bubbles are surfaces and are classified exactly.  From rank 3 on,
    only degree 0 is used as evidence for a sphere; anything else stays
    ``Unknown`` because positive degree does not rule out a sphere.
    """
    g = b.as_graph if isinstance(b, Bubble) else b
    if g.rank < 2:
        raise ValueError("bubbles with fewer than 3 colors are cycles, not classifiable surfaces")
    if g.rank == 2:
        genus = jacket_genus(g, (0, 1, 2))
        return BubbleTopology(SURFACE, f"jacket genus {genus}", genus)
    omega = gurau_degree(g)
    if omega == 0:
        return BubbleTopology(CERTIFIED_SPHERE, "degree 0")
    return BubbleTopology(UNKNOWN, f"degree {omega}")


@dataclass(frozen=True)
class BubbleReport:
    missing_color: int
    bubble: Bubble
    topology: BubbleTopology
    # rank 4 only: are all 3-bubbles of this bubble certified spheres?
    links_certified: bool | None = None


CERTIFIED_MANIFOLD = "CertifiedManifold"


@dataclass(frozen=True)
class ManifoldReport:
    verdict: str
    bubbles: tuple[BubbleReport, ...]

    @property
    def uncertified(self) -> list[BubbleReport]:
        return [r for r in self.bubbles if not r.topology.certified_sphere]


def _all_subbubbles_certified(b: Bubble) -> bool:
    sub = b.as_graph
    for missing in sub.colors:
        for inner in bubbles(sub, [c for c in sub.colors if c != missing]):
            if not classify_bubble(inner).certified_sphere:
                return False
    return True


def manifold_report(g: ColoredGraph) -> ManifoldReport:
    require_valid(g)
    reports = []
    for missing in g.colors:
        for b in bubbles(g, [c for c in g.colors if c != missing]):
            topo = classify_bubble(b)
            links = _all_subbubbles_certified(b) if g.rank == 4 else None
            reports.append(BubbleReport(missing, b, topo, links))
    ok = all(r.topology.certified_sphere for r in reports)
    return ManifoldReport(CERTIFIED_MANIFOLD if ok else UNKNOWN, tuple(reports))
