"""Trisection diagrams of rank-4 graphs.

For a special color ``c`` and a split of the other four colors into pairs
``{j1,j2} | {k1,k2}``, every c-hat bubble carries the jacket quadrangulation
with cyclic side order ``(j1, k1, j2, k2)``: one square per node, one edge per
line of color != c, one vertex per bicolored cycle of a mixed pair.  Each
square loses a central disc, and every c-colored line becomes a tube joining
the two discs of its endpoints.  The result is the central surface.

Cell layout of a square ``u`` (side ``t`` has color ``order[t]``)::

    corner C_t  --side t-->  corner C_{t+1}
        |D_t                     |D_{t+1}
    inner I_t   --arc A_t-->  inner I_{t+1}

Corner ``C_t`` is the ``{order[t-1], order[t]}``-cycle through ``u``.  A tube
of the c-line ``(b, w)`` has four longitudinal edges ``T_t: I_t(b) -> I_t(w)``
and four rectangles, one per inner arc.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import BadPairPartition, WrongRank
from .gem_core import ColoredGraph, LineId, require_valid
from .heegaard import check_partition, jacket_order, pair_partitions
from .subcomplex import (
    Bubble,
    ManifoldReport,
    bicolored_cycles,
    bubbles,
    jacket_genus,
    manifold_report,
)
from .surface import (
    ALPHA,
    BETA,
    GAMMA,
    JACKET_CYCLE,
    STABILIZATION,
    ZERO_I_CYCLE,
    CurveOnSurface,
    CwSurface,
    HomologyResult,
    Provenance,
    Selection,
    euler_genus,
    h1_rank_and_classes,
    select_independent,
)

TRISECTION = "Trisection"
QUASI_TRISECTION = "QuasiTrisection"
UNCERTIFIED = "Uncertified"

ALL_SPHERE_BUBBLES = "AllSphereBubbles"
IN_GS = "InGs"
IN_GS_BAR = "InGsBar"
OUT_OF_SCOPE = "OutOfScope"


@dataclass(frozen=True)
class TrisectionChoice:
    color: int
    pairs: tuple[tuple[int, int], tuple[int, int]]

    @property
    def order(self) -> tuple[int, int, int, int]:
        return jacket_order(self.pairs)

    def __str__(self) -> str:
        (a, b), (c, d) = self.pairs
        return f"c={self.color} {{{a},{b}}}|{{{c},{d}}}"


def make_choice(g: ColoredGraph, color: int, pairs: Sequence[Sequence[int]]) -> TrisectionChoice:
    _require_rank4(g)
    if not 0 <= color <= g.rank:
        raise BadPairPartition(f"color {color} out of range 0..{g.rank}")
    rest = [x for x in g.colors if x != color]
    return TrisectionChoice(color, check_partition(rest, (pairs[0], pairs[1])))


def all_choices(g: ColoredGraph) -> list[TrisectionChoice]:
    out = []
    for c in g.colors:
        rest = [x for x in g.colors if x != c]
        out += [TrisectionChoice(c, pp) for pp in pair_partitions(rest)]
    return out


def _require_rank4(g: ColoredGraph) -> None:
    if g.rank != 4:
        raise WrongRank(f"expected a rank-4 graph, got rank {g.rank}")
    require_valid(g)


# -- collapsed graph and central genus ---------------------------------------------


@dataclass(frozen=True)
class CollapsedGraph:
    color: int
    nodes: tuple[Bubble, ...]
    edges: tuple[tuple[int, int, LineId], ...]

    @property
    def loop_rank(self) -> int:
        return len(self.edges) - len(self.nodes) + 1


def collapse(g: ColoredGraph, c: int) -> CollapsedGraph:
    """Shrink every c-hat bubble to a point; the c-colored lines become the edges."""
    _require_rank4(g)
    bubs = bubbles(g, [x for x in g.colors if x != c])
    owner = {}
    for b in bubs:
        for u in b.nodes:
            owner[u] = b.index
    edges = []
    for black in range(g.half_size):
        u, w = g.endpoints(LineId(c, black))
        edges.append((owner[u], owner[w], LineId(c, black)))
    return CollapsedGraph(c, tuple(bubs), tuple(edges))


def bubble_jacket_genus(b: Bubble, order: Sequence[int]) -> int:
    return jacket_genus(b.as_graph, [b.colors.index(x) for x in order])


def central_genus(g: ColoredGraph, choice: TrisectionChoice) -> tuple[int, list[int], int]:
    """``(g_c, bubble genera, L)`` with g_c = sum of bubble jacket genera + L."""
    cg = collapse(g, choice.color)
    genera = [bubble_jacket_genus(b, choice.order) for b in cg.nodes]
    L = cg.loop_rank
    return sum(genera) + L, genera, L


# -- central surface ---------------------------------------------------------------


@dataclass
class CentralSurface:
    """The CW central surface plus the cell ids needed to draw curves on it."""

    graph: ColoredGraph
    choice: TrisectionChoice
    surface: CwSurface
    corner: dict[tuple[int, int], int]  # (node, t) -> vertex
    inner: dict[tuple[int, int], int]  # (node, t) -> vertex
    side: dict[LineId, int]  # non-special line -> edge
    diagonal: dict[tuple[int, int], int]  # (node, t) -> edge C_t -> I_t
    arc: dict[tuple[int, int], int]  # (node, t) -> edge I_t -> I_{t+1}
    tube: dict[tuple[LineId, int], int]  # (special line, t) -> edge I_t(b) -> I_t(w)
    bubble_of: dict[int, int] = field(default_factory=dict)

    def side_edge(self, node: int, t: int) -> int:
        color = self.choice.order[t]
        return self.side[self.graph.line_at(node, color)]


def build_surface(g: ColoredGraph, choice: TrisectionChoice) -> CentralSurface:
    _require_rank4(g)
    order = choice.order
    c = choice.color
    n = g.half_size

    vlabels: list[str] = []
    corner: dict[tuple[int, int], int] = {}
    for t in range(4):
        pair = (order[t - 1], order[t])
        for k, cyc in enumerate(bicolored_cycles(g, *pair)):
            vid = len(vlabels)
            vlabels.append(f"cycle{{{pair[0]},{pair[1]}}}#{k}")
            for u in cyc.walk:
                corner[(u, t)] = vid
    inner: dict[tuple[int, int], int] = {}
    for u in range(2 * n):
        for t in range(4):
            inner[(u, t)] = len(vlabels)
            vlabels.append(f"inner {g.node_label(u)}/{t}")

    edges: list[tuple[int, int]] = []
    elabels: list[str] = []

    def new_edge(a: int, b: int, label: str) -> int:
        edges.append((a, b))
        elabels.append(label)
        return len(edges) - 1

    side: dict[LineId, int] = {}
    for line in g.lines():
        if line.color == c:
            continue
        t = order.index(line.color)
        b = line.black
        side[line] = new_edge(corner[(b, t)], corner[(b, (t + 1) % 4)], f"line {line}")
    diagonal: dict[tuple[int, int], int] = {}
    arc: dict[tuple[int, int], int] = {}
    for u in range(2 * n):
        for t in range(4):
            diagonal[(u, t)] = new_edge(corner[(u, t)], inner[(u, t)], f"diagonal {g.node_label(u)}/{t}")
        for t in range(4):
            arc[(u, t)] = new_edge(inner[(u, t)], inner[(u, (t + 1) % 4)], f"arc {g.node_label(u)}/{t}")
    tube: dict[tuple[LineId, int], int] = {}
    for black in range(n):
        line = LineId(c, black)
        u, w = g.endpoints(line)
        for t in range(4):
            tube[(line, t)] = new_edge(inner[(u, t)], inner[(w, t)], f"tube {line}/{t}")

    faces: list[tuple[tuple[int, int], ...]] = []
    flabels: list[str] = []
    for u in range(2 * n):
        for t in range(4):
            s = side[g.line_at(u, order[t])]
            walk = ((s, 1), (diagonal[(u, (t + 1) % 4)], 1), (arc[(u, t)], -1), (diagonal[(u, t)], -1))
            if not g.is_black(u):
                walk = tuple((e, -d) for e, d in reversed(walk))
            faces.append(walk)
            flabels.append(f"square {g.node_label(u)}/{t}")
    for black in range(n):
        line = LineId(c, black)
        u, w = g.endpoints(line)
        for t in range(4):
            faces.append(((arc[(u, t)], 1), (tube[(line, (t + 1) % 4)], 1), (arc[(w, t)], -1), (tube[(line, t)], -1)))
            flabels.append(f"tube {line}/{t}")

    surface = CwSurface(len(vlabels), tuple(edges), tuple(faces), tuple(vlabels), tuple(elabels), tuple(flabels))
    cs = CentralSurface(g, choice, surface, corner, inner, side, diagonal, arc, tube)
    for b in collapse(g, c).nodes:
        for u in b.nodes:
            cs.bubble_of[u] = b.index
    return cs


# -- curves -------------------------------------------------------------------------


def candidate_curves(cs: CentralSurface) -> list[CurveOnSurface]:
    """Every alpha, beta and gamma candidate, as closed edge walks.

    Jacket strands cross each square between opposite sides; they are drawn
    pushed onto the adjacent side edge (alpha onto the k1 side, beta onto the
    j2 side), which keeps them off the removed discs.  Meridians are the inner
    circles at the two ends of each tube.  A gamma curve follows a
    {c,i}-cycle: along a tube, then through the corner of the color-i side into
    the next square.
    """
    g, choice = cs.graph, cs.choice
    (j1, j2), (k1, k2) = choice.pairs
    c = choice.color
    order = choice.order
    curves: list[CurveOnSurface] = []

    for black in range(g.half_size):
        line = LineId(c, black)
        u, w = g.endpoints(line)
        for fam, node in ((ALPHA, u), (BETA, w)):
            walk = tuple((cs.arc[(node, t)], 1) for t in range(4))
            curves.append(CurveOnSurface(walk, fam, Provenance(STABILIZATION, index=black, line=str(line))))

    for fam, pair, pushed_side in ((ALPHA, (j1, j2), 1), (BETA, (k1, k2), 2)):
        counters: dict[int, int] = {}
        for cyc in bicolored_cycles(g, *pair):
            walk = []
            for idx in range(0, cyc.length, 2):
                b, w = cyc.walk[idx], cyc.walk[idx + 1]
                walk += [(cs.side_edge(b, pushed_side), -1), (cs.side_edge(w, pushed_side), 1)]
            bubble = cs.bubble_of[cyc.walk[0]]
            k = counters.get(bubble, 0)
            counters[bubble] = k + 1
            curves.append(CurveOnSurface(tuple(walk), fam, Provenance(JACKET_CYCLE, index=k, bubble=bubble, pair=pair)))

    for i in order:
        s = order.index(i)
        for k, cyc in enumerate(bicolored_cycles(g, c, i)):
            walk = []
            m = cyc.length
            for idx in range(0, m, 2):
                b, w = cyc.walk[idx], cyc.walk[idx + 1]
                b_next = cyc.walk[(idx + 2) % m]
                walk += [(cs.tube[(LineId(c, b), s)], 1), (cs.diagonal[(w, s)], -1), (cs.diagonal[(b_next, s)], 1)]
            curves.append(CurveOnSurface(tuple(walk), GAMMA, Provenance(ZERO_I_CYCLE, index=k, color=i, pair=(c, i))))
    curves.sort(key=lambda cv: (("alpha", "beta", "gamma").index(cv.family), cv.provenance.sort_key()))
    return curves


# -- diagrams --------------------------------------------------------------------------


@dataclass
class TrisectionDiagram:
    choice: TrisectionChoice
    central: CentralSurface
    bubble_genera: list[int]
    loop_rank: int
    genus: int
    candidates: list[CurveOnSurface]
    homology: HomologyResult
    selection: Selection
    status: str
    uncertified: list[str]

    @property
    def surface(self) -> CwSurface:
        return self.central.surface

    def selected(self, family: str) -> list[CurveOnSurface]:
        return [self.candidates[i] for i in self.selection.selected[family]]


def _status(report: ManifoldReport, c: int) -> tuple[str, list[str]]:
    bad = report.uncertified
    labels = [f"bubble {r.bubble.index} missing color {r.missing_color} ({r.topology})" for r in bad]
    if not bad:
        return TRISECTION, []
    if all(r.missing_color == c for r in bad):
        return QUASI_TRISECTION, labels
    return UNCERTIFIED, labels


def trisect(g: ColoredGraph, choice: TrisectionChoice, report: ManifoldReport | None = None) -> TrisectionDiagram:
    _require_rank4(g)
    g_c, genera, L = central_genus(g, choice)
    cs = build_surface(g, choice)
    _, surface_genus = euler_genus(cs.surface)
    if surface_genus != g_c:
        raise AssertionError(f"central surface has genus {surface_genus}, expected {g_c}")
    curves = candidate_curves(cs)
    homology = h1_rank_and_classes(cs.surface, curves)
    selection = select_independent(cs.surface, curves, g_c)
    status, uncertified = _status(report or manifold_report(g), choice.color)
    return TrisectionDiagram(choice, cs, genera, L, g_c, curves, homology, selection, status, uncertified)


def enumerate_all(g: ColoredGraph) -> list[TrisectionDiagram]:
    report = manifold_report(g)
    return [trisect(g, ch, report) for ch in all_choices(g)]


@dataclass(frozen=True)
class QuasiClass:
    color: int
    kind: str

    def __str__(self) -> str:
        if self.kind in (IN_GS, IN_GS_BAR):
            return f"{self.kind}({self.color})"
        return self.kind


def quasi_check(g: ColoredGraph) -> list[QuasiClass]:
    """Per special color, which graph class the certificate places ``g`` in."""
    _require_rank4(g)
    report = manifold_report(g)
    bad = report.uncertified
    out = []
    for c in g.colors:
        if not bad:
            kind = ALL_SPHERE_BUBBLES
        elif all(r.missing_color == c for r in bad):
            n_hat = sum(1 for r in report.bubbles if r.missing_color == c)
            kind = IN_GS if n_hat == 1 else IN_GS_BAR
        else:
            kind = OUT_OF_SCOPE
        out.append(QuasiClass(c, kind))
    return out
