"""Closed combinatorial surfaces, edge-walk curves and GF(2) first homology.

Chains over GF(2) are Python ints used as bitsets (bit ``e`` is edge ``e``).
Face boundaries are walks of ``(edge, direction)`` steps, ``direction`` being
+1 when the edge is traversed from ``edges[e][0]`` to ``edges[e][1]``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CurveNotOnSurface, NotClosed, NotConnected

Step = tuple[int, int]

ALPHA = "alpha"
BETA = "beta"
GAMMA = "gamma"
FAMILIES = (ALPHA, BETA, GAMMA)

STABILIZATION = "Stabilization"
JACKET_CYCLE = "JacketCycle"
ZERO_I_CYCLE = "ZeroICycle"
_PROVENANCE_RANK = {STABILIZATION: 0, JACKET_CYCLE: 1, ZERO_I_CYCLE: 2}


@dataclass(frozen=True)
class CwSurface:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[Step, ...], ...]
    vertex_labels: tuple[str, ...] = ()
    edge_labels: tuple[str, ...] = ()
    face_labels: tuple[str, ...] = ()

    @property
    def euler_characteristic(self) -> int:
        return self.num_vertices - len(self.edges) + len(self.faces)

    def head(self, step: Step) -> int:
        e, direction = step
        return self.edges[e][1] if direction > 0 else self.edges[e][0]

    def tail(self, step: Step) -> int:
        e, direction = step
        return self.edges[e][0] if direction > 0 else self.edges[e][1]


@dataclass(frozen=True)
class Provenance:
    kind: str
    index: int = 0
    line: str | None = None  # "c:b", 1-based
    bubble: int | None = None
    pair: tuple[int, int] | None = None
    color: int | None = None

    def sort_key(self) -> tuple:
        return (_PROVENANCE_RANK[self.kind], self.bubble if self.bubble is not None else -1,
                self.color if self.color is not None else -1, self.index)

    def describe(self) -> str:
        if self.kind == STABILIZATION:
            return f"Stabilization(line {self.line})"
        if self.kind == JACKET_CYCLE:
            return f"JacketCycle(pair {self.pair}, bubble {self.bubble})"
        return f"ZeroICycle(color {self.color})"


@dataclass(frozen=True)
class CurveOnSurface:
    walk: tuple[Step, ...]
    family: str
    provenance: Provenance

    def chain(self) -> int:
        v = 0
        for e, _ in self.walk:
            v ^= 1 << e
        return v


# -- GF(2) linear algebra on int bitsets ----------------------------------------


class GF2Basis:
    """Echelon basis of a GF(2) subspace, keyed by leading bit."""

    def __init__(self, vectors: Iterable[int] = ()):
        self.rows: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: int) -> int:
        """Normal form: ``v`` minus every basis row whose pivot bit it contains."""
        for lead in sorted(self.rows, reverse=True):
            if (v >> lead) & 1:
                v ^= self.rows[lead]
        return v

    def add(self, v: int) -> bool:
        while v:
            lead = v.bit_length() - 1
            row = self.rows.get(lead)
            if row is None:
                self.rows[lead] = v
                return True
            v ^= row
        return False


def gf2_rank(vectors: Iterable[int]) -> int:
    return len(GF2Basis(vectors))


def boundary_1(s: CwSurface) -> list[int]:
    """Rows of the edge -> vertex boundary map, one bitset over vertices per edge."""
    return [(1 << u) ^ (1 << v) for u, v in s.edges]


def boundary_2(s: CwSurface) -> list[int]:
    """Rows of the face -> edge boundary map, one bitset over edges per face."""
    rows = []
    for walk in s.faces:
        v = 0
        for e, _ in walk:
            v ^= 1 << e
        rows.append(v)
    return rows


# -- topology -------------------------------------------------------------------


def _edge_sides(s: CwSurface) -> dict[int, list[int]]:
    sides: dict[int, list[int]] = defaultdict(list)
    for f, walk in enumerate(s.faces):
        for e, direction in walk:
            sides[e].append(direction)
    return sides


def check_closed(s: CwSurface) -> None:
    sides = _edge_sides(s)
    for e in range(len(s.edges)):
        if len(sides.get(e, ())) != 2:
            raise NotClosed(f"edge {e} lies on {len(sides.get(e, ()))} face sides")
    for f, walk in enumerate(s.faces):
        for a, b in zip(walk, walk[1:] + walk[:1]):
            if s.head(a) != s.tail(b):
                raise NotClosed(f"face {f} boundary is not a closed walk")


def is_connected(s: CwSurface) -> bool:
    parent = list(range(s.num_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in s.edges:
        parent[find(u)] = find(v)
    return len({find(x) for x in range(s.num_vertices)}) <= 1


def is_oriented(s: CwSurface) -> bool:
    """True when every edge is traversed once in each direction by the face walks."""
    return all(sorted(d) == [-1, 1] for d in _edge_sides(s).values())


def euler_genus(s: CwSurface) -> tuple[int, int]:
    check_closed(s)
    if not is_connected(s):
        raise NotConnected("surface has more than one component")
    chi = s.euler_characteristic
    if chi % 2:
        raise NotClosed(f"odd Euler characteristic {chi} cannot belong to a closed orientable surface")
    return chi, (2 - chi) // 2


def cycle_space_rank(s: CwSurface) -> int:
    """dim ker(boundary_1)."""
    return len(s.edges) - gf2_rank(boundary_1(s))


def h1_rank(s: CwSurface) -> int:
    return cycle_space_rank(s) - gf2_rank(boundary_2(s))


def check_curve(s: CwSurface, curve: CurveOnSurface) -> None:
    walk = curve.walk
    if not walk:
        raise CurveNotOnSurface("empty walk")
    for e, direction in walk:
        if not 0 <= e < len(s.edges) or direction not in (1, -1):
            raise CurveNotOnSurface(f"step {(e, direction)} is not an edge of the surface")
    for a, b in zip(walk, walk[1:] + walk[:1]):
        if s.head(a) != s.tail(b):
            raise CurveNotOnSurface(f"{curve.provenance.describe()} is not a closed walk")


@dataclass
class HomologyResult:
    h1_rank: int
    classes: list[int]
    family_ranks: dict[str, int]


def h1_rank_and_classes(s: CwSurface, curves: Sequence[CurveOnSurface]) -> HomologyResult:
    """Class of every curve in H1(s; GF(2)) and the rank spanned by each family.

    A class is the normal form of the curve's edge chain modulo the image of the
    face boundary map, so two curves are homologous iff their classes are equal.
    """
    for c in curves:
        check_curve(s, c)
    faces = GF2Basis(boundary_2(s))
    classes = [faces.reduce(c.chain()) for c in curves]
    ranks = {}
    for fam in FAMILIES:
        ranks[fam] = gf2_rank(cls for c, cls in zip(curves, classes) if c.family == fam)
    return HomologyResult(h1_rank(s), classes, ranks)


@dataclass
class Selection:
    target: int
    selected: dict[str, list[int]] = field(default_factory=dict)
    failures: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def selection_order(curves: Sequence[CurveOnSurface]) -> list[int]:
    return sorted(range(len(curves)), key=lambda i: (curves[i].provenance.sort_key(), i))


def select_independent(s: CwSurface, curves: Sequence[CurveOnSurface], target: int) -> Selection:
    """Greedy choice of ``target`` homologically independent curves per family.

    Candidates are scanned with stabilization meridians first, then jacket
    cycles by bubble, then {c,i}-cycles by color.  A family whose candidates
    span less than ``target`` is reported in ``failures`` with its rank.
    """
    result = h1_rank_and_classes(s, curves)
    sel = Selection(target)
    order = selection_order(curves)
    for fam in FAMILIES:
        basis = GF2Basis()
        chosen: list[int] = []
        for i in order:
            if len(chosen) == target:
                break
            if curves[i].family == fam and basis.add(result.classes[i]):
                chosen.append(i)
        sel.selected[fam] = chosen
        if len(chosen) < target:
            sel.failures[fam] = len(chosen)
    return sel


def cut_is_connected(s: CwSurface, curves: Iterable[CurveOnSurface]) -> bool:
    """Whether cutting ``s`` along the curves' edges leaves a connected complex.

    Faces stay glued across every edge not used by a curve; the cut complex is
    connected iff this face-adjacency graph is.
    """
    cut = {e for c in curves for e, _ in c.walk}
    owner: dict[int, list[int]] = defaultdict(list)
    for f, walk in enumerate(s.faces):
        for e, _ in walk:
            owner[e].append(f)
    parent = list(range(len(s.faces)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e, fs in owner.items():
        if e not in cut and len(fs) == 2:
            parent[find(fs[0])] = find(fs[1])
    return len({find(f) for f in range(len(s.faces))}) <= 1
