"""Colored graphs (GEMs): data model, ``.gem`` text format and structural queries.

A closed, bipartite (d+1)-colored graph on 2n nodes is stored as d+1
permutations of ``range(n)``.  ``matchings[c][b] = w`` means that the line of
color ``c`` leaving positive (black) node ``b`` ends on negative (white) node
``w``.  Internally everything is 0-based; the text format, the CLI and the JSON
output are 1-based.

Node ids used by the structural queries put the black nodes first:
black ``b`` is node ``b`` and white ``w`` is node ``n + w``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import BadRank, EmptyColorSet, GemSemanticError, GemSyntaxError, InvalidGraph, NoSuchLine

FORMAT_VERSION = 1

BAD_RANK = "BadRank"
MATCHING_NOT_BIJECTIVE = "MatchingNotBijective"
COLOR_COUNT_MISMATCH = "ColorCountMismatch"
DISCONNECTED = "Disconnected"


@dataclass(frozen=True, order=True)
class LineId:
    """A line addressed by its color and its black endpoint (0-based)."""

    color: int
    black: int

    def __str__(self) -> str:
        return f"{self.color}:{self.black + 1}"

    @classmethod
    def parse(cls, text: str) -> "LineId":
        """Parse the 1-based ``color:black`` notation used on the command line."""
        try:
            color, black = (int(part) for part in text.split(":"))
        except ValueError:
            raise ValueError(f"expected <color>:<black>, got {text!r}") from None
        return cls(color, black - 1)


@dataclass(frozen=True)
class Defect:
    kind: str
    location: str


@dataclass(frozen=True)
class ValidationReport:
    defects: tuple[Defect, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.defects

    def kinds(self) -> set[str]:
        return {d.kind for d in self.defects}


@dataclass(frozen=True)
class ColoredGraph:
    rank: int
    half_size: int
    matchings: tuple[tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self):
        # Accept any nested sequence but always store tuples so graphs hash.
        object.__setattr__(self, "matchings", tuple(tuple(m) for m in self.matchings))

    @property
    def colors(self) -> range:
        return range(self.rank + 1)

    @property
    def num_nodes(self) -> int:
        return 2 * self.half_size

    @property
    def num_lines(self) -> int:
        return sum(len(m) for m in self.matchings)

    @cached_property
    def inverses(self) -> tuple[tuple[int, ...], ...]:
        """``inverses[c][w]`` is the black endpoint of the c-line ending at white ``w``."""
        out = []
        for perm in self.matchings:
            inv = [0] * len(perm)
            for b, w in enumerate(perm):
                inv[w] = b
            out.append(tuple(inv))
        return tuple(out)

    def white_node(self, w: int) -> int:
        return self.half_size + w

    def is_black(self, node: int) -> bool:
        return node < self.half_size

    def neighbor(self, node: int, color: int) -> int:
        """Node reached from ``node`` along its line of the given color."""
        n = self.half_size
        if node < n:
            return n + self.matchings[color][node]
        return self.inverses[color][node - n]

    def line_at(self, node: int, color: int) -> LineId:
        if node < self.half_size:
            return LineId(color, node)
        return LineId(color, self.inverses[color][node - self.half_size])

    def lines(self) -> Iterator[LineId]:
        for c in self.colors:
            for b in range(self.half_size):
                yield LineId(c, b)

    def endpoints(self, line: LineId) -> tuple[int, int]:
        if not (0 <= line.color <= self.rank and 0 <= line.black < self.half_size):
            raise NoSuchLine(f"no line {line} in a rank-{self.rank} graph with {self.half_size} black nodes")
        return line.black, self.half_size + self.matchings[line.color][line.black]

    def node_label(self, node: int) -> str:
        if node < self.half_size:
            return f"b{node + 1}"
        return f"w{node - self.half_size + 1}"


# -- construction -------------------------------------------------------------


def generate_melon(d: int) -> ColoredGraph:
    """Two nodes sharing all d+1 lines."""
    if d < 2:
        raise BadRank(f"rank must be >= 2, got {d}")
    return ColoredGraph(d, 1, tuple((0,) for _ in range(d + 1)))


def random_graph(rank: int, half_size: int, rng: random.Random) -> ColoredGraph:
    perms = []
    for _ in range(rank + 1):
        p = list(range(half_size))
        rng.shuffle(p)
        perms.append(tuple(p))
    return ColoredGraph(rank, half_size, tuple(perms))


def random_connected(rank: int, half_size: int, rng: random.Random, max_tries: int = 10_000) -> ColoredGraph:
    """Uniform random matching tuple, rejection-sampled for connectivity."""
    for _ in range(max_tries):
        g = random_graph(rank, half_size, rng)
        if len(components(g, g.colors)) == 1:
            return g
    raise RuntimeError("could not sample a connected graph")


# -- text format --------------------------------------------------------------


def _header(lines: list[tuple[int, str]], idx: int, key: str) -> int:
    if idx >= len(lines):
        raise GemSyntaxError(lines[-1][0] if lines else 1, f"missing '{key}' header")
    lineno, text = lines[idx]
    parts = text.split()
    if len(parts) != 2 or parts[0] != key:
        raise GemSyntaxError(lineno, f"expected '{key} <int>', got {text!r}")
    try:
        return int(parts[1])
    except ValueError:
        raise GemSyntaxError(lineno, f"bad integer {parts[1]!r}") from None


def parse(text: str) -> ColoredGraph:
    """Parse ``.gem`` text.

    Disconnected graphs are accepted (``validate`` flags them); every other
    defect raises.
    """
    lines = [
        (i, raw.strip())
        for i, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    version = _header(lines, 0, "gem")
    if version != FORMAT_VERSION:
        raise GemSyntaxError(lines[0][0], f"unsupported format version {version}")
    d = _header(lines, 1, "rank")
    n = _header(lines, 2, "half")
    if d < 2:
        raise GemSemanticError(BAD_RANK, f"rank {d} < 2")
    if n < 1:
        raise GemSyntaxError(lines[2][0], f"half size must be >= 1, got {n}")

    table: list[list[int | None]] = [[None] * n for _ in range(d + 1)]
    for lineno, record in lines[3:]:
        parts = record.split()
        if len(parts) != 3:
            raise GemSyntaxError(lineno, f"expected '<color> <black> <white>', got {record!r}")
        try:
            c, b, w = (int(p) for p in parts)
        except ValueError:
            raise GemSyntaxError(lineno, f"non-integer token in {record!r}") from None
        if not 0 <= c <= d:
            raise GemSyntaxError(lineno, f"color {c} out of range 0..{d}")
        if not 1 <= b <= n:
            raise GemSyntaxError(lineno, f"black index {b} out of range 1..{n}")
        if not 1 <= w <= n:
            raise GemSyntaxError(lineno, f"white index {w} out of range 1..{n}")
        if table[c][b - 1] is not None:
            raise GemSemanticError(MATCHING_NOT_BIJECTIVE, f"duplicate line {c}:{b} (line {lineno})")
        table[c][b - 1] = w - 1

    for c, row in enumerate(table):
        if all(w is None for w in row):
            raise GemSemanticError(COLOR_COUNT_MISMATCH, f"no lines of color {c}")
        missing = [b + 1 for b, w in enumerate(row) if w is None]
        if missing:
            raise GemSemanticError(MATCHING_NOT_BIJECTIVE, f"color {c} missing black nodes {missing}")
        if len(set(row)) != n:
            raise GemSemanticError(MATCHING_NOT_BIJECTIVE, f"color {c} hits a white node twice")
    return ColoredGraph(d, n, tuple(tuple(row) for row in table))  # type: ignore[arg-type]


def serialize(g: ColoredGraph) -> str:
    out = [f"gem {FORMAT_VERSION}", f"rank {g.rank}", f"half {g.half_size}"]
    for c, perm in enumerate(g.matchings):
        for b, w in enumerate(perm):
            out.append(f"{c} {b + 1} {w + 1}")
    return "\n".join(out) + "\n"


# -- structure ----------------------------------------------------------------


def validate(g: ColoredGraph) -> ValidationReport:
    defects: list[Defect] = []
    if g.rank < 2:
        defects.append(Defect(BAD_RANK, f"rank {g.rank} < 2"))
    if len(g.matchings) != g.rank + 1:
        defects.append(Defect(COLOR_COUNT_MISMATCH, f"{len(g.matchings)} matchings for {g.rank + 1} colors"))
    structural_ok = not defects
    for c, perm in enumerate(g.matchings):
        if len(perm) != g.half_size or sorted(perm) != list(range(g.half_size)):
            defects.append(Defect(MATCHING_NOT_BIJECTIVE, f"color {c}"))
            structural_ok = False
    if structural_ok:
        comps = components(g, g.colors)
        if len(comps) > 1:
            defects.append(Defect(DISCONNECTED, f"{len(comps)} components"))
    return ValidationReport(tuple(defects))


def require_valid(g: ColoredGraph) -> None:
    report = validate(g)
    if not report.ok:
        raise InvalidGraph("; ".join(f"{d.kind} ({d.location})" for d in report.defects))


def components(g: ColoredGraph, colors: Iterable[int]) -> list[tuple[int, ...]]:
    """Connected components of the subgraph spanned by ``colors``.

    Components are sorted node tuples, ordered by their smallest node id.
    """
    colors = sorted(set(colors))
    if not colors:
        raise EmptyColorSet("color set is empty")
    seen = [False] * g.num_nodes
    out = []
    for start in range(g.num_nodes):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], [start]
        while stack:
            u = stack.pop()
            for c in colors:
                v = g.neighbor(u, c)
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
                    comp.append(v)
        out.append(tuple(sorted(comp)))
    return out


def relabel(g: ColoredGraph, order: Sequence[int]) -> ColoredGraph:
    """Graph whose color ``k`` is the original color ``order[k]``."""
    return ColoredGraph(len(order) - 1, g.half_size, tuple(g.matchings[c] for c in order))
