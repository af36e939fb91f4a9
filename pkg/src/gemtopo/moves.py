"""Graph surgeries: d-dipole insertion/contraction and connected sum along a line."""

from __future__ import annotations

from .errors import ColorMismatch, NotADipole
from .gem_core import ColoredGraph, LineId, require_valid


def insert_dipole(g: ColoredGraph, line: LineId) -> ColoredGraph:
    """Insert a d-dipole on ``line`` (color i).

    The new black node ``a`` and white node ``a'`` get index ``n`` and are joined
    by every color except i; the line ``b -> w`` becomes ``b -> a'`` and ``a -> w``.
    """
    b, _ = g.endpoints(line)
    n = g.half_size
    i = line.color
    perms = [list(p) + [n] for p in g.matchings]
    perms[i][n] = g.matchings[i][b]
    perms[i][b] = n
    return ColoredGraph(g.rank, n + 1, tuple(tuple(p) for p in perms))


def _drop(perm: list[int], black: int, white: int) -> tuple[int, ...]:
    """Remove one black and one white index and renumber the rest in order."""
    return tuple(w - (w > white) for k, w in enumerate(perm) if k != black)


def contract_dipole(g: ColoredGraph, a: int, a_bar: int) -> ColoredGraph:
    """Inverse of :func:`insert_dipole` for black ``a`` and white ``a_bar`` (0-based)."""
    if not (0 <= a < g.half_size and 0 <= a_bar < g.half_size):
        raise NotADipole(f"nodes b{a + 1}, w{a_bar + 1} do not exist")
    shared = [c for c in g.colors if g.matchings[c][a] == a_bar]
    if len(shared) != g.rank:
        raise NotADipole(f"b{a + 1} and w{a_bar + 1} share {len(shared)} lines, a d-dipole needs {g.rank}")
    (i,) = [c for c in g.colors if c not in shared]
    perms = [list(p) for p in g.matchings]
    w = g.matchings[i][a]
    b = g.inverses[i][a_bar]
    perms[i][b] = w
    return ColoredGraph(g.rank, g.half_size - 1, tuple(_drop(p, a, a_bar) for p in perms))


def connected_sum(g1: ColoredGraph, g2: ColoredGraph, line1: LineId, line2: LineId) -> ColoredGraph:
    """Cut one line of the same color in each graph and cross-connect the open ends.

    Nodes of ``g2`` are appended after those of ``g1``.
    """
    if line1.color != line2.color:
        raise ColorMismatch(f"lines {line1} and {line2} have different colors")
    if g1.rank != g2.rank:
        raise ColorMismatch(f"rank {g1.rank} and rank {g2.rank} graphs cannot be summed")
    require_valid(g1)
    require_valid(g2)
    g1.endpoints(line1)
    g2.endpoints(line2)
    n1 = g1.half_size
    perms = [list(p1) + [w + n1 for w in p2] for p1, p2 in zip(g1.matchings, g2.matchings)]
    c = line1.color
    b1, b2 = line1.black, n1 + line2.black
    perms[c][b1], perms[c][b2] = perms[c][b2], perms[c][b1]
    return ColoredGraph(g1.rank, n1 + g2.half_size, tuple(tuple(p) for p in perms))
