"""``gem`` command-line front end.

Exit codes: 0 success, 1 mathematical/domain failure (defects, selection
failure, rejected input), 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import random
import sys
from pathlib import Path
from typing import Any, Sequence, TextIO

from . import diagram as diagram_io
from .errors import BadPairPartition, GemError, GemSemanticError, GemSyntaxError, NoSuchLine, SameColor
from .gem_core import ColoredGraph, LineId, generate_melon, parse, random_connected, serialize, validate
from .heegaard import heegaard_split, heegaard_table
from .moves import connected_sum, contract_dipole, insert_dipole
from .render import render_svg
from .subcomplex import bubbles, gurau_degree, jackets, manifold_report
from .surface import FAMILIES
from .trisector import TrisectionDiagram, all_choices, enumerate_all, make_choice, quasi_check, trisect

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- helpers -----------------------------------------------------------------------


def _use_color(stream: TextIO) -> bool:
    mode = os.environ.get("GEM_COLOR", "auto")
    return mode == "auto" and stream.isatty()


def _table(rows: list[list[Any]], header: list[str], out: TextIO) -> None:
    cells = [[str(h) for h in header]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    for i, r in enumerate(cells):
        line = "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
        if i == 0 and _use_color(out):
            line = f"\x1b[1m{line}\x1b[0m"
        print(line, file=out)


def _emit_json(obj: Any, out: TextIO) -> None:
    out.write(diagram_io.dumps(obj))


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write_text(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _load(path: str) -> ColoredGraph:
    return parse(_read_text(path))


def _parse_pairs(text: str) -> tuple[tuple[int, int], tuple[int, int]]:
    try:
        a, b = text.split(",")
        if len(a) != 2 or len(b) != 2:
            raise ValueError
        return (int(a[0]), int(a[1])), (int(b[0]), int(b[1]))
    except ValueError:
        raise UsageError(f"--pairs expects two digit pairs like 12,34, got {text!r}") from None


def _parse_line(text: str) -> LineId:
    try:
        return LineId.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write_graph(g: ColoredGraph, out_path: str | None, out: TextIO) -> None:
    text = serialize(g)
    if out_path:
        _write_text(out_path, text)
    else:
        out.write(text)


# -- subcommands -------------------------------------------------------------------


def cmd_validate(args, out: TextIO) -> int:
    try:
        g = _load(args.file)
    except (GemSyntaxError, GemSemanticError) as exc:
        if isinstance(exc, GemSemanticError):
            defects = [{"kind": exc.kind, "location": exc.location}]
        else:
            defects = [{"kind": "SyntaxError", "location": str(exc)}]
    else:
        defects = [{"kind": d.kind, "location": d.location} for d in validate(g).defects]
    if args.json:
        _emit_json({"ok": not defects, "defects": defects}, out)
    elif defects:
        for d in defects:
            print(f"{d['kind']}: {d['location']}", file=out)
    else:
        print("ok", file=out)
    return EXIT_OK if not defects else EXIT_DOMAIN


def cmd_info(args, out: TextIO) -> int:
    g = _load(args.file)
    report = validate(g)
    info: dict[str, Any] = {
        "rank": g.rank,
        "half": g.half_size,
        "nodes": g.num_nodes,
        "lines": g.num_lines,
        "valid": report.ok,
        "defects": [d.kind for d in report.defects],
    }
    if report.ok:
        info["degree"] = gurau_degree(g)
        info["bubbles"] = {
            str(c): len(bubbles(g, [x for x in g.colors if x != c])) for c in g.colors
        }
    if args.json:
        _emit_json(info, out)
    else:
        for key, val in info.items():
            if key == "bubbles":
                val = ", ".join(f"{k}^:{v}" for k, v in val.items())
            elif key == "defects":
                val = ", ".join(val) or "none"
            print(f"{key}: {val}", file=out)
    return EXIT_OK if report.ok else EXIT_DOMAIN


def cmd_jackets(args, out: TextIO) -> int:
    g = _load(args.file)
    js = jackets(g)
    degree = sum(j.genus for j in js)
    if args.json:
        _emit_json({
            "jackets": [{"order": list(j.order), "faces": len(j.faces), "euler": j.euler, "genus": j.genus} for j in js],
            "degree": degree,
        }, out)
    else:
        _table([[" ".join(map(str, j.order)), len(j.faces), j.euler, j.genus] for j in js],
               ["order", "faces", "chi", "genus"], out)
        print(f"degree {degree}", file=out)
    return EXIT_OK


def cmd_manifold(args, out: TextIO) -> int:
    g = _load(args.file)
    report = manifold_report(g)
    rows = []
    for r in report.bubbles:
        row = {
            "missing_color": r.missing_color,
            "bubble": r.bubble.index,
            "nodes": len(r.bubble.nodes),
            "verdict": str(r.topology),
            "evidence": r.topology.evidence,
        }
        if r.links_certified is not None:
            row["links_certified"] = r.links_certified
        rows.append(row)
    quasi = [str(q) for q in quasi_check(g)] if g.rank == 4 else None
    if args.json:
        obj: dict[str, Any] = {"verdict": report.verdict, "bubbles": rows}
        if quasi is not None:
            obj["quasi"] = quasi
        _emit_json(obj, out)
    else:
        header = list(rows[0].keys())
        _table([[r[k] for k in header] for r in rows], header, out)
        print(f"verdict {report.verdict}", file=out)
        if quasi is not None:
            print("quasi " + " ".join(f"c={c}:{q}" for c, q in enumerate(quasi)), file=out)
        bad = report.uncertified
        if bad:
            print("not certified: " + ", ".join(f"{r.missing_color}^#{r.bubble.index}" for r in bad), file=out)
    return EXIT_OK


def cmd_heegaard(args, out: TextIO) -> int:
    g = _load(args.file)
    data = [heegaard_split(g, _parse_pairs(args.pairs))] if args.pairs else heegaard_table(g)
    rows = [{
        "pairs": [list(h.pairs[0]), list(h.pairs[1])],
        "jacket": list(h.jacket.order),
        "faces": len(h.jacket.faces),
        "genus_sigma": h.genus_sigma,
        "alpha_candidates": len(h.alpha_candidates),
        "beta_candidates": len(h.beta_candidates),
        "skeleton_genus": h.skeleton_genus,
        "comparison": h.comparison,
    } for h in data]
    if args.json:
        _emit_json({"splittings": rows}, out)
    else:
        _table([[f"{{{p[0][0]},{p[0][1]}}}{{{p[1][0]},{p[1][1]}}}", " ".join(map(str, r["jacket"])), r["faces"],
                 r["genus_sigma"], r["alpha_candidates"], r["beta_candidates"], r["skeleton_genus"], r["comparison"]]
                for r, p in zip(rows, (r["pairs"] for r in rows))],
               ["pairs", "jacket", "F_J", "g_sigma", "alpha", "beta", "g_skeleton", "g_sigma-g"], out)
    return EXIT_OK


def summary_line(d: TrisectionDiagram) -> str:
    genera = ",".join(map(str, d.bubble_genera))
    return f"genus {d.genus}; L={d.loop_rank}; bubbles: {len(d.bubble_genera)} (g={genera}); status {d.status}"


def cmd_trisect(args, out: TextIO) -> int:
    g = _load(args.file)
    choice = make_choice(g, args.color, _parse_pairs(args.pairs))
    d = trisect(g, choice)
    obj = diagram_io.to_dict(d)
    if args.out:
        _write_text(args.out, diagram_io.dumps(obj))
    if args.svg:
        _write_text(args.svg, render_svg(obj))
    if args.json:
        _emit_json(obj, out)
    else:
        print(summary_line(d), file=out)
        counts = ", ".join(f"{fam} {len(d.selection.selected[fam])}/{d.homology.family_ranks[fam]}" for fam in FAMILIES)
        print(f"selected (chosen/candidate rank): {counts}", file=out)
        for fam, rank in d.selection.failures.items():
            print(f"selection failure: {fam} candidates span rank {rank} < {d.genus}", file=args.err)
    return EXIT_DOMAIN if d.selection.failures else EXIT_OK


def cmd_trisect_all(args, out: TextIO) -> int:
    g = _load(args.file)
    ds = enumerate_all(g)
    if args.out_dir:
        target = Path(args.out_dir)
        try:
            target.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise UsageError(f"cannot create {target}: {exc.strerror}") from None
        for d in ds:
            (j1, j2), (k1, k2) = d.choice.pairs
            _write_text(str(target / f"c{d.choice.color}_{j1}{j2}_{k1}{k2}.json"), diagram_io.dumps(diagram_io.to_dict(d)))
    rows = [{
        "color": d.choice.color,
        "pairs": [list(p) for p in d.choice.pairs],
        "genus": d.genus,
        "bubble_genera": d.bubble_genera,
        "L": d.loop_rank,
        "status": d.status,
        "selection_ok": d.selection.ok,
    } for d in ds]
    if args.json:
        _emit_json({"diagrams": rows}, out)
    else:
        _table([[r["color"], f"{{{r['pairs'][0][0]},{r['pairs'][0][1]}}}|{{{r['pairs'][1][0]},{r['pairs'][1][1]}}}",
                 r["genus"], ",".join(map(str, r["bubble_genera"])), r["L"], r["status"],
                 "ok" if r["selection_ok"] else "FAIL"] for r in rows],
               ["c", "pairs", "g_c", "bubble_g", "L", "status", "selection"], out)
    return EXIT_OK if all(d.selection.ok for d in ds) else EXIT_DOMAIN


def cmd_gen(args, out: TextIO) -> int:
    if args.kind == "melon":
        g = generate_melon(args.rank)
    else:
        if args.half < 1:
            raise UsageError("--half must be >= 1")
        g = random_connected(args.rank, args.half, random.Random(args.seed))
    _write_graph(g, args.output, out)
    return EXIT_OK


def cmd_move(args, out: TextIO) -> int:
    if args.move == "dipole":
        g = insert_dipole(_load(args.file), _parse_line(args.line))
    elif args.move == "contract":
        try:
            a, a_bar = (int(x) - 1 for x in args.pair.split(","))
        except ValueError:
            raise UsageError(f"--pair expects <black>,<white>, got {args.pair!r}") from None
        g = contract_dipole(_load(args.file), a, a_bar)
    else:
        g = connected_sum(_load(args.file1), _load(args.file2), _parse_line(args.line1), _parse_line(args.line2))
    _write_graph(g, args.output, out)
    return EXIT_OK


def cmd_render(args, out: TextIO) -> int:
    try:
        obj = json.loads(_read_text(args.diagram))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.diagram} is not JSON: {exc}") from None
    svg = render_svg(obj)
    if args.output:
        _write_text(args.output, svg)
    else:
        out.write(svg)
    return EXIT_OK


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    json_flag = argparse.ArgumentParser(add_help=False)
    json_flag.add_argument("--json", action="store_true", help="machine-readable JSON output")

    p = argparse.ArgumentParser(prog="gem", description="Topology of colored graphs (GEMs) and trisection diagrams.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("validate", parents=[json_flag], help="check a .gem file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("info", parents=[json_flag], help="size, degree and bubble counts")
    s.add_argument("file")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("jackets", parents=[json_flag], help="jacket table and Gurau degree")
    s.add_argument("file")
    s.set_defaults(func=cmd_jackets)

    s = sub.add_parser("manifold", parents=[json_flag], help="certify d-bubbles as spheres")
    s.add_argument("file")
    s.set_defaults(func=cmd_manifold)

    s = sub.add_parser("heegaard", parents=[json_flag], help="rank-3 Heegaard splittings")
    s.add_argument("file")
    s.add_argument("--pairs", help="missing pairs, e.g. 01,23 (default: all three)")
    s.set_defaults(func=cmd_heegaard)

    s = sub.add_parser("trisect", parents=[json_flag], help="one trisection diagram of a rank-4 graph")
    s.add_argument("file")
    s.add_argument("--color", type=int, required=True, help="special color c")
    s.add_argument("--pairs", required=True, help="pair partition of the other colors, e.g. 12,34")
    s.add_argument("--out", help="write diagram JSON here")
    s.add_argument("--svg", help="write an SVG rendering here")
    s.set_defaults(func=cmd_trisect)

    s = sub.add_parser("trisect-all", parents=[json_flag], help="all 15 trisection diagrams")
    s.add_argument("file")
    s.add_argument("--out-dir", help="write one diagram JSON per choice into this directory")
    s.set_defaults(func=cmd_trisect_all)

    s = sub.add_parser("gen", help="generate a graph")
    s.add_argument("kind", choices=["melon", "random"])
    s.add_argument("--rank", type=int, default=4)
    s.add_argument("--half", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("move", help="graph surgeries")
    moves = s.add_subparsers(dest="move", required=True, metavar="MOVE")
    m = moves.add_parser("dipole", help="insert a d-dipole on a line")
    m.add_argument("file")
    m.add_argument("--line", required=True, help="<color>:<black>")
    m.add_argument("-o", "--output")
    m = moves.add_parser("contract", help="contract a d-dipole")
    m.add_argument("file")
    m.add_argument("--pair", required=True, help="<black>,<white>")
    m.add_argument("-o", "--output")
    m = moves.add_parser("connsum", help="connected sum along two lines of the same color")
    m.add_argument("file1")
    m.add_argument("file2")
    m.add_argument("--line1", required=True)
    m.add_argument("--line2", required=True)
    m.add_argument("-o", "--output")
    s.set_defaults(func=cmd_move)

    s = sub.add_parser("render", help="render diagram JSON as SVG")
    s.add_argument("diagram")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_render)
    return p


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.err = err
    try:
        return args.func(args, out)
    except (UsageError, BadPairPartition, NoSuchLine, SameColor) as exc:
        # bad option values are usage errors, not findings about the graph
        print(f"gem: {exc}", file=err)
        parser.print_usage(err)
        return EXIT_USAGE
    except GemError as exc:
        print(f"gem: {type(exc).__name__}: {exc}", file=err)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
