"""Diagram JSON: serialization of trisection diagrams and schema validation."""

from __future__ import annotations

import json
from importlib import resources
from typing import Any

import jsonschema

from .errors import SchemaError
from .gem_core import LineId
from .surface import FAMILIES
from .trisector import TrisectionDiagram

SCHEMA_ID = "gemtopo.diagram/1"


def _provenance(p) -> dict[str, Any]:
    return {
        "kind": p.kind,
        "index": p.index,
        "line": p.line,
        "bubble": p.bubble,
        "pair": list(p.pair) if p.pair else None,
        "color": p.color,
    }


def to_dict(d: TrisectionDiagram) -> dict[str, Any]:
    cs = d.central
    g = cs.graph
    s = cs.surface
    chi = s.euler_characteristic
    selected = {i: fam for fam in FAMILIES for i in d.selection.selected[fam]}

    squares = []
    for u in range(g.num_nodes):
        squares.append({
            "node": g.node_label(u),
            "bubble": cs.bubble_of[u],
            "sides": [{"color": col, "edge": cs.side_edge(u, t)} for t, col in enumerate(d.choice.order)],
            "corners": [cs.corner[(u, t)] for t in range(4)],
            "inner": [cs.inner[(u, t)] for t in range(4)],
            "diagonals": [cs.diagonal[(u, t)] for t in range(4)],
            "arcs": [cs.arc[(u, t)] for t in range(4)],
        })
    tubes = []
    for black in range(g.half_size):
        line = LineId(d.choice.color, black)
        u, w = g.endpoints(line)
        tubes.append({
            "line": str(line),
            "ends": [g.node_label(u), g.node_label(w)],
            "edges": [cs.tube[(line, t)] for t in range(4)],
        })

    return {
        "schema": SCHEMA_ID,
        "choice": {
            "color": d.choice.color,
            "pairs": [list(p) for p in d.choice.pairs],
            "order": list(d.choice.order),
        },
        "genus": d.genus,
        "bubble_genera": list(d.bubble_genera),
        "L": d.loop_rank,
        "status": d.status,
        "uncertified": list(d.uncertified),
        "graph": {"rank": g.rank, "half": g.half_size},
        "surface": {
            "euler_characteristic": chi,
            "genus": (2 - chi) // 2,
            "h1_rank": d.homology.h1_rank,
            "vertices": [{"id": k, "label": lab} for k, lab in enumerate(s.vertex_labels)],
            "edges": [{"id": k, "ends": list(e), "label": lab} for k, (e, lab) in enumerate(zip(s.edges, s.edge_labels))],
            "faces": [
                {"id": k, "walk": [list(step) for step in walk], "label": lab}
                for k, (walk, lab) in enumerate(zip(s.faces, s.face_labels))
            ],
            "squares": squares,
            "tubes": tubes,
        },
        "curves": [
            {
                "id": k,
                "family": c.family,
                "provenance": _provenance(c.provenance),
                "walk": [list(step) for step in c.walk],
                "trivial": d.homology.classes[k] == 0,
                "selected": k in selected,
            }
            for k, c in enumerate(d.candidates)
        ],
        "selection": {
            "target": d.selection.target,
            "ranks": {fam: d.homology.family_ranks[fam] for fam in FAMILIES},
            "failures": {fam: d.selection.failures[fam] for fam in FAMILIES if fam in d.selection.failures},
        },
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def load_schema() -> dict[str, Any]:
    return json.loads(resources.files("gemtopo").joinpath("diagram.schema.json").read_text(encoding="utf-8"))


def validate_diagram(obj: Any) -> None:
    try:
        jsonschema.validate(obj, load_schema())
    except jsonschema.ValidationError as exc:
        raise SchemaError(f"diagram JSON does not match schema: {exc.message}") from None
