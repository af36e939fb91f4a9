from __future__ import annotations

import copy
import xml.etree.ElementTree as ET

import pytest

from conftest import load
from gemtopo.diagram import dumps, load_schema, to_dict, validate_diagram
from gemtopo.errors import SchemaError
from gemtopo.render import FAMILY_COLORS, render_svg
from gemtopo.trisector import make_choice, trisect

SVG = "{http://www.w3.org/2000/svg}"


def diagram(name, color=0, pairs=((1, 2), (3, 4))):
    g = load(name)
    return to_dict(trisect(g, make_choice(g, color, pairs)))


def groups(svg: str, cls: str):
    root = ET.fromstring(svg)
    return [el for el in root.iter() if (el.get("class") or "").split()[:1] == [cls]]


def test_melon_json_shape():
    d = diagram("melon4")
    validate_diagram(d)
    assert d["genus"] == 1 and d["L"] == 1 and d["status"] == "Trisection"
    assert sum(c["selected"] for c in d["curves"]) == 3
    assert d["surface"]["euler_characteristic"] == 0
    assert [t["line"] for t in d["surface"]["tubes"]] == ["0:1"]


def test_melon_rendering():
    svg = render_svg(diagram("melon4"))
    # one square per node; both nodes of the melon sit in the single bubble
    assert len(groups(svg, "square")) == 2
    assert {g.get("data-bubble") for g in groups(svg, "square")} == {"0"}
    assert len(groups(svg, "tube")) == 1
    curves = groups(svg, "curve")
    assert len(curves) == 3
    assert {c.get("stroke") for c in curves} == set(FAMILY_COLORS.values())
    assert FAMILY_COLORS == {"alpha": "#d62728", "beta": "#2ca02c", "gamma": "#1f77b4"}


def test_pillow1_rendering():
    svg = render_svg(diagram("pillow1"))
    assert len(groups(svg, "square")) == 4
    assert len(groups(svg, "tube")) == 2
    assert len(groups(svg, "curve")) == 6


def test_failed_selection_still_renders_with_dashed_candidates():
    d = diagram("pseudo3")
    assert d["selection"]["failures"]
    svg = render_svg(d)
    dashed = [c for c in groups(svg, "curve") if "candidate" in c.get("class")]
    assert dashed and all(c.get("stroke-dasharray") for c in dashed)
    failed = set(d["selection"]["failures"])
    assert {c.get("class").split()[1] for c in dashed} <= failed


def test_empty_selection_renders():
    d = diagram("pseudo3")
    for c in d["curves"]:
        c["selected"] = False
    d["selection"]["failures"] = {"alpha": 0, "beta": 0, "gamma": 0}
    svg = render_svg(d)
    assert not [c for c in groups(svg, "curve") if "selected" in c.get("class")]
    assert len(groups(svg, "curve")) == len(d["curves"])


def test_schema_errors():
    d = diagram("melon4")
    bad = copy.deepcopy(d)
    bad["status"] = "Maybe"
    with pytest.raises(SchemaError):
        render_svg(bad)
    bad = copy.deepcopy(d)
    del bad["curves"]
    with pytest.raises(SchemaError):
        validate_diagram(bad)
    bad = copy.deepcopy(d)
    bad["curves"][0]["walk"][0][1] = 0
    with pytest.raises(SchemaError):
        validate_diagram(bad)


def test_outputs_are_deterministic():
    a, b = diagram("ingsbar0"), diagram("ingsbar0")
    assert dumps(a) == dumps(b)
    assert render_svg(a) == render_svg(b)


def test_schema_is_packaged():
    assert load_schema()["$id"] == "gemtopo.diagram/1"
