from __future__ import annotations

import io
import json
import shutil
import subprocess

import pytest

from conftest import CORPUS, GOLDEN
from gemtopo.cli import run
from gemtopo.diagram import validate_diagram
from gemtopo.gem_core import generate_melon, parse


def gem(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def corpus(name):
    return CORPUS / f"{name}.gem"


def test_trisect_summary():
    code, out, _ = gem("trisect", corpus("melon4"), "--color", 0, "--pairs", "12,34")
    assert code == 0
    assert out.splitlines()[0] == "genus 1; L=1; bubbles: 1 (g=0); status Trisection"


def test_trisect_writes_files(tmp_path):
    js, svg = tmp_path / "d.json", tmp_path / "d.svg"
    code, _, _ = gem("trisect", corpus("pillow1"), "--color", 0, "--pairs", "12,34", "--out", js, "--svg", svg)
    assert code == 0
    validate_diagram(json.loads(js.read_text()))
    assert svg.read_text().startswith("<svg")


def test_trisect_json_validates():
    code, out, _ = gem("trisect", corpus("melon4"), "--color", 0, "--pairs", "12,34", "--json")
    assert code == 0
    validate_diagram(json.loads(out))


def test_selection_failure_exit_code():
    code, out, err = gem("trisect", corpus("pseudo3"), "--color", 0, "--pairs", "12,34")
    assert code == 1
    assert "status Uncertified" in out
    assert "selection failure: beta" in err


def test_jackets_table():
    code, out, _ = gem("jackets", corpus("melon4"))
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 1 + 12 + 1
    assert all(line.split()[-1] == "0" for line in lines[1:-1])
    assert lines[-1] == "degree 0"


def test_jackets_json():
    code, out, _ = gem("jackets", corpus("n4"), "--json")
    data = json.loads(out)
    assert code == 0 and data["degree"] == 1 and len(data["jackets"]) == 3


def test_validate_broken_lists_defects():
    code, out, _ = gem("validate", corpus("broken"))
    assert code == 1
    assert out.startswith("MatchingNotBijective:")
    code, out, _ = gem("validate", corpus("two_melons"), "--json")
    assert code == 1 and json.loads(out)["defects"][0]["kind"] == "Disconnected"
    assert gem("validate", corpus("melon4"))[:2] == (0, "ok\n")


def test_info_and_manifold():
    code, out, _ = gem("info", corpus("pillow0"), "--json")
    info = json.loads(out)
    assert code == 0 and info["bubbles"]["0"] == 2 and info["degree"] == 0
    code, out, _ = gem("manifold", corpus("ingsbar0"), "--json")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "Unknown" and data["quasi"][0] == "InGsBar(0)"


def test_heegaard():
    code, out, _ = gem("heegaard", corpus("n4"), "--json")
    rows = json.loads(out)["splittings"]
    assert code == 0 and [r["genus_sigma"] for r in rows] == [1, 0, 0]
    code, out, _ = gem("heegaard", corpus("melon3"), "--pairs", "01,23", "--json")
    (row,) = json.loads(out)["splittings"]
    assert (row["genus_sigma"], row["skeleton_genus"]) == (0, 3)


def test_trisect_all(tmp_path):
    code, out, _ = gem("trisect-all", corpus("melon4"), "--out-dir", tmp_path, "--json")
    rows = json.loads(out)["diagrams"]
    assert code == 0 and len(rows) == 15 and {r["genus"] for r in rows} == {1}
    assert len(list(tmp_path.glob("*.json"))) == 15


def test_gen_and_moves(tmp_path):
    code, out, _ = gem("gen", "melon", "--rank", 4)
    assert code == 0 and parse(out) == generate_melon(4)
    code, out, _ = gem("gen", "random", "--rank", 4, "--half", 5, "--seed", 3)
    assert code == 0 and parse(out).half_size == 5
    assert out == gem("gen", "random", "--rank", 4, "--half", 5, "--seed", 3)[1]
    code, out, _ = gem("move", "dipole", corpus("melon4"), "--line", "1:1")
    assert parse(out) == parse(corpus("pillow1").read_text())
    dest = tmp_path / "m.gem"
    assert gem("move", "contract", corpus("pillow1"), "--pair", "2,2", "-o", dest)[0] == 0
    assert parse(dest.read_text()) == generate_melon(4)
    code, out, _ = gem("move", "connsum", corpus("melon4"), corpus("melon4"), "--line1", "0:1", "--line2", "0:1")
    assert parse(out) == parse(corpus("melon_sum").read_text())


def test_render_subcommand(tmp_path):
    out_svg = tmp_path / "x.svg"
    assert gem("render", GOLDEN / "melon4_c0_12_34.json", "-o", out_svg)[0] == 0
    assert out_svg.read_text() == (GOLDEN / "melon4_c0_12_34.svg").read_text()
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema": "nope"}')
    assert gem("render", bad)[0] == 1
    bad.write_text("not json")
    assert gem("render", bad)[0] == 2


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["trisect", "x.gem"],
    ["jackets", "--bogus", "x.gem"],
    ["trisect", "melon4.gem", "--color", "0", "--pairs", "1,34"],
])
def test_usage_errors_exit_2(argv):
    argv = [str(corpus("melon4")) if a == "melon4.gem" else a for a in argv]
    code, _, err = gem(*argv)
    assert code == 2
    assert "usage" in err or argv == []


def test_bad_option_values_exit_2():
    assert gem("trisect", corpus("melon4"), "--color", 9, "--pairs", "12,34")[0] == 2
    assert gem("move", "dipole", corpus("melon4"), "--line", "0:4")[0] == 2
    assert gem("jackets", CORPUS / "missing.gem")[0] == 2


def test_domain_errors_exit_1():
    code, _, err = gem("trisect", corpus("melon3"), "--color", 0, "--pairs", "12,34")
    assert code == 1 and "WrongRank" in err
    assert gem("move", "contract", corpus("melon4"), "--pair", "1,1")[0] == 1
    assert gem("jackets", corpus("broken"))[0] == 1


def test_console_script():
    exe = shutil.which("gem")
    assert exe
    proc = subprocess.run([exe, "trisect", str(corpus("melon4")), "--color", "0", "--pairs", "12,34"],
                          capture_output=True, text=True, env={"GEM_COLOR": "never", "PATH": ""})
    assert proc.returncode == 0
    assert proc.stdout.startswith("genus 1; L=1; bubbles: 1 (g=0); status Trisection")


def test_color_env_never_has_no_escapes(monkeypatch):
    monkeypatch.setenv("GEM_COLOR", "never")
    assert "\x1b" not in gem("jackets", corpus("melon4"))[1]
