"""Rewrite the golden diagram JSON/SVG files from the corpus.

Run after an intentional output change:  python3 tests/golden/regenerate.py
"""

from __future__ import annotations

import io
import sys
from pathlib import Path

from gemtopo.cli import run

HERE = Path(__file__).resolve().parent
CORPUS = HERE.parent.parent / "corpus"

# (corpus file, special color, pairs)
CASES = [
    ("melon4", 0, "12,34"),
    ("pillow0", 0, "12,34"),
    ("pillow1", 0, "12,34"),
    ("pillow1", 1, "02,34"),
    ("melon_sum", 0, "12,34"),
    ("ingsbar0", 0, "12,34"),
    ("pseudo3", 0, "12,34"),
]


def stem(name: str, color: int, pairs: str) -> str:
    return f"{name}_c{color}_{pairs.replace(',', '_')}"


def write_case(name: str, color: int, pairs: str, target: Path) -> tuple[Path, Path]:
    base = target / stem(name, color, pairs)
    json_path, svg_path = base.with_suffix(".json"), base.with_suffix(".svg")
    run(["trisect", str(CORPUS / f"{name}.gem"), "--color", str(color), "--pairs", pairs,
         "--out", str(json_path), "--svg", str(svg_path)], out=io.StringIO(), err=io.StringIO())
    return json_path, svg_path


def main() -> int:
    for case in CASES:
        for p in write_case(*case, HERE):
            print(p.relative_to(HERE.parent.parent))
    return 0


if __name__ == "__main__":
    sys.exit(main())
