"""Draw a random triangulation on a random line set and write JSON + SVG.

    python3 scripts/draw_demo.py --n 12 --seed 3 --out /tmp/demo
"""

import argparse
import random
from dataclasses import dataclass
from pathlib import Path

from linecut.drawing import draw_on_lines, verify_drawing
from linecut.generators import generic_lines
from linecut.io import DrawingFile, GraphFile, lines_to_file
from linecut.planar import random_triangulation
from linecut.svg import svg_export


@dataclass
class Config:
    n: int = 10
    seed: int = 0
    out: str = "draw_demo"


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--out", default=Config.out, help="output directory")
    cfg = Config(**vars(p.parse_args()))

    rng = random.Random(cfg.seed)
    g = random_triangulation(cfg.n, rng)
    L = generic_lines(cfg.n, rng)
    d = draw_on_lines(g, L)
    rep = verify_drawing(g, L, d)

    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "graph.json").write_text(GraphFile(g).serialize())
    (out / "lines.json").write_text(lines_to_file(L).serialize())
    (out / "drawing.json").write_text(DrawingFile(d).serialize())
    (out / "drawing.svg").write_text(svg_export(d, lines=L))

    print(f"n = {cfg.n}, edges = {len(d.edges)}")
    for name, ok in rep.checks.items():
        print(f"  {name}: {'ok' if ok else 'FAIL'}")
    print(f"{'step':>4} {'vertex':>6} {'height':>12} {'slope':>12}")
    for t in d.trace:
        print(f"{t.index:>4} {t.vertex:>6} {float(t.height):>12.4g} {float(t.slope):>12.4g}")
    print(f"wrote {out}/{{graph,lines,drawing}}.json and drawing.svg")


if __name__ == "__main__":
    main()
