"""Best achievable cut on the pencil pair versus the sqrt(n) guarantee.

For each k, enumerates every candidate cut of pencil_pair(k) and reports
the best smallest-side value next to ceil(sqrt(k*k)) = k.

    python3 scripts/tightness_demo.py --ks 2 3
"""

import argparse
import time
from dataclasses import dataclass, field

from linecut.geometry import GeneralLine, Halfplane
from linecut.mu import mu_halfplane
from linecut.partition import best_cut_value, ceil_sqrt, evaluate_cut, pencil_arrangement, pencil_pair


@dataclass
class Config:
    ks: list[int] = field(default_factory=lambda: [2, 3])
    seed: int = 0


def run(cfg: Config) -> list[dict]:
    rows = []
    for k in cfg.ks:
        t0 = time.perf_counter()
        A1, A2 = pencil_pair(k, seed=cfg.seed)
        best, line = best_cut_value(A1, A2)
        A = pencil_arrangement(k)
        rows.append(
            {
                "k": k,
                "lines": len(A1),
                "guarantee": ceil_sqrt(len(A1)),
                "best": best,
                "x=0": evaluate_cut(A1, A2, GeneralLine.vertical(0)).min_value,
                "mu(x<=0)": mu_halfplane(A, Halfplane.closed(1, 0, 0)).value,
                "mu(x>=0)": mu_halfplane(A, Halfplane.closed(-1, 0, 0)).value,
                "best_line": str(line),
                "seconds": round(time.perf_counter() - t0, 2),
            }
        )
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--ks", type=int, nargs="+", default=Config().ks)
    p.add_argument("--seed", type=int, default=Config.seed)
    cfg = Config(**vars(p.parse_args()))
    cols = ["k", "lines", "guarantee", "best", "x=0", "mu(x<=0)", "mu(x>=0)", "seconds"]
    print("  ".join(f"{c:>9}" for c in cols))
    for row in run(cfg):
        print("  ".join(f"{row[c]!s:>9}" for c in cols))
        print(f"{'':>9}  one optimal cut: {row['best_line']}")


if __name__ == "__main__":
    main()
