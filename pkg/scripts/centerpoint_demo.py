"""Depth reached by the centerpoint search on random arrangements.

    python3 scripts/centerpoint_demo.py --sizes 3 6 9 12 --trials 5
"""

import argparse
import random
import time
from dataclasses import dataclass, field

from linecut.generators import random_arrangement
from linecut.geometry import format_scalar
from linecut.partition import centerpoint, centerpoint_bound, depth_bruteforce


@dataclass
class Config:
    sizes: list[int] = field(default_factory=lambda: [3, 6, 9, 12])
    trials: int = 5
    seed: int = 0
    check: bool = True  # re-check depth with the brute-force oracle


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=Config().sizes)
    p.add_argument("--trials", type=int, default=Config.trials)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--no-check", dest="check", action="store_false")
    cfg = Config(**vars(p.parse_args()))

    rng = random.Random(cfg.seed)
    print(f"{'n':>3} {'bound':>5} {'depth':>5} {'oracle':>6} {'sec':>6}  point")
    for n in cfg.sizes:
        for _ in range(cfg.trials):
            A = random_arrangement(n, rng)
            t0 = time.perf_counter()
            cert = centerpoint(A)
            dt = time.perf_counter() - t0
            oracle = depth_bruteforce(A, cert.point) if cfg.check else "-"
            pt = f"({format_scalar(cert.point.x)}, {format_scalar(cert.point.y)})"
            print(f"{n:>3} {centerpoint_bound(n):>5} {cert.depth:>5} {oracle!s:>6} {dt:>6.2f}  {pt}")


if __name__ == "__main__":
    main()
