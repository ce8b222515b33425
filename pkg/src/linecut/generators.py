"""Seeded random inputs: arrangements and line sets."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .errors import ParallelLines
from .geometry import GeneralLine, Halfplane, Point
from .mu import Arrangement


def random_line(rng: random.Random, coef: int = 9, offset: int = 12) -> GeneralLine:
    while True:
        a, b = rng.randint(-coef, coef), rng.randint(-coef, coef)
        if a or b:
            return GeneralLine(a, b, Fraction(rng.randint(-offset * 4, offset * 4), 4))


def random_arrangement(
    n: int,
    rng: random.Random,
    coef: int = 9,
    offset: int = 12,
    center: Optional[Point] = None,
) -> Arrangement:
    """``n`` pairwise non-parallel lines with small rational coefficients."""
    lines: list[GeneralLine] = []
    while len(lines) < n:
        cand = random_line(rng, coef, offset)
        if center is not None:
            cand = GeneralLine(cand.a, cand.b, cand.c + cand.a * center.x + cand.b * center.y)
        if all(not cand.is_parallel(l) for l in lines):
            lines.append(cand)
    return Arrangement(lines)


def generic_lines(n: int, rng: random.Random, coef: int = 20, offset: int = 30) -> list[GeneralLine]:
    """Pairwise non-parallel lines with no three through a common point."""
    while True:
        A = random_arrangement(n, rng, coef, offset)
        if A.max_concurrency() <= 2:
            return list(A.lines)


def random_halfplane(A: Arrangement, rng: random.Random, coef: int = 6) -> Halfplane:
    """A random open or closed halfplane; half the time its boundary passes
    through an arrangement vertex, sometimes through two."""
    while True:
        a, b = rng.randint(-coef, coef), rng.randint(-coef, coef)
        if a or b:
            break
    pts = A.points()
    roll = rng.random()
    if pts and roll < 0.2 and len(pts) > 1:
        p, q = rng.sample(pts, 2)
        line = GeneralLine.through(p, q)
        a, b, c = line.a, line.b, line.c
        if rng.random() < 0.5:
            a, b, c = -a, -b, -c
    elif pts and roll < 0.6:
        p = rng.choice(pts)
        c = a * p.x + b * p.y
    else:
        c = Fraction(rng.randint(-40, 40), 4)
    return Halfplane(a, b, c, strict=rng.random() < 0.5)


def non_parallel(lines: list[GeneralLine]) -> list[GeneralLine]:
    Arrangement(lines)  # raises ParallelLines
    return lines


__all__ = ["random_line", "random_arrangement", "random_halfplane", "generic_lines", "non_parallel", "ParallelLines"]
