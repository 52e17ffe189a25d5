"""Exact nearest point to the origin in the convex hull of finitely many rational points.

Wolfe's minimum-norm-point iteration run in exact rational arithmetic: the
active set stays affinely independent, so every affine sub-problem is a
nonsingular linear system and the loop terminates with the exact optimum.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .linalg import solve

Point = tuple[Fraction, ...]


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def _combo(pts: Sequence[Point], lam: Sequence[Fraction]) -> Point:
    dim = len(pts[0])
    return tuple(sum((l * p[i] for l, p in zip(lam, pts)), Fraction(0)) for i in range(dim))


def _affine_minimizer(gram: Sequence[Sequence], active: Sequence[int]) -> list[Fraction]:
    # minimise |sum a_i p_i|^2 subject to sum a_i = 1
    k = len(active)
    mat = [[gram[i][j] for j in active] + [1] for i in active]
    mat.append([1] * k + [0])
    rhs = [0] * k + [1]
    sol = solve(mat, rhs)
    if sol is None:
        raise ArithmeticError("active set lost affine independence")
    return sol[:k]


def _scaled(x: Point) -> tuple[list[int], int]:
    """x = X / den with X integral."""
    den = lcm(*(c.denominator for c in x))
    return [int(c * den) for c in x], den


def min_norm_point(points: Sequence[Sequence]) -> tuple[Point, dict[int, Fraction]]:
    """Return (x, weights): x is the hull point nearest the origin, x = sum w_i p_i."""
    pts = [tuple(Fraction(c) for c in p) for p in points]
    if not pts:
        raise ValueError("empty point set")
    # integer coordinates make every dot product below an int
    if all(c.denominator == 1 for p in pts for c in p):
        pts = [tuple(int(c) for c in p) for p in pts]
    gram = [[_dot(p, q) for q in pts] for p in pts]
    start = min(range(len(pts)), key=lambda i: (gram[i][i], pts[i]))
    active = [start]
    lam = [Fraction(1)]
    x = tuple(Fraction(c) for c in pts[start])
    while True:
        big, den = _scaled(x)
        xx = _dot(big, big)
        scores = [_dot(big, p) for p in pts]
        j = min(range(len(pts)), key=lambda i: (scores[i], i))
        if scores[j] * den >= xx or j in active:
            break
        active.append(j)
        lam.append(Fraction(0))
        while True:
            alpha = _affine_minimizer(gram, active)
            if all(a > 0 for a in alpha):
                lam = alpha
                break
            theta = min(l / (l - a) for l, a in zip(lam, alpha) if a <= 0)
            lam = [(1 - theta) * l + theta * a for l, a in zip(lam, alpha)]
            keep = [k for k, l in enumerate(lam) if l > 0]
            active = [active[k] for k in keep]
            lam = [lam[k] for k in keep]
        x = _combo([pts[i] for i in active], lam)
    return x, dict(zip(active, lam))


def sq_dist_to_hull(target: Sequence, points: Sequence[Sequence]) -> Fraction:
    """Squared distance from ``target`` to conv(points)."""
    t = [Fraction(c) for c in target]
    shifted = [tuple(Fraction(c) - s for c, s in zip(p, t)) for p in points]
    x, _ = min_norm_point(shifted)
    return _dot(x, x)
