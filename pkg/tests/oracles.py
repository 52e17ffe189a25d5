"""Independent oracles. None of these import the engine code paths they check."""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

import sympy as sp

P = 1_000_003


# ---------------------------------------------------------------- smoothness over F_p


def _rank_mod_p(rows: list[list[int]], p: int = P) -> int:
    rows = [r[:] for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _partials_mod_p(terms: dict, p: int) -> list[dict]:
    out = []
    for v in range(4):
        d = {}
        for e, c in terms.items():
            if e[v]:
                ne = list(e)
                ne[v] -= 1
                cc = Fraction(c) * e[v]
                d[tuple(ne)] = (d.get(tuple(ne), 0) + cc.numerator * pow(cc.denominator, -1, p)) % p
        out.append({k: v for k, v in d.items() if v})
    return out


def macaulay_smooth_mod_p(terms: dict, d: int, kmax: int = 10, p: int = P) -> bool:
    """True certifies that the (d,d) curve with these terms is smooth over Q-bar.

    Singular points are the common zeros on P1 x P1 of the four partials. If the
    partials generate every form of bidegree (k,k) modulo p, they do so over Q,
    so they have no common zero. False means 'not certified', not 'singular'.
    """
    parts = _partials_mod_p(terms, p)
    for k in range(d, kmax + 1):
        cols = {(i, j): n for n, (i, j) in enumerate(itertools.product(range(k + 1), repeat=2))}
        rows = []
        for v, g in enumerate(parts):
            da, db = (d - 1, d) if v < 2 else (d, d - 1)
            if k < da or k < db:
                continue
            for i in range(k - da + 1):
                for j in range(k - db + 1):
                    row = [0] * len(cols)
                    for e, c in g.items():
                        row[cols[(e[0] + i, e[2] + j)]] = (row[cols[(e[0] + i, e[2] + j)]] + c) % p
                    rows.append(row)
        if rows and _rank_mod_p(rows, p) == len(cols):
            return True
    return False


def gradient_vanishes_at(terms: dict, point) -> bool:
    """Exact check that every partial vanishes at a rational point (x0,x1,y0,y1)."""
    x = sp.symbols("x0 x1 y0 y1")
    f = sum(sp.Rational(c) * sp.prod([x[i] ** e[i] for i in range(4)]) for e, c in terms.items())
    sub = dict(zip(x, point))
    return all(sp.diff(f, xi).subs(sub) == 0 for xi in x)


# ---------------------------------------------------------------- convex geometry in the plane


def origin_in_hull_2d(points) -> bool:
    pts = list(set(points))
    if (0, 0) in pts:
        return True
    for a, b in itertools.combinations(pts, 2):
        # origin on segment ab
        cross = a[0] * b[1] - a[1] * b[0]
        if cross == 0 and a[0] * b[0] + a[1] * b[1] <= 0:
            return True
    for a, b, c in itertools.combinations(pts, 3):
        s1 = (b[0] - a[0]) * (0 - a[1]) - (b[1] - a[1]) * (0 - a[0])
        s2 = (c[0] - b[0]) * (0 - b[1]) - (c[1] - b[1]) * (0 - b[0])
        s3 = (a[0] - c[0]) * (0 - c[1]) - (a[1] - c[1]) * (0 - c[0])
        if (s1 >= 0 and s2 >= 0 and s3 >= 0) or (s1 <= 0 and s2 <= 0 and s3 <= 0):
            if s1 or s2 or s3:
                return True
    return False


def sq_distance_2d(points) -> Fraction:
    """Exact squared distance from the origin to conv(points), by projecting onto every pair."""
    if origin_in_hull_2d(points):
        return Fraction(0)
    pts = [tuple(Fraction(v) for v in p) for p in set(points)]
    best = min(p[0] ** 2 + p[1] ** 2 for p in pts)
    for a, b in itertools.combinations(pts, 2):
        dx, dy = b[0] - a[0], b[1] - a[1]
        ll = dx * dx + dy * dy
        lam = -(a[0] * dx + a[1] * dy) / ll
        if 0 < lam < 1:
            x, y = a[0] + lam * dx, a[1] + lam * dy
            best = min(best, x * x + y * y)
    return best


# ---------------------------------------------------------------- Chow ring by symbolic expansion


def cm_pe_sympy(d: int):
    """-(pushforward of (L)^3 (2h+eta)), extracting h^3 after imposing h^4 = 0."""
    h, eta, xi, c = sp.symbols("h eta xi c")
    L = (2 - d * c) * h - eta - c * xi
    expr = sp.expand(L ** 3 * (2 * h + eta))
    poly = sp.Poly(expr, h)
    return sp.expand(-poly.coeff_monomial(h ** 3)), (eta, xi, c)


def cm_p44_sympy(d: int):
    h1, h2, H, c = sp.symbols("h1 h2 H c")
    L = (2 - d * c) * (h1 + h2) - c * H
    expr = sp.Poly(sp.expand(L ** 3), h1, h2)
    return sp.expand(-expr.coeff_monomial(h1 * h2)), (H, c)


# ---------------------------------------------------------------- number theory


def markov_brute(bound: int) -> set[tuple[int, int, int]]:
    """All (a,b,c) with max <= bound solving a^2+b^2+2c^2 = 4abc, by solving for c."""
    out = set()
    for a in range(1, bound + 1):
        for b in range(1, bound + 1):
            disc = 16 * a * a * b * b - 8 * (a * a + b * b)
            if disc < 0:
                continue
            r = math.isqrt(disc)
            if r * r != disc:
                continue
            for num in (4 * a * b + r, 4 * a * b - r):
                if num > 0 and num % 4 == 0 and num // 4 <= bound:
                    out.add((a, b, num // 4))
    return out


def lct_brute_weighted(p: int, q: int) -> Fraction:
    """lct of x^p + y^q: 1/p + 1/q capped at 1."""
    return min(Fraction(1), Fraction(1, p) + Fraction(1, q))


def t_singularity_brute(r: int, b: int):
    """Search all (e, n, a) with e n^2 = r and b = e n a - 1 mod r (either coordinate order)."""
    hits = []
    for n in range(1, r + 1):
        if r % (n * n):
            continue
        e = r // (n * n)
        for a in range(1, max(n, 1) + 1):
            if math.gcd(a, n) != 1:
                continue
            bb = (e * n * a - 1) % r
            if bb == b % r or (math.gcd(b, r) == 1 and bb == pow(b, -1, r)):
                hits.append((e, n, a))
    return hits


def exclusion_inequality_holds(r: int, d: int, c: Fraction, w1: int, w2: int, wd: int) -> bool:
    """Unsquared check 4 sqrt(2 r w1 w2) (1 - dc/2) <= 3 (w1 + w2 - c wd), exact in sympy."""
    lhs = 4 * sp.sqrt(2 * r * w1 * w2) * (1 - sp.Rational(d) * sp.Rational(c.numerator, c.denominator) / 2)
    rhs = 3 * (w1 + w2 - sp.Rational(c.numerator, c.denominator) * wd)
    return bool(sp.simplify(rhs - lhs) >= 0)
