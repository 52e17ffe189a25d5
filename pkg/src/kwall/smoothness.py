"""Smoothness probe for curves of bidegree (d, d) on P1 x P1.

Chart by chart, a singular point of a reduced curve is a common zero of p,
p_u, p_v in the affine coordinates (u, v). The search splits p into its
v-content c(u) (vertical fibre components) and primitive part, eliminates v
with resultants, and confirms each candidate root of the eliminant by a gcd
computed over the residue field Q[u]/(q). sympy supplies resultants, gcds and
univariate factorisation over Q; the field arithmetic is done here.
"""
from __future__ import annotations

from dataclasses import dataclass

import sympy as sp

from .errors import GradingError
from .forms import Bidegree, MultiForm

X0, X1, Y0, Y1 = sp.symbols("x0 x1 y0 y1")
U, V = sp.symbols("u v")

# chart name, index of the x-coordinate set to 1, index of the y-coordinate set to 1
CHARTS = (("x0=1,y0=1", 0, 2), ("x0=1,y1=1", 0, 3), ("x1=1,y0=1", 1, 2), ("x1=1,y1=1", 1, 3))


@dataclass(frozen=True)
class Smooth:
    def to_json(self) -> dict:
        return {"status": "Smooth"}


@dataclass(frozen=True)
class Singular:
    chart: str | None
    reason: str
    eliminant: str

    def to_json(self) -> dict:
        return {"status": "Singular", "chart": self.chart, "reason": self.reason, "eliminant": self.eliminant}


def to_poly(f: MultiForm) -> sp.Poly:
    data = {e: sp.Rational(c.numerator, c.denominator) for e, c in f.terms.items()}
    return sp.Poly.from_dict(data, X0, X1, Y0, Y1, domain=sp.QQ)


def _chart_poly(f: MultiForm, xi: int, yj: int) -> sp.Poly:
    """Dehomogenise: keep the exponents of the other x (-> u) and other y (-> v); gens (v, u)."""
    ui, vi = 1 - xi, 5 - yj
    data: dict = {}
    for e, c in f.terms.items():
        key = (e[vi], e[ui])
        data[key] = data.get(key, 0) + sp.Rational(c.numerator, c.denominator)
    return sp.Poly.from_dict({k: c for k, c in data.items() if c}, V, U, domain=sp.QQ)


def _residue_gcd(polys: list[list[sp.Poly]], q: sp.Poly) -> list[sp.Poly]:
    """gcd of polynomials in v whose coefficients live in Q[u]/(q), q irreducible.

    Each polynomial is a coefficient list (highest degree first) of Polys in u.
    """
    def norm(p):
        p = [c.rem(q) for c in p]
        while p and p[0].is_zero:
            p = p[1:]
        return p

    def prem(a, b):
        # remainder of a by b over the residue field
        a = list(a)
        inv = b[0].invert(q)
        while len(a) >= len(b):
            f = (a[0] * inv).rem(q)
            for i in range(len(b)):
                a[i] = (a[i] - f * b[i]).rem(q)
            a = norm(a)
        return a

    g = norm(polys[0])
    for p in polys[1:]:
        a, b = g, norm(p)
        while b:
            a, b = b, prem(a, b)
        g = a
    return g


def _v_coeffs(p: sp.Poly) -> list[sp.Poly]:
    """Coefficients in Q[u] of a Poly with gens (v, u), highest v-degree first."""
    n = p.degree(V)
    rows: list[dict] = [dict() for _ in range(n + 1)]
    for (kv, ku), c in p.terms():
        rows[n - kv][(ku,)] = c
    return [sp.Poly.from_dict(r, U, domain=sp.QQ) if r else sp.Poly(0, U, domain=sp.QQ) for r in rows]


def _chart_singularity(p: sp.Poly, chart: str) -> Singular | None:
    if p.total_degree() <= 0:
        return None
    coeffs = _v_coeffs(p)
    cont = coeffs[0]
    for c in coeffs[1:]:
        cont = cont.gcd(c)
    pp = p
    if cont.degree() > 0:
        pp = p.exquo(sp.Poly.from_dict({(0, k): c for (k,), c in cont.terms()}, V, U, domain=sp.QQ))
        pos = _v_coeffs(pp)[:-1]
        for q, _ in cont.factor_list()[1]:
            if any(not c.rem(q).is_zero for c in pos):
                return Singular(chart, "fibre component meets another component", str(q.as_expr()))
    if pp.degree(V) <= 0:
        return None
    pv = pp.diff(V)
    pu = pp.diff(U)
    r1 = pp.resultant(pv).set_domain(sp.QQ)
    g = r1
    if not pu.is_zero:
        r2 = pp.resultant(pu).set_domain(sp.QQ)
        if not r2.is_zero:
            g = r1.gcd(r2)
    if g.degree() <= 0:
        return None
    as_lists = [_v_coeffs(h) for h in (pp, pu, pv)]
    for q, _ in g.factor_list()[1]:
        common = _residue_gcd(as_lists, q)
        if len(common) >= 2:
            return Singular(chart, "singular point", str(q.as_expr()))
    return None


def is_smooth_curve(f: MultiForm) -> Smooth | Singular:
    """Decide smoothness over the algebraic closure of Q of the curve f = 0 in P1 x P1."""
    g = f.grading
    if not isinstance(g, Bidegree) or g.a != g.b:
        raise GradingError("smoothness probe needs a form of bidegree (d, d)")
    if f.is_zero():
        raise GradingError("zero form defines no curve")
    poly = to_poly(f)
    if poly.total_degree() <= 0:
        return Smooth()
    _, factors = poly.sqf_list()
    for fac, mult in factors:
        if mult > 1 and fac.total_degree() > 0:
            return Singular(None, "non-reduced", str(fac.as_expr()))
    for name, xi, yj in CHARTS:
        found = _chart_singularity(_chart_poly(f, xi, yj), name)
        if found is not None:
            return found
    return Smooth()
