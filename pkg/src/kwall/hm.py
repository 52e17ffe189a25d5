"""Hilbert-Mumford weights and torus stability for forms in four variables.

Convention: mu(f, sigma) is the largest weight <e, sigma> over the support of
f, and sigma destabilises f when mu(f, sigma) < 0.

Weight coordinates subtract, inside each SL-block, the exponent of the block's
last variable: (e0 - e1, e2 - e3) for bidegree forms and (e0 - e3, e1 - e3,
e2 - e3) for forms on P3. For bidegree (d, d) this is the centred vector
(2i - d, 2k - d). Pairing these coordinates with the matching entries of a
trace-zero weight vector reproduces <e, sigma> exactly, and the trivial
character sits at the origin. Distances are Euclidean in these coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import GradingError, ZeroForm
from .forms import Bidegree, Exponent, Homogeneous, MultiForm, _normalize_matrix, change_coordinates
from .linalg import Matrix, as_matrix
from .minnorm import min_norm_point

SL2xSL2 = "SL2xSL2"
SL4 = "SL4"


def torus_for(f: MultiForm) -> str:
    return SL2xSL2 if isinstance(f.grading, Bidegree) else SL4


@dataclass(frozen=True)
class OnePS:
    weights: tuple[int, int, int, int]
    torus: str = SL4
    frame: Matrix | None = None

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if len(w) != 4:
            raise ValueError("a 1-PS needs four weights")
        object.__setattr__(self, "weights", w)
        if self.torus == SL2xSL2:
            if w[0] + w[1] or w[2] + w[3]:
                raise ValueError(f"weights {w} do not sum to zero in each SL2 block")
        elif self.torus == SL4:
            if sum(w):
                raise ValueError(f"weights {w} do not sum to zero")
        else:
            raise ValueError(f"unknown torus {self.torus!r}")
        if self.frame is not None:
            object.__setattr__(self, "frame", as_matrix(self.frame))

    def __neg__(self) -> "OnePS":
        return OnePS(tuple(-x for x in self.weights), self.torus, self.frame)

    def reduced(self) -> tuple[int, ...]:
        """Entries paired with the weight coordinates (last entry of each block dropped)."""
        w = self.weights
        return (w[0], w[2]) if self.torus == SL2xSL2 else w[:3]

    def to_json(self) -> dict:
        return {
            "weights": list(self.weights),
            "torus": self.torus,
            "frame": None if self.frame is None else [[str(x) for x in r] for r in self.frame],
        }


def _check_torus(f: MultiForm, torus: str | None) -> str:
    want = torus_for(f)
    if torus is not None and torus != want:
        raise GradingError(f"torus {torus} does not act on forms of degree {f.grading}")
    return want


def _in_frame(f: MultiForm, frame) -> MultiForm:
    return f if frame is None else change_coordinates(f, frame)


def monomial_weight(e: Sequence[int], sigma: OnePS) -> int:
    if len(e) != 4:
        raise ValueError("exponent vectors have length 4")
    return sum(a * b for a, b in zip(e, sigma.weights))


def hm_weight(f: MultiForm, sigma: OnePS) -> int:
    if f.is_zero():
        raise ZeroForm("Hilbert-Mumford weight of the zero form")
    _check_torus(f, sigma.torus)
    g = _in_frame(f, sigma.frame)
    return max(monomial_weight(e, sigma) for e in g.support())


def weight_coordinates(e: Sequence[int], torus: str) -> tuple[int, ...]:
    if torus == SL2xSL2:
        return (e[0] - e[1], e[2] - e[3])
    return (e[0] - e[3], e[1] - e[3], e[2] - e[3])


def sigma_from_reduced(r: Sequence[int], torus: str, frame=None) -> OnePS:
    if torus == SL2xSL2:
        return OnePS((r[0], -r[0], r[1], -r[1]), torus, frame)
    return OnePS((r[0], r[1], r[2], -(r[0] + r[1] + r[2])), torus, frame)


@dataclass(frozen=True)
class WeightPolytope:
    torus: str
    support_weights: tuple[tuple[int, ...], ...]
    hull: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"torus": self.torus, "support_weights": [list(p) for p in self.support_weights],
                "hull": [list(p) for p in self.hull]}


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_2d(points: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Counterclockwise vertices starting from the lexicographically smallest point."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


def extreme_points(points: Sequence[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """Vertices of the hull in any dimension, lexicographically sorted."""
    pts = sorted(set(points))
    out = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1:]
        if not others:
            out.append(p)
            continue
        shifted = [tuple(a - b for a, b in zip(q, p)) for q in others]
        x, _ = min_norm_point(shifted)
        if any(x):
            out.append(p)
    return tuple(out)


def weight_polytope(f: MultiForm, torus: str | None = None, frame=None) -> WeightPolytope:
    if f.is_zero():
        raise ZeroForm("weight polytope of the zero form")
    torus = _check_torus(f, torus)
    g = _in_frame(f, frame)
    pts = tuple(sorted({weight_coordinates(e, torus) for e in g.support()}))
    hull = hull_2d(pts) if torus == SL2xSL2 else extreme_points(pts)
    return WeightPolytope(torus, pts, hull)


@dataclass(frozen=True)
class Semistable:
    def to_json(self) -> dict:
        return {"status": "Semistable"}


@dataclass(frozen=True)
class Unstable:
    sigma: OnePS
    support_min_weight: int = field(default=0)

    def to_json(self) -> dict:
        return {"status": "Unstable", "certificate": certificate_json(self)}


def certificate_json(u: Unstable) -> dict:
    """{weights, frame, support_min_weight}; support_min_weight = min over the support of <w, -sigma> > 0."""
    return {
        "weights": list(u.sigma.weights),
        "frame": None if u.sigma.frame is None else [[str(x) for x in r] for r in u.sigma.frame],
        "support_min_weight": u.support_min_weight,
    }


@dataclass(frozen=True)
class Instability:
    value: Fraction
    point: tuple[Fraction, ...]


def _nearest(f: MultiForm, torus: str | None, frame) -> tuple[str, WeightPolytope, tuple[Fraction, ...]]:
    poly = weight_polytope(f, torus, frame)
    x, _ = min_norm_point(poly.hull or poly.support_weights)
    return poly.torus, poly, x


def instability_measure(f: MultiForm, torus: str | None = None, frame=None) -> Instability:
    _, _, x = _nearest(f, torus, frame)
    return Instability(sum((c * c for c in x), Fraction(0)), x)


def verify_certificate(f: MultiForm, sigma: OnePS) -> int:
    """Return min over the support of the weight of -sigma; raises if not strictly positive."""
    g = _in_frame(f, sigma.frame)
    margin = min(-monomial_weight(e, sigma) for e in g.support())
    if margin <= 0:
        raise ArithmeticError(f"1-PS {sigma.weights} does not destabilise the form")
    return margin


def torus_semistable(f: MultiForm, torus: str | None = None, frame=None) -> Semistable | Unstable:
    t, poly, x = _nearest(f, torus, frame)
    if not any(x):
        return Semistable()
    # -x separates the hull from the origin: <w, x> >= |x|^2 > 0 on the support
    den = lcm(*(c.denominator for c in x))
    ints = [int(-c * den) for c in x]
    g = gcd(*ints)
    sigma = sigma_from_reduced([v // g for v in ints], t, None if frame is None else _normalize_matrix(f, frame))
    for w in poly.support_weights:
        if sum(a * b for a, b in zip(w, sigma.reduced())) >= 0:
            raise ArithmeticError("separating direction failed verification")
    return Unstable(sigma, verify_certificate(f, sigma))


def point_frame(point: tuple[Sequence, Sequence]) -> Matrix:
    """Block frame sending the coordinate point ([1:0],[1:0]) to the given point of P1 x P1."""
    (a0, a1), (b0, b1) = point
    xa = [[a0, 0], [a1, 1]] if a0 != 0 else [[0, 1], [a1, 0]]
    yb = [[b0, 0], [b1, 1]] if b0 != 0 else [[0, 1], [b1, 0]]
    z = 0
    return as_matrix([[xa[0][0], xa[0][1], z, z], [xa[1][0], xa[1][1], z, z],
                      [z, z, yb[0][0], yb[0][1]], [z, z, yb[1][0], yb[1][1]]])


def frame_search(f: MultiForm, frames: Sequence) -> Semistable | Unstable:
    """Heuristic: try each frame and return the first destabilising certificate.

    A Semistable answer only means no listed frame destabilises f; full
    semistability quantifies over all frames and is not decided here.
    """
    for fr in frames:
        res = torus_semistable(f, None, fr)
        if isinstance(res, Unstable):
            return res
    return Semistable()
