"""Slope-dependent weight bounds for (quadric, degree-d section) pairs.

Everything here certifies instability only: a negative bound
mu(q, sigma) + t mu(g, sigma) proves the pair unstable at slope t, and a
non-negative bound proves nothing.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import GradingError, RangeError
from .forms import Homogeneous, MultiForm, change_coordinates
from .hm import SL4, OnePS, hm_weight
from .intervals import Interval
from .linalg import Matrix, as_matrix, congruence_diagonalize, matmul
from .walls import t_walls

NORMAL_FORMS = {
    "rank1": "x0^2",
    "rank2": "x0*x1",
    "rank3": "x1^2 + x2^2 + x3^2",
    "rank4": "x0*x1 - x2*x3",
}

SIGMA_RANK_LE_2 = (-1, -1, 1, 1)
SIGMA_RANK_3 = (3, -1, -1, -1)
SIGMA_COMMON_PLANE = (-3, 1, 1, 1)


@dataclass(frozen=True)
class SlopePolarization:
    d: int
    t: Fraction
    delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t", Fraction(self.t))
        object.__setattr__(self, "delta", Fraction(self.delta))
        if self.d < 3:
            raise RangeError("d must be at least 3")
        if not 0 < self.delta < Fraction(2, 3 * self.d):
            raise RangeError(f"delta={self.delta} outside (0, 2/{3 * self.d})")
        if not self.delta < self.t <= Fraction(2, self.d):
            raise RangeError(f"t={self.t} outside ({self.delta}, 2/{self.d}]")


@dataclass(frozen=True)
class RestrictedPolarization:
    eta: Fraction
    xi: Fraction
    mixing: tuple[Fraction, Fraction]

    def to_json(self) -> dict:
        return {"class": [str(self.eta), str(self.xi)], "mixing": [str(x) for x in self.mixing]}


def restricted_polarization(pol: SlopePolarization) -> RestrictedPolarization:
    """alpha (eta + delta xi) + beta (d eta + 2 xi) with alpha + d beta = 1, restricted to the open set.

    The Chow polarization extends as d eta + 2 xi, so the mix is eta + t xi.
    """
    d, t, dl = pol.d, pol.t, pol.delta
    alpha = (2 - d * t) / (2 - d * dl)
    beta = (t - dl) / (2 - d * dl)
    eta = alpha + d * beta
    xi = alpha * dl + 2 * beta
    return RestrictedPolarization(eta, xi, (alpha, beta))


def ample_range(d: int, t) -> bool:
    t = Fraction(t)
    return 0 < t < Fraction(1, d - 1)


def _check_pair(q: MultiForm, g: MultiForm) -> None:
    if q.grading != Homogeneous(2):
        raise GradingError(f"q must be a quadric, got degree {q.grading}")
    if not isinstance(g.grading, Homogeneous):
        raise GradingError("g must be a form on P3")


def vgit_mu_bound(q: MultiForm, g: MultiForm, sigma: OnePS, t) -> Fraction:
    _check_pair(q, g)
    return hm_weight(q, sigma) + Fraction(t) * hm_weight(g, sigma)


@dataclass(frozen=True)
class DestabCertificate:
    q: MultiForm
    g: MultiForm
    sigma: OnePS
    bound: tuple[int, int]  # (a, b): bound(t) = a + b t
    label: str = ""

    def at(self, t) -> Fraction:
        a, b = self.bound
        return a + b * Fraction(t)

    def validate(self) -> bool:
        return self.bound == (hm_weight(self.q, self.sigma), hm_weight(self.g, self.sigma))

    def to_json(self) -> dict:
        return {"label": self.label, "q": self.q.serialize(), "g": self.g.serialize(),
                "sigma": self.sigma.to_json(), "bound": [str(x) for x in self.bound]}


def make_certificate(q: MultiForm, g: MultiForm, sigma: OnePS, label: str = "") -> DestabCertificate:
    _check_pair(q, g)
    return DestabCertificate(q, g, sigma, (hm_weight(q, sigma), hm_weight(g, sigma)), label)


def destabilizing_interval(cert: DestabCertificate, d: int) -> Interval:
    """{t in (0, 2/d] : a + b t < 0}."""
    a, b = (Fraction(x) for x in cert.bound)
    top = Fraction(2, d)
    full = Interval(Fraction(0), top, False, True)
    if b == 0:
        return full if a < 0 else Interval.empty()
    root = -a / b
    if b > 0:
        return full.intersect(Interval(min(root, Fraction(0)) - 1, root, False, False))
    return full.intersect(Interval(root, max(root, top) + 1, False, False))


# ---------------------------------------------------------------- normal-form certificates


def quadric_matrix(q: MultiForm) -> Matrix:
    if q.grading != Homogeneous(2):
        raise GradingError("not a quadric")
    a = [[Fraction(0)] * 4 for _ in range(4)]
    for e, c in q.terms.items():
        idx = [i for i in range(4) for _ in range(e[i])]
        i, j = idx
        if i == j:
            a[i][i] += c
        else:
            a[i][j] += c / 2
            a[j][i] += c / 2
    return as_matrix(a)


def quadric_rank(q: MultiForm) -> int:
    _, diag = congruence_diagonalize(quadric_matrix(q))
    return sum(1 for x in diag if x)


def _permuted(p: Matrix, order: Sequence[int]) -> Matrix:
    perm = [[Fraction(int(order[j] == i)) for j in range(4)] for i in range(4)]
    return matmul(p, as_matrix(perm))


def quadric_frame(q: MultiForm) -> tuple[int, Matrix]:
    """(rank, M) with q(M y) diagonal; nonzero entries first for rank <= 2, the kernel first for rank 3."""
    p, diag = congruence_diagonalize(quadric_matrix(q))
    nz = [i for i in range(4) if diag[i]]
    z = [i for i in range(4) if not diag[i]]
    rank = len(nz)
    order = z + nz if rank == 3 else nz + z
    return rank, _permuted(p, order)


def normal_form_certificate(q: MultiForm, g: MultiForm) -> DestabCertificate | None:
    """Built-in certificate for singular quadrics; None for smooth ones.

    Rank <= 2 uses (-1,-1,1,1), giving -2 + t d for generic g. Rank 3 puts the
    cone vertex at [1:0:0:0] and uses (3,-1,-1,-1), giving -2 + 3 d t.
    """
    _check_pair(q, g)
    rank, frame = quadric_frame(q)
    if rank == 4 or rank == 0:
        return None
    if rank <= 2:
        sigma = OnePS(SIGMA_RANK_LE_2, SL4, frame)
        return make_certificate(q, g, sigma, f"rank {rank}")
    sigma = OnePS(SIGMA_RANK_3, SL4, frame)
    return make_certificate(q, g, sigma, "rank 3")


def common_plane_certificate(q: MultiForm, g: MultiForm, frame=None) -> DestabCertificate | None:
    """(-3,1,1,1) certificate when, in ``frame``, q lies in (x0) and x0 divides g.

    Gives -2 + t (d - 4): unstable on the whole range for d <= 4.
    """
    _check_pair(q, g)
    qf = q if frame is None else change_coordinates(q, frame)
    gf = g if frame is None else change_coordinates(g, frame)
    if qf.is_zero() or gf.is_zero():
        return None
    if any(e[0] == 0 for e in qf.support()) or any(e[0] == 0 for e in gf.support()):
        return None
    sigma = OnePS(SIGMA_COMMON_PLANE, SL4, None if frame is None else as_matrix(frame))
    return make_certificate(q, g, sigma, "common plane")


# ---------------------------------------------------------------- chamber scan


@dataclass(frozen=True)
class ChamberStatus:
    lo: Fraction
    hi: Fraction
    certificate: int | None

    @property
    def status(self) -> str:
        return "Unknown" if self.certificate is None else "CertifiedUnstable"

    def to_json(self) -> dict:
        return {"interval": [str(self.lo), str(self.hi)], "status": self.status,
                "certificate": self.certificate}


def chamber_scan(certs: Sequence[DestabCertificate], d: int, walls: Sequence[Fraction] | None = None
                 ) -> list[ChamberStatus]:
    """Open chambers between consecutive t-walls (starting at 0), each tagged with the
    first certificate whose destabilizing interval covers it."""
    ws = sorted(Fraction(w) for w in (t_walls(d) if walls is None else walls))
    pts = [Fraction(0)] + [w for w in ws if w > 0]
    intervals = [destabilizing_interval(c, d) for c in certs]
    out = []
    for lo, hi in zip(pts, pts[1:]):
        cell = Interval(lo, hi)
        hit = next((k for k, iv in enumerate(intervals) if iv.covers(cell)), None)
        out.append(ChamberStatus(lo, hi, hit))
    return out


def scan_report(certs: Sequence[DestabCertificate], d: int, walls=None) -> dict:
    ws = sorted(Fraction(w) for w in (t_walls(d) if walls is None else walls))
    return {"d": d, "walls": [str(w) for w in ws],
            "chambers": [c.to_json() for c in chamber_scan(certs, d, ws)]}


# ---------------------------------------------------------------- random instances


def _rand_q(rng: random.Random, spread: int = 9) -> Fraction:
    while True:
        x = Fraction(rng.randint(-spread, spread), rng.randint(1, spread))
        if x:
            return x


def generic_section(d: int, rng: random.Random) -> MultiForm:
    """Dense degree-d form with random nonzero rational coefficients."""
    terms = {}
    for a in range(d + 1):
        for b in range(d + 1 - a):
            for c in range(d + 1 - a - b):
                terms[(a, b, c, d - a - b - c)] = _rand_q(rng)
    return MultiForm(Homogeneous(d), terms)


def random_quadric(rank: int, rng: random.Random) -> MultiForm:
    """sum of rank scaled squares of independent random linear forms."""
    if not 0 < rank <= 4:
        raise RangeError("rank must be 1..4")
    while True:
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(4)] for _ in range(rank)]
        q = MultiForm(Homogeneous(2))
        for row in rows:
            lin = MultiForm(Homogeneous(1), {tuple(int(i == j) for j in range(4)): row[i] for i in range(4)})
            q = q + _rand_q(rng) * lin ** 2
        if not q.is_zero() and quadric_rank(q) == rank:
            return q
