"""Local invariants of surface singularities and the volume-based exclusion engine.

Conventions: a cyclic quotient singularity 1/r(1, b) is the quotient of the
plane germ (u, v) by zeta.(u, v) = (zeta u, zeta^b v). The T-type 1/(e n^2)(1, e n a - 1)
has local index n and Milnor number e - 1.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .chow import PolyC
from .errors import NotQuasihomogeneous, ParityError, ParseError, RangeError
from .intervals import Interval, nonneg_witness

# ---------------------------------------------------------------- quotient data


@dataclass(frozen=True)
class QuotientSing:
    e: int
    n: int
    a: int

    def __post_init__(self):
        if min(self.e, self.n, self.a) < 1:
            raise RangeError("e, n, a must be positive")
        if math.gcd(self.a, self.n) != 1:
            raise RangeError(f"gcd(a, n) = gcd({self.a}, {self.n}) must be 1")

    @property
    def order(self) -> int:
        return self.e * self.n ** 2

    @property
    def index(self) -> int:
        return self.n

    @property
    def milnor(self) -> int:
        return self.e - 1

    @property
    def weight(self) -> int:
        """b in 1/r(1, b), reduced mod r."""
        return (self.e * self.n * self.a - 1) % self.order

    def label(self) -> str:
        return f"1/{self.order}(1,{self.weight})"

    def to_json(self) -> dict:
        return {"e": self.e, "n": self.n, "a": self.a, "order": self.order, "index": self.index,
                "milnor": self.milnor, "type": self.label()}


@dataclass(frozen=True)
class MonomialValuation:
    w1: int
    w2: int
    wD: int

    def __post_init__(self):
        if self.w1 < 1 or self.w2 < 1 or self.wD < 0:
            raise RangeError("weights must be positive and wD non-negative")

    @property
    def log_discrepancy(self) -> int:
        return self.w1 + self.w2

    @property
    def volume(self) -> Fraction:
        return Fraction(1, self.w1 * self.w2)


def nvol_monomial_bound(v: MonomialValuation, c: Union[Fraction, int, PolyC]):
    """(w1 + w2 - c wD)^2 / (w1 w2); c may be the symbol PolyC.c()."""
    if isinstance(c, PolyC):
        return (v.log_discrepancy - c * v.wD) ** 2 / (v.w1 * v.w2)
    c = Fraction(c)
    if c < 0:
        raise RangeError("c must be non-negative")
    adj = v.log_discrepancy - c * v.wD
    if adj <= 0:
        raise RangeError(f"adjusted log discrepancy {adj} is not positive")
    return adj * adj * v.volume


def nvol_quotient(order: int) -> Fraction:
    if order < 1:
        raise RangeError("group order must be positive")
    return Fraction(4, order)


def log_volume(d: int, c) -> Fraction:
    """(-K - cD)^2 = 8 (1 - dc/2)^2 for D in |-(d/2) K| on a degeneration of P1 x P1."""
    c = Fraction(c)
    return 8 * (1 - d * c / 2) ** 2


def global_bound_holds(d: int, c, nvol) -> bool:
    """8(1 - dc/2)^2 <= (9/4) nvol; False rules the singularity out at this c."""
    c = Fraction(c)
    if not 0 <= c < Fraction(2, d):
        raise RangeError(f"c={c} outside [0, 2/{d})")
    return log_volume(d, c) <= Fraction(9, 4) * Fraction(nvol)


# ---------------------------------------------------------------- index bounds

MuZero = "MuZero"
MuOne = "MuOne"
OddDEvenIndex = "OddDEvenIndex"


def _largest_k(scale: int, s: Fraction) -> int:
    """Largest integer k >= 0 with scale * k^2 * s^2 <= 9 (s > 0)."""
    # k <= 3 / (s sqrt(scale)); start from the integer floor of the square
    bound = Fraction(9) / (scale * s * s)
    k = math.isqrt(bound.numerator // bound.denominator)
    while scale * (k + 1) ** 2 * s * s <= 9:
        k += 1
    while k > 0 and scale * k * k * s * s > 9:
        k -= 1
    return k


def index_bound(d: int, c, case: str) -> int:
    c = Fraction(c)
    if not 0 < c < Fraction(2, d):
        raise RangeError(f"c={c} outside (0, 2/{d})")
    s = 2 - c * d
    if case == MuZero:
        return min(_largest_k(2, s), d + 1)
    if case == MuOne:
        return min(math.floor(Fraction(3) / (2 * s)), d)
    if case == OddDEvenIndex:
        if d % 2 == 0:
            raise ParityError("this case needs odd d")
        return min(2 * _largest_k(8, s), 2 * d - 2)
    raise ValueError(f"unknown case {case!r}")


# ---------------------------------------------------------------- congruences


def _character(sing: QuotientSing, d: int) -> tuple[int, int]:
    """(m, target) so that a monomial u^i v^j is admissible iff m (i + b j) = target mod r.

    The equation of the preimage of D is a semi-invariant whose character is
    fixed by (d/2) K + D ~ 0 (even d) or d K + 2 D ~ 0 (odd d); the canonical
    generator du^dv has character 1 + b.
    """
    r, b = sing.order, sing.weight
    if d % 2 == 0:
        return 1, (d // 2) * (1 + b) % r
    return 2, d * (1 + b) % r


def is_admissible(sing: QuotientSing, d: int, i: int, j: int) -> bool:
    m, target = _character(sing, d)
    return (m * (i + sing.weight * j) - target) % sing.order == 0


def congruence_monomials(sing: QuotientSing, d: int, max_total: int) -> list[tuple[int, int]]:
    out = [(i, s - i) for s in range(max_total + 1) for i in range(s, -1, -1)
           if is_admissible(sing, d, i, s - i)]
    return out


def congruence_text(sing: QuotientSing, d: int) -> str:
    m, target = _character(sing, d)
    lhs = f"i + {sing.weight}*j"
    return (f"{lhs} ≡ {target} mod {sing.order}" if m == 1 else f"2*({lhs}) ≡ {target} mod {sing.order}")


# ---------------------------------------------------------------- exclusion engine


@dataclass(frozen=True)
class Excluded:
    trace: tuple

    def to_json(self) -> dict:
        return {"status": "Excluded", "trace": list(self.trace)}


@dataclass(frozen=True)
class Inconclusive:
    i: int
    j: int
    c: Fraction
    trace: tuple = field(default=())

    def to_json(self) -> dict:
        return {"status": "Inconclusive", "witness": {"i": self.i, "j": self.j, "c": str(self.c)},
                "trace": list(self.trace)}


def _feasible(sing: QuotientSing, d: int, iv: Interval, w1: int, w2: int, wd: int) -> Fraction | None:
    """A c in iv with 32 r w1 w2 (1 - dc/2)^2 <= 9 (w1 + w2 - c wd)^2 and c wd < w1 + w2.

    Squaring is exact here: both sides of sqrt(32 r w1 w2)(1 - dc/2) <= 3 (A - c wd)
    are positive on the constrained interval.
    """
    A = w1 + w2
    K = 32 * sing.order * w1 * w2
    D = Fraction(d)
    qa = 9 * wd * wd - K * D * D / 4
    qb = -18 * A * wd + K * D
    qc = 9 * A * A - K
    if wd > 0:
        iv = iv.intersect(Interval(Fraction(-1), Fraction(A, wd)))
    return nonneg_witness(qa, qb, qc, iv)


def _min_weighted(adm: list[tuple[int, int]], w1: int, w2: int) -> int:
    return min(w1 * i + w2 * j for i, j in adm)


def _refinement_weights(r: int) -> list[tuple[int, int]]:
    return [(w1, w2) for w1 in range(1, r + 1) for w2 in range(1, r + 1)
            if math.gcd(w1, w2) == 1 and (w1, w2) != (1, 1)]


def exclude_singularity(sing: QuotientSing, d: int, iv: Interval) -> Excluded | Inconclusive:
    """Try to rule out a singularity of type ``sing`` on X for every c in ``iv``.

    A candidate is the total degree s of the lowest-order part of the local
    equation of the preimage of D (some admissible u^i v^j with i + j = s).
    The ord valuation gives 32 r (1 - dc/2)^2 <= 9 (2 - cs)^2, which only gets
    harder as s grows, so the scan over s stops at the first infeasible s.
    Each surviving s is then tested against monomial valuations (w1, w2),
    with wD the least weighted value over admissible monomials of total
    degree >= s (a finite search in [0, r + s)^2).
    """
    if iv.is_empty() or iv.lo < 0 or iv.hi > Fraction(2, d) or (iv.lo == 0 and iv.lo_closed) \
            or (iv.hi == Fraction(2, d) and iv.hi_closed):
        raise RangeError(f"interval {iv} must lie in (0, 2/{d})")
    r = sing.order
    trace: list[dict] = [{"step": "setup", "type": sing.label(), "d": d, "interval": str(iv),
                          "congruence": congruence_text(sing, d),
                          "inequality": "32*r*w1*w2*(1 - d*c/2)^2 <= 9*(w1 + w2 - c*wD)^2"}]
    survivors: list[tuple[int, list[tuple[int, int]], Fraction]] = []
    if r == 1:
        # a smooth point: 32 (1 - dc/2)^2 <= 36 near c = 0, so the degree scan never closes
        wit = _feasible(sing, d, iv, 1, 1, 0)
        trace.append({"step": "ord", "total_degree": 0, "killed_by": None, "note": "smooth point"})
        if wit is None:
            return Excluded(tuple(trace))
        return Inconclusive(0, 0, wit, tuple(trace))
    s = 0
    while True:
        wit = _feasible(sing, d, iv, 1, 1, s)
        if wit is None:
            trace.append({"step": "ord", "total_degree": f">= {s}", "killed_by": "ord valuation",
                          "note": "infeasible at this degree, hence at every larger degree"})
            break
        mons = [(i, s - i) for i in range(s, -1, -1) if is_admissible(sing, d, i, s - i)]
        if mons:
            survivors.append((s, mons, wit))
        s += 1

    for s, mons, wit in survivors:
        box = r + s
        adm = [(i, j) for i in range(box) for j in range(box) if i + j >= s and is_admissible(sing, d, i, j)]
        killed = None
        for w1, w2 in _refinement_weights(r):
            wd = _min_weighted(adm, w1, w2)
            if _feasible(sing, d, iv, w1, w2, wd) is None:
                killed = (w1, w2, wd)
                break
        if killed is None:
            i, j = mons[0]
            trace.append({"step": "refine", "total_degree": s, "monomials": [list(m) for m in mons],
                          "killed_by": None, "search_box": box})
            return Inconclusive(i, j, wit, tuple(trace))
        w1, w2, wd = killed
        trace.append({"step": "refine", "total_degree": s, "monomials": [list(m) for m in mons],
                      "killed_by": "monomial valuation", "weights": [w1, w2], "wD": wd,
                      "search_box": box})
    return Excluded(tuple(trace))


# ---------------------------------------------------------------- Markov-type triples


@dataclass(frozen=True, order=True)
class MarkovTriple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1:
            raise RangeError("entries must be positive")

    def is_solution(self) -> bool:
        return self.a ** 2 + self.b ** 2 + 2 * self.c ** 2 == 4 * self.a * self.b * self.c

    def canonical(self) -> "MarkovTriple":
        """Representative under the a <-> b symmetry of the equation."""
        return MarkovTriple(min(self.a, self.b), max(self.a, self.b), self.c)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def vieta_neighbors(t: MarkovTriple) -> tuple[MarkovTriple, ...]:
    a, b, c = t.a, t.b, t.c
    return (MarkovTriple(4 * b * c - a, b, c), MarkovTriple(a, 4 * a * c - b, c), MarkovTriple(a, b, 2 * a * b - c))


def markov_enumerate(bound: int) -> list[MarkovTriple]:
    """All ordered solutions with max entry <= bound, by Vieta jumps from (1, 1, 1)."""
    if bound < 1:
        raise RangeError("bound must be positive")
    root = MarkovTriple(1, 1, 1)
    seen = {root}
    queue = deque([root])
    while queue:
        t = queue.popleft()
        for nb in vieta_neighbors(t):
            if max(nb.as_tuple()) <= bound and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return sorted(seen)


def markov_classes(bound: int) -> list[MarkovTriple]:
    return sorted({t.canonical() for t in markov_enumerate(bound)})


def weighted_projective_from_markov(t: MarkovTriple) -> tuple[int, int, int]:
    if not t.is_solution():
        raise RangeError(f"{t.as_tuple()} does not solve a^2 + b^2 + 2c^2 = 4abc")
    return tuple(sorted((t.a ** 2, t.b ** 2, 2 * t.c ** 2)))


@dataclass(frozen=True)
class TType:
    e: int
    n: int
    a: int
    milnor: int


def is_T_singularity(r: int, b: int) -> TType | None:
    """Recognise 1/r(1, b) as a T-singularity 1/(e n^2)(1, e n a - 1).

    The local index is n = r / gcd(r, b + 1); the type is T exactly when n^2
    divides r and a = (b + 1)/(e n) is prime to n. The coordinate swap
    1/r(1, b) = 1/r(1, b^-1) is also tried.
    """
    if r < 1 or math.gcd(b, r) != 1:
        return None
    cands = [b % r]
    if r > 1:
        inv = pow(b, -1, r)
        if inv != cands[0]:
            cands.append(inv)
    for bb in cands:
        n = r // math.gcd(r, bb + 1)
        if r % (n * n):
            continue
        e = r // (n * n)
        a = ((bb + 1) // (e * n)) % n if n > 1 else 1
        if n > 1 and ((bb + 1) % (e * n) or math.gcd(a, n) != 1):
            continue
        a = a or n
        return TType(e, n, a, e - 1)
    return None


# ---------------------------------------------------------------- lct of plane curve germs


@dataclass(frozen=True)
class LctResult:
    label: str
    lct: Fraction
    multiplicity: int
    skoda_bound: Fraction
    quasihomogeneous: bool
    nondegeneracy_assumed: bool

    def to_json(self) -> dict:
        return {"label": self.label, "lct": str(self.lct), "multiplicity": self.multiplicity,
                "skoda_bound": str(self.skoda_bound), "quasihomogeneous": self.quasihomogeneous,
                "nondegeneracy_assumed": self.nondegeneracy_assumed}


_MONO = re.compile(r"^(?:[a-z]\w*\*?)?(?P<body>(?:[xy](?:\^\d+)?\*?)*)$")


def parse_local_equation(text: str) -> list[tuple[int, int]]:
    """Exponents (i, j) of x^i y^j in a germ like 'x^3 + b1*x^2*y^3 + y^9'.

    Letters other than x, y are generic nonzero parameters; '=0' is ignored.
    """
    body = text.replace("³", "^3").replace("²", "^2").split("=")[0]
    body = body.replace(" ", "")
    out = []
    for term in re.split(r"[+-]", body):
        if not term:
            continue
        i = j = 0
        found = False
        for var, exp in re.findall(r"([xy])(?:\^(\d+))?", term):
            found = True
            if var == "x":
                i += int(exp or 1)
            else:
                j += int(exp or 1)
        rest = re.sub(r"[xy](?:\^\d+)?", "", term).replace("*", "")
        if rest and not re.fullmatch(r"[a-z]\w*|\d+", rest):
            raise ParseError(f"cannot read term {term!r}")
        if not found:
            raise ParseError(f"constant term {term!r} in a singular germ")
        out.append((i, j))
    if not out:
        raise ParseError(f"empty equation {text!r}")
    return sorted(set(out))


def newton_threshold(mons: list[tuple[int, int]]) -> Fraction:
    """Smallest t with (t, t) in the Newton polyhedron conv(support) + R^2_{>=0}."""
    best = min(Fraction(max(i, j)) for i, j in mons)
    for p in mons:
        for q in mons:
            dp, dq = p[0] - p[1], q[0] - q[1]
            if dp * dq < 0:
                lam = Fraction(dp, dp - dq)
                t = p[0] + lam * (q[0] - p[0])
                best = min(best, t)
    return best


def _principal_part(mons: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Support on the compact face(s) of the Newton boundary met by the diagonal."""
    t = newton_threshold(mons)
    # a supporting weight (w1, w2) for the face hit by the diagonal
    best_face = None
    for p in mons:
        for q in mons:
            if p < q and p[0] != q[0] and p[1] != q[1]:
                w1, w2 = abs(q[1] - p[1]), abs(q[0] - p[0])
                g = math.gcd(w1, w2)
                w1, w2 = w1 // g, w2 // g
                level = w1 * p[0] + w2 * p[1]
                if all(w1 * i + w2 * j >= level for i, j in mons) and Fraction(level, w1 + w2) == t:
                    best_face = (w1, w2, level)
    if best_face is None:
        return [m for m in mons if max(m) == t]
    w1, w2, level = best_face
    return [(i, j) for i, j in mons if w1 * i + w2 * j == level]


LOCAL_CATALOG = {
    "quadruple conic": "x^4",
    "triple conic + transverse conic": "x^3*y",
    "J_{4,∞}": "x^3 + x^2*y^4",
    "J_{3,0}": "x^3 + b1*x^2*y^3 + y^9 + b2*x*y^7",
    "E_14": "x^3 + y^8 + a*x*y^6",
    "E_13": "x^3 + x*y^5 + a*y^8",
    "E_12": "x^3 + y^7 + a*x*y^5",
}


def catalog_equation(label: str) -> str:
    m = re.fullmatch(r"A_(\d+)", label.strip())
    if m:
        k = int(m.group(1))
        return f"x^2 + y^{k + 1}"
    if label in LOCAL_CATALOG:
        return LOCAL_CATALOG[label]
    raise ParseError(f"unknown catalog entry {label!r}")


def lct_catalog(entry: str, strict: bool = False) -> LctResult:
    """lct of a cataloged germ (label like 'E_12', 'A_3') or an explicit equation in x, y.

    The Newton-polygon value min(1, 1/t) is exact when the face met by the
    diagonal is nondegenerate. Faces with one or two monomials always are;
    with three or more it depends on the coefficients, so nondegeneracy is
    assumed and flagged, and ``strict`` turns that into an error.
    """
    try:
        eq = catalog_equation(entry)
    except ParseError:
        eq = entry
    mons = parse_local_equation(eq)
    t = newton_threshold(mons)
    mult = min(i + j for i, j in mons)
    face = _principal_part(mons)
    qh = len(face) == len(mons)
    caveat = len(face) >= 3
    if strict and caveat:
        raise NotQuasihomogeneous(f"{entry}: value needs a nondegenerate principal part")
    return LctResult(entry, min(Fraction(1), 1 / t), mult, Fraction(2, mult), qh, caveat)
