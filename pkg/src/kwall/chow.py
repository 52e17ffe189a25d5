"""Truncated intersection rings for the two universal families.

Ambients:
  P3xPE  symbols (h, eta, xi), fibre relation h^4 = 0
  P1P1xP symbols (h1, h2, H),  fibre relations h1^2 = h2^2 = 0
Coefficients are exact polynomials in the boundary coefficient c.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from types import MappingProxyType
from typing import Mapping, Union

from .errors import AmbientMismatch, NotProportional, RangeError


class PolyC:
    """Univariate polynomial in c over Q; coefficients stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(x) for x in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def c(cls) -> "PolyC":
        return cls((0, 1))

    @staticmethod
    def lift(x) -> "PolyC":
        return x if isinstance(x, PolyC) else PolyC((x,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other) -> "PolyC":
        o = PolyC.lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return PolyC(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "PolyC":
        return PolyC(-x for x in self.coeffs)

    def __sub__(self, other) -> "PolyC":
        return self + (-PolyC.lift(other))

    def __rsub__(self, other) -> "PolyC":
        return PolyC.lift(other) - self

    def __mul__(self, other) -> "PolyC":
        o = PolyC.lift(other)
        if self.is_zero() or o.is_zero():
            return PolyC()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(o.coeffs):
                out[i + j] += x * y
        return PolyC(out)

    __rmul__ = __mul__

    def __truediv__(self, k) -> "PolyC":
        if isinstance(k, PolyC):
            raise TypeError("division by a polynomial")
        return PolyC(x / Fraction(k) for x in self.coeffs)

    def __pow__(self, k: int) -> "PolyC":
        out = PolyC((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, c) -> Fraction:
        c = Fraction(c)
        acc = Fraction(0)
        for x in reversed(self.coeffs):
            acc = acc * c + x
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyC((other,))
        return isinstance(other, PolyC) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_json(self) -> list[str]:
        return [str(x) for x in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, x in enumerate(self.coeffs):
            if x == 0:
                continue
            mono = "" if k == 0 else ("c" if k == 1 else f"c^{k}")
            if mono and abs(x) == 1:
                body = mono
            elif mono:
                body = f"{abs(x)}*{mono}"
            else:
                body = str(abs(x))
            parts.append(("-" if x < 0 else "+", body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {b}" for s, b in parts[1:])

    __repr__ = __str__


Coeff = Union[int, Fraction, PolyC]


@dataclass(frozen=True)
class Ambient:
    name: str
    symbols: tuple[str, str, str]
    caps: tuple[int | None, int | None, int | None]  # max allowed exponent per symbol; None = free

    def allows(self, e) -> bool:
        return all(cap is None or k <= cap for k, cap in zip(e, self.caps))


P3xPE = Ambient("P3xPE", ("h", "eta", "xi"), (3, None, None))
P1P1xP = Ambient("P1P1xP", ("h1", "h2", "H"), (1, 1, None))
AMBIENTS = {a.name: a for a in (P3xPE, P1P1xP)}


class ChowClass:
    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: Ambient, terms: Mapping[tuple[int, int, int], Coeff] = ()):
        clean: dict[tuple[int, int, int], PolyC] = {}
        for e, c in dict(terms).items():
            e = tuple(int(x) for x in e)
            if not ambient.allows(e):
                continue
            clean[e] = clean.get(e, PolyC()) + PolyC.lift(c)
        self.ambient = ambient
        self.terms = MappingProxyType({e: c for e, c in sorted(clean.items()) if not c.is_zero()})

    @classmethod
    def symbol(cls, ambient: Ambient, name: str) -> "ChowClass":
        e = [0, 0, 0]
        e[ambient.symbols.index(name)] = 1
        return cls(ambient, {tuple(e): 1})

    @classmethod
    def scalar(cls, ambient: Ambient, c: Coeff) -> "ChowClass":
        return cls(ambient, {(0, 0, 0): c})

    def _same(self, other: "ChowClass") -> None:
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"{self.ambient.name} vs {other.ambient.name}")

    def __add__(self, other) -> "ChowClass":
        if not isinstance(other, ChowClass):
            other = ChowClass.scalar(self.ambient, other)
        self._same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, PolyC()) + c
        return ChowClass(self.ambient, out)

    __radd__ = __add__

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.ambient, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "ChowClass":
        return self + (-other)

    def __mul__(self, other) -> "ChowClass":
        if not isinstance(other, ChowClass):
            return ChowClass(self.ambient, {e: c * PolyC.lift(other) for e, c in self.terms.items()})
        return chow_mul(self, other)

    def __rmul__(self, other) -> "ChowClass":
        return self * other

    def __pow__(self, k: int) -> "ChowClass":
        out = ChowClass.scalar(self.ambient, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, ChowClass) and self.ambient == other.ambient and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.ambient, tuple(self.terms.items())))

    def coefficient(self, e) -> PolyC:
        return self.terms.get(tuple(e), PolyC())

    def evaluate(self, c) -> "ChowClass":
        return ChowClass(self.ambient, {e: PolyC((p(c),)) for e, p in self.terms.items()})

    def to_json(self) -> dict:
        return {"ambient": self.ambient.name,
                "terms": [{"exponents": list(e), "coeff_poly_in_c": p.to_json()} for e, p in self.terms.items()]}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, p in self.terms.items():
            mono = "*".join(s if k == 1 else f"{s}^{k}" for s, k in zip(self.ambient.symbols, e) if k)
            parts.append(f"({p})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    __repr__ = __str__


def chow_mul(a: ChowClass, b: ChowClass) -> ChowClass:
    a._same(b)
    out: dict = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
            if a.ambient.allows(e):
                out[e] = out.get(e, PolyC()) + ca * cb
    return ChowClass(a.ambient, out)


QuadricInP3 = "QuadricInP3"
P1P1trivial = "P1P1trivial"


def integrate_fiber(a: ChowClass) -> ChowClass:
    """Keep only terms of full fibre degree and drop the fibre symbols (h^3, resp. h1*h2)."""
    amb = a.ambient
    if amb == P3xPE:
        keep = {(0,) + e[1:]: c for e, c in a.terms.items() if e[0] == 3}
    else:
        keep = {(0, 0, e[2]): c for e, c in a.terms.items() if e[0] == 1 and e[1] == 1}
    return ChowClass(amb, keep)


def pushforward_family(a: ChowClass, family: str) -> ChowClass:
    """Push a class on the total space of the family down to the base."""
    if family == QuadricInP3:
        if a.ambient != P3xPE:
            raise AmbientMismatch("quadric family lives in P3 x P(E)")
        fam = 2 * ChowClass.symbol(P3xPE, "h") + ChowClass.symbol(P3xPE, "eta")
        return integrate_fiber(a * fam)
    if family == P1P1trivial:
        if a.ambient != P1P1xP:
            raise AmbientMismatch("trivial P1 x P1 family lives in P1 x P1 x P")
        return integrate_fiber(a)
    raise ValueError(f"unknown family {family!r}")


def log_anticanonical_pe(d: int) -> ChowClass:
    """(2 - d c) h - eta - c xi: relative -K - cD on the quadric family."""
    c = PolyC.c()
    h, eta, xi = (ChowClass.symbol(P3xPE, s) for s in P3xPE.symbols)
    return h * (2 - d * c) - eta - xi * c


def log_anticanonical_p1p1(d: int) -> ChowClass:
    c = PolyC.c()
    h1, h2, H = (ChowClass.symbol(P1P1xP, s) for s in P1P1xP.symbols)
    return (h1 + h2) * (2 - d * c) - H * c


def cm_class_pe(d: int) -> ChowClass:
    """CM class on the projective bundle over the space of quadrics: a(c) eta + b(c) xi."""
    if d < 3:
        raise RangeError("d must be at least 3")
    return -pushforward_family(log_anticanonical_pe(d) ** 3, QuadricInP3)


def cm_class_p44(d: int) -> ChowClass:
    """CM class for the trivial P1 x P1 family over P(H^0(O(d,d))): a multiple of H."""
    if d < 3:
        raise RangeError("d must be at least 3")
    return -pushforward_family(log_anticanonical_p1p1(d) ** 3, P1P1trivial)


def expected_pe(d: int) -> tuple[PolyC, PolyC]:
    c = PolyC.c()
    base = (2 - d * c) ** 2
    return base * (d * c + 4), base * c * 6


def slope_of(d: int, c) -> Fraction:
    c = Fraction(c)
    return 6 * c / (d * c + 4)


@dataclass(frozen=True)
class Proportionality:
    rho: Fraction
    t: Fraction


def proportionality_check(d: int, c) -> Proportionality:
    """Find rho > 0 with cm_class_pe(d)(c) = rho * (eta + t xi), t = 6c/(dc+4)."""
    c = Fraction(c)
    if not 0 <= c < Fraction(2, d):
        raise RangeError(f"c={c} outside [0, 2/{d})")
    cls = cm_class_pe(d).evaluate(c)
    a = cls.coefficient((0, 1, 0))(0)
    b = cls.coefficient((0, 0, 1))(0)
    if set(cls.terms) - {(0, 1, 0), (0, 0, 1)}:
        raise NotProportional("unexpected terms in CM class")
    t = slope_of(d, c)
    if a <= 0 or b != a * t:
        raise NotProportional(f"CM class {cls} is not a positive multiple of eta + {t} xi")
    return Proportionality(a, t)


def brute_cube_pushforward(linear: dict[tuple[int, int, int], PolyC], ambient: Ambient) -> dict:
    """Independent expansion: sum over ordered triples of terms of a linear class.

    Used as an oracle; does not touch ChowClass arithmetic.
    """
    items = list(linear.items())
    total: dict = {}
    for (e1, c1), (e2, c2), (e3, c3) in product(items, repeat=3):
        e = tuple(a + b + c for a, b, c in zip(e1, e2, e3))
        coef = c1 * c2 * c3
        if ambient == P3xPE:
            # multiply by 2h + eta, keep h^3
            for fe, fc in (((1, 0, 0), 2), ((0, 1, 0), 1)):
                g = tuple(a + b for a, b in zip(e, fe))
                if g[0] == 3:
                    key = (0, g[1], g[2])
                    total[key] = total.get(key, PolyC()) + coef * fc
        else:
            if e[0] == 1 and e[1] == 1:
                key = (0, 0, e[2])
                total[key] = total.get(key, PolyC()) + coef
    return {k: -v for k, v in total.items() if not v.is_zero()}
