"""Rational intervals with explicit endpoint types, and exact quadratic sign tests on them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))

    @classmethod
    def open(cls, lo, hi) -> "Interval":
        return cls(lo, hi)

    @classmethod
    def empty(cls) -> "Interval":
        return cls(Fraction(0), Fraction(0))

    def is_empty(self) -> bool:
        return self.lo > self.hi or (self.lo == self.hi and not (self.lo_closed and self.hi_closed))

    def __contains__(self, x) -> bool:
        x = Fraction(x)
        if self.is_empty():
            return False
        left = x > self.lo or (self.lo_closed and x == self.lo)
        right = x < self.hi or (self.hi_closed and x == self.hi)
        return left and right

    def covers(self, other: "Interval") -> bool:
        """True when every point of ``other`` lies in self."""
        if other.is_empty():
            return True
        if self.is_empty():
            return False
        lo_ok = self.lo < other.lo or (self.lo == other.lo and (self.lo_closed or not other.lo_closed))
        hi_ok = self.hi > other.hi or (self.hi == other.hi and (self.hi_closed or not other.hi_closed))
        return lo_ok and hi_ok

    def intersect(self, other: "Interval") -> "Interval":
        if self.lo > other.lo or (self.lo == other.lo and not self.lo_closed):
            lo, lc = self.lo, self.lo_closed
        else:
            lo, lc = other.lo, other.lo_closed
        if self.hi < other.hi or (self.hi == other.hi and not self.hi_closed):
            hi, hc = self.hi, self.hi_closed
        else:
            hi, hc = other.hi, other.hi_closed
        return Interval(lo, hi, lc, hc)

    def __str__(self) -> str:
        if self.is_empty():
            return "∅"
        return f"{'[' if self.lo_closed else '('}{self.lo}, {self.hi}{']' if self.hi_closed else ')'}"

    def to_json(self) -> dict:
        if self.is_empty():
            return {"empty": True}
        return {"lo": str(self.lo), "hi": str(self.hi), "lo_closed": self.lo_closed, "hi_closed": self.hi_closed}


def parse_interval(text: str) -> Interval:
    """'0,1/2' -> open interval (0, 1/2); brackets select closed ends, e.g. '[1/8,1/2)'."""
    from .forms import parse_rational

    s = text.strip()
    lc = s.startswith("[")
    hc = s.endswith("]")
    s = s.strip("[]()")
    parts = s.split(",")
    if len(parts) != 2:
        raise ParseError(f"bad interval {text!r}")
    return Interval(parse_rational(parts[0]), parse_rational(parts[1]), lc, hc)


def quad(a: Fraction, b: Fraction, c: Fraction, x: Fraction) -> Fraction:
    return (a * x + b) * x + c


def _approach(a, b, c, inside: Fraction, end: Fraction) -> Fraction:
    # bisect from an interior point towards an endpoint near which the quadratic is >= 0
    x = inside
    while quad(a, b, c, x) < 0:
        x = (x + end) / 2
    return x


def nonneg_witness(a, b, c, iv: Interval) -> Fraction | None:
    """A rational x in iv with a x^2 + b x + c >= 0, or None if none exists.

    Exact case analysis: values at closed endpoints and at the vertex when it
    is interior, then the limiting sign at each open endpoint (value, then
    inward derivative, then curvature).
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if iv.is_empty():
        return None
    if iv.lo == iv.hi:
        return iv.lo if quad(a, b, c, iv.lo) >= 0 else None
    cands = []
    if iv.lo_closed:
        cands.append(iv.lo)
    if iv.hi_closed:
        cands.append(iv.hi)
    if a != 0:
        v = -b / (2 * a)
        if iv.lo < v < iv.hi:
            cands.append(v)
    for x in cands:
        if quad(a, b, c, x) >= 0:
            return x
    mid = (iv.lo + iv.hi) / 2
    if quad(a, b, c, mid) >= 0:
        return mid
    for end, inward, closed in ((iv.lo, 1, iv.lo_closed), (iv.hi, -1, iv.hi_closed)):
        if closed:
            continue
        val = quad(a, b, c, end)
        slope = inward * (2 * a * end + b)
        if val > 0 or (val == 0 and (slope > 0 or (slope == 0 and a > 0))):
            return _approach(a, b, c, mid, end)
    return None
