"""Wall values and coordinate changes between the c, t, beta and m parametrisations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F

from .errors import RangeError, UnknownWalls

C_WALLS = (F(1, 8), F(1, 5), F(1, 4), F(2, 7), F(5, 16), F(1, 3), F(4, 11), F(1, 2))
T_WALLS = (F(1, 6), F(1, 4), F(3, 10), F(1, 3), F(5, 14), F(3, 8), F(2, 5), F(1, 2))
BETA_WALLS = (F(1), F(1, 2), F(1, 3), F(1, 4), F(1, 5), F(1, 6), F(1, 8), F(0))


@dataclass(frozen=True)
class CatalogRow:
    index: int
    c: F
    minus_side: str
    plus_side: str

    def to_json(self) -> dict:
        return {"index": self.index, "c": str(self.c), "minus_side": self.minus_side, "plus_side": self.plus_side}


CATALOG = (
    CatalogRow(1, F(1, 8), "quadruple conic", "v ∉ D"),
    CatalogRow(2, F(1, 5), "triple conic + transverse conic", "A_1"),
    CatalogRow(3, F(1, 4), "J_{4,∞}: x³+x²y⁴", "A_2"),
    CatalogRow(4, F(2, 7), "J_{3,0}: x³+b₁x²y³+y⁹+b₂xy⁷", "A_3"),
    CatalogRow(5, F(5, 16), "E_14: x³+y⁸+axy⁶", "A_4"),
    CatalogRow(6, F(1, 3), "E_13: x³+xy⁵+ay⁸", "A_5"),
    CatalogRow(7, F(4, 11), "E_12: x³+y⁷+axy⁵", "A_7"),
)


def slope_from_coeff(c, d: int = 4) -> F:
    c = F(c)
    if not 0 <= c <= F(2, d):
        raise RangeError(f"c={c} outside [0, 2/{d}]")
    return 6 * c / (d * c + 4)


def beta_from_coeff(c) -> F:
    c = F(c)
    if not 0 < c <= F(1, 2):
        raise RangeError(f"c={c} outside (0, 1/2]")
    return min(F(1), (1 - 2 * c) / (6 * c))


def slope_from_beta(beta) -> F:
    beta = F(beta)
    if not 0 <= beta <= 1:
        raise RangeError(f"beta={beta} outside [0, 1]")
    return 1 / (4 * beta + 2)


def slope_from_hilbert(m: int) -> F:
    if int(m) != m or m < 4:
        raise RangeError(f"m={m} must be an integer >= 4")
    m = int(m)
    return F((m - 3) ** 2, 2 * (m * m - 4 * m + 5))


def c_walls(d: int) -> tuple[F, ...]:
    """Known c-walls: the full list for d=4, only the first wall 1/(2d) otherwise."""
    return C_WALLS if d == 4 else (F(1, 2 * d),)


def t_walls(d: int) -> tuple[F, ...]:
    """Known t-walls in (0, 2/d], closed off by the right endpoint 2/d."""
    if d == 4:
        return T_WALLS
    return (slope_from_coeff(F(1, 2 * d), d), F(2, d))


@dataclass(frozen=True)
class Chamber:
    kind: str  # "Open" or "Wall"
    index: int
    lo: F
    hi: F

    def to_json(self) -> dict:
        return {"kind": self.kind, "index": self.index, "interval": [str(self.lo), str(self.hi)]}


def chamber_of(c, d: int = 4) -> Chamber:
    """Open(i) lies between wall i and wall i+1 (wall 0 is c=0); Wall(i) is the i-th wall."""
    c = F(c)
    if not 0 < c < F(2, d):
        raise RangeError(f"c={c} outside (0, 2/{d})")
    walls = (F(0),) + c_walls(d)
    if d != 4 and c > walls[-1]:
        raise UnknownWalls(d)
    for i, w in enumerate(walls[1:], start=1):
        if c == w:
            return Chamber("Wall", i, w, w)
        if c < w:
            return Chamber("Open", i - 1, walls[i - 1], w)
    raise RangeError(f"c={c} beyond the last wall")


def catalog_row(i: int) -> CatalogRow:
    if not 1 <= i <= len(CATALOG):
        raise RangeError(f"catalog rows are numbered 1..{len(CATALOG)}")
    return CATALOG[i - 1]


def wall_table(d: int = 4) -> dict:
    if d != 4:
        return {"d": d, "c_walls": [str(x) for x in c_walls(d)],
                "t_walls": [str(slope_from_coeff(x, d)) for x in c_walls(d)],
                "beta_walls": None, "rows": []}
    return {
        "d": 4,
        "c_walls": [str(x) for x in C_WALLS],
        "t_walls": [str(x) for x in T_WALLS],
        "beta_walls": [str(x) for x in BETA_WALLS],
        "rows": [r.to_json() for r in CATALOG],
    }
