"""Exact sparse multigraded forms in four variables.

A form is a map from exponent vectors (length 4) to nonzero rationals plus a
grading: ``Bidegree(a, b)`` on (x0, x1; y0, y1) or ``Homogeneous(k)`` on x0..x3.
Values are immutable; every operation returns a new form.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

from .errors import EliminationError, GradingError, ParseError, SingularMatrix
from .linalg import Matrix, as_matrix, det

Exponent = tuple[int, int, int, int]
Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Bidegree:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise GradingError(f"negative bidegree {self.a},{self.b}")

    @property
    def names(self) -> tuple[str, ...]:
        return ("x0", "x1", "y0", "y1")

    def admits(self, e: Sequence[int]) -> bool:
        return e[0] + e[1] == self.a and e[2] + e[3] == self.b

    def __add__(self, other: "Grading") -> "Bidegree":
        if not isinstance(other, Bidegree):
            raise GradingError("cannot combine bidegree and homogeneous gradings")
        return Bidegree(self.a + other.a, self.b + other.b)

    def times(self, k: int) -> "Bidegree":
        return Bidegree(self.a * k, self.b * k)

    def zero(self) -> "Bidegree":
        return Bidegree(0, 0)

    def __str__(self) -> str:
        return f"{self.a},{self.b}"


@dataclass(frozen=True)
class Homogeneous:
    deg: int

    def __post_init__(self):
        if self.deg < 0:
            raise GradingError(f"negative degree {self.deg}")

    @property
    def names(self) -> tuple[str, ...]:
        return ("x0", "x1", "x2", "x3")

    def admits(self, e: Sequence[int]) -> bool:
        return sum(e) == self.deg

    def __add__(self, other: "Grading") -> "Homogeneous":
        if not isinstance(other, Homogeneous):
            raise GradingError("cannot combine bidegree and homogeneous gradings")
        return Homogeneous(self.deg + other.deg)

    def times(self, k: int) -> "Homogeneous":
        return Homogeneous(self.deg * k)

    def zero(self) -> "Homogeneous":
        return Homogeneous(0)

    def __str__(self) -> str:
        return str(self.deg)


Grading = Union[Bidegree, Homogeneous]


def parse_grading(text: str) -> Grading:
    """'4,4' -> Bidegree(4,4); '2' -> Homogeneous(2)."""
    parts = [p.strip() for p in text.split(",")]
    try:
        nums = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"bad grading {text!r}") from None
    if len(nums) == 2:
        return Bidegree(*nums)
    if len(nums) == 1:
        return Homogeneous(nums[0])
    raise ParseError(f"bad grading {text!r}")


def parse_rational(text: str) -> Fraction:
    """Integers and 'p/q' only; decimals are rejected."""
    if not re.fullmatch(r"\s*[+-]?\d+(/\d+)?\s*", text):
        raise ParseError(f"not a rational literal: {text!r}")
    num, _, den = text.strip().partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def _add_exp(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def _mul_raw(a: Mapping[Exponent, Fraction], b: Mapping[Exponent, Fraction]) -> dict[Exponent, Fraction]:
    out: dict[Exponent, Fraction] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _add_exp(ea, eb)
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


class MultiForm:
    __slots__ = ("_grading", "_terms", "_hash")

    def __init__(self, grading: Grading, terms: Mapping[Sequence[int], Scalar] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, Fraction] = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != 4 or min(e) < 0:
                raise GradingError(f"bad exponent vector {e}")
            c = Fraction(c)
            if c and not grading.admits(e):
                raise GradingError(f"monomial {e} is not of degree {grading}")
            if c:
                clean[e] = clean.get(e, 0) + c
        clean = {e: c for e, c in clean.items() if c}
        self._grading = grading
        self._terms = MappingProxyType(dict(sorted(clean.items(), reverse=True)))
        self._hash = None

    @property
    def grading(self) -> Grading:
        return self._grading

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return self._terms

    def support(self) -> tuple[Exponent, ...]:
        return tuple(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, e: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    @classmethod
    def monomial(cls, grading: Grading, e: Sequence[int], c: Scalar = 1) -> "MultiForm":
        return cls(grading, {tuple(e): c})

    @classmethod
    def constant(cls, like: Grading, c: Scalar = 1) -> "MultiForm":
        return cls(like.zero(), {(0, 0, 0, 0): c})

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiForm):
            return NotImplemented
        return self._grading == other._grading and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._grading, tuple(self._terms.items())))
        return self._hash

    def __add__(self, other: "MultiForm") -> "MultiForm":
        if not isinstance(other, MultiForm):
            return NotImplemented
        if self._grading != other._grading:
            raise GradingError(f"cannot add forms of degree {self._grading} and {other._grading}")
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return MultiForm(self._grading, out)

    def __neg__(self) -> "MultiForm":
        return MultiForm(self._grading, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "MultiForm") -> "MultiForm":
        return self + (-other)

    def __mul__(self, other) -> "MultiForm":
        if isinstance(other, (int, Fraction)):
            return MultiForm(self._grading, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, MultiForm):
            return NotImplemented
        return MultiForm(self._grading + other._grading, _mul_raw(self._terms, other._terms))

    def __rmul__(self, other) -> "MultiForm":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "MultiForm":
        if k < 0:
            raise ValueError("negative power")
        out = MultiForm.constant(self._grading)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self, var: int) -> MultiForm:
        """Partial derivative in variable index ``var`` (zero form keeps a valid grading)."""
        g = self._grading
        if isinstance(g, Bidegree):
            ng = Bidegree(g.a - 1, g.b) if var < 2 else Bidegree(g.a, g.b - 1)
            if min(ng.a, ng.b) < 0:
                return MultiForm(Bidegree(max(ng.a, 0), max(ng.b, 0)))
        else:
            if g.deg == 0:
                return MultiForm(g)
            ng = Homogeneous(g.deg - 1)
        out = {}
        for e, c in self._terms.items():
            if e[var]:
                ne = list(e)
                ne[var] -= 1
                out[tuple(ne)] = c * e[var]
        return MultiForm(ng, out)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        total = Fraction(0)
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                v *= Fraction(x) ** k
            total += v
        return total

    def serialize(self) -> str:
        return format_form(self)

    def __str__(self) -> str:
        return format_form(self)

    def __repr__(self) -> str:
        return f"MultiForm({self._grading!r}, {format_form(self)!r})"


def _format_monomial(e: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_form(f: MultiForm) -> str:
    """Canonical newline-free text: graded-lex order, x0 most significant."""
    if f.is_zero():
        return "0"
    names = f.grading.names
    out = []
    for i, (e, c) in enumerate(f.terms.items()):
        mono = _format_monomial(e, names)
        mag = abs(c)
        body = mono if (mono and mag == 1) else (f"{mag}*{mono}" if mono else str(mag))
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(
    r"\s*(?:(?P<sign>[+-])|(?P<num>\d+(?:/\d+)?)|(?P<var>[a-z]\w*)(?:\s*\^\s*(?P<exp>\d+))?|(?P<star>\*)|(?P<bad>\S))"
)


def _tokenize(text: str) -> list[tuple[str, object]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        if m.group("bad"):
            raise ParseError(f"unexpected character {m.group('bad')!r} in {text!r}")
        if m.group("sign"):
            toks.append(("sign", -1 if m.group("sign") == "-" else 1))
        elif m.group("num"):
            num, _, den = m.group("num").partition("/")
            if den and int(den) == 0:
                raise ParseError(f"zero denominator in {text!r}")
            toks.append(("num", Fraction(int(num), int(den) if den else 1)))
        elif m.group("var"):
            toks.append(("var", (m.group("var"), int(m.group("exp") or 1))))
        else:
            toks.append(("star", None))
    return toks


def parse_form(text: str, grading: Grading) -> MultiForm:
    """Parse a signed sum of terms like ``3/2 * x0^2 x1 y0^2``."""
    index = {n: i for i, n in enumerate(grading.names)}
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty form")
    terms: list[tuple[Exponent, Fraction]] = []
    i = 0
    while i < len(toks):
        sign = 1
        if toks[i][0] == "sign":
            sign = toks[i][1]
            i += 1
        elif terms:
            raise ParseError(f"missing operator between terms in {text!r}")
        coeff = Fraction(1)
        exps = [0, 0, 0, 0]
        nfactors = 0
        while i < len(toks) and toks[i][0] != "sign":
            kind, val = toks[i]
            if kind == "star":
                if nfactors == 0 or i + 1 >= len(toks) or toks[i + 1][0] in ("sign", "star"):
                    raise ParseError(f"misplaced '*' in {text!r}")
            elif kind == "num":
                if nfactors:
                    raise ParseError(f"coefficient must lead its term in {text!r}")
                coeff = val
                nfactors += 1
            else:
                name, k = val
                if name not in index:
                    raise ParseError(f"unknown variable {name!r} for grading {grading}")
                exps[index[name]] += k
                nfactors += 1
            i += 1
        if nfactors == 0:
            raise ParseError(f"empty term in {text!r}")
        e = tuple(exps)
        if coeff and not grading.admits(e):
            raise GradingError(f"term {_format_monomial(e, grading.names) or '1'} is not of degree {grading}")
        terms.append((e, sign * coeff))
    return MultiForm(grading, terms)


def form_arithmetic(op: str, *args, k: int | None = None) -> MultiForm:
    """Dispatch helper: op in {'add', 'mul', 'pow'}."""
    if op == "add":
        out = args[0]
        for a in args[1:]:
            out = out + a
        return out
    if op == "mul":
        out = args[0]
        for a in args[1:]:
            out = out * a
        return out
    if op == "pow":
        if k is None:
            raise ValueError("pow needs k")
        return args[0] ** k
    raise ValueError(f"unknown op {op!r}")


def _normalize_matrix(f: MultiForm, m) -> Matrix:
    if isinstance(f.grading, Bidegree):
        if len(m) == 2 and all(len(b) == 2 for b in m) and all(len(r) == 2 for b in m for r in b):
            (a, b) = m
            z = Fraction(0)
            full = [[a[0][0], a[0][1], z, z], [a[1][0], a[1][1], z, z],
                    [z, z, b[0][0], b[0][1]], [z, z, b[1][0], b[1][1]]]
            return as_matrix(full)
        mat = as_matrix(m)
        if len(mat) != 4 or any(len(r) != 4 for r in mat):
            raise GradingError("coordinate change must be 4x4 or a pair of 2x2 blocks")
        if any(mat[i][j] for i in range(4) for j in range(4) if (i < 2) != (j < 2)):
            raise GradingError("bidegree forms need a block-diagonal coordinate change")
        return mat
    mat = as_matrix(m)
    if len(mat) != 4 or any(len(r) != 4 for r in mat):
        raise GradingError("coordinate change must be 4x4")
    return mat


def change_coordinates(f: MultiForm, m) -> MultiForm:
    """Return f(M x): each x_i is replaced by sum_j M[i][j] x_j."""
    mat = _normalize_matrix(f, m)
    if det(mat) == 0:
        raise SingularMatrix("coordinate change is not invertible")
    # clear denominators so the expansion runs over the integers:
    # f(Mx) = f(M' x) / (C D^n) with M' = D M and C f integral, n the total degree
    dm = lcm(*(x.denominator for r in mat for x in r))
    dc = lcm(*(c.denominator for c in f.terms.values())) if f.terms else 1
    linear = []
    for i in range(4):
        lin = {}
        for j in range(4):
            if mat[i][j]:
                e = [0, 0, 0, 0]
                e[j] = 1
                lin[tuple(e)] = int(mat[i][j] * dm)
        linear.append(lin)
    cache: dict[tuple[int, int], dict] = {}

    def power(i: int, k: int) -> dict:
        if k == 0:
            return {(0, 0, 0, 0): 1}
        key = (i, k)
        if key not in cache:
            cache[key] = _mul_raw(power(i, k - 1), linear[i])
        return cache[key]

    out: dict[Exponent, int] = {}
    n = 0
    for e, c in f.terms.items():
        n = sum(e)
        prod = {(0, 0, 0, 0): int(c * dc)}
        for i in range(4):
            if e[i]:
                prod = _mul_raw(prod, power(i, e[i]))
        for pe, pc in prod.items():
            out[pe] = out.get(pe, 0) + pc
    scale = dc * dm ** n
    return MultiForm(f.grading, {e: Fraction(c, scale) for e, c in out.items() if c})


def _divides(m: Sequence[int], e: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(m, e))


def reduce_mod_quadric(g: MultiForm, q: MultiForm, eliminated: Sequence[int]) -> MultiForm:
    """Canonical representative of g modulo q with no term divisible by ``eliminated``.

    Uses the rewrite m0 -> -(q - c0*m0)/c0. The rewrite terminates exactly when
    m0 is a vertex of the Newton polytope of q; for a quadric the only
    non-vertex case is x_a*x_b with both x_a^2 and x_b^2 present.
    """
    if not isinstance(q.grading, Homogeneous) or q.grading.deg != 2:
        raise GradingError("q must be a quadric in x0..x3")
    if not isinstance(g.grading, Homogeneous):
        raise GradingError("g must be a homogeneous form in x0..x3")
    m0 = tuple(int(x) for x in eliminated)
    c0 = q.coeff(m0)
    if not c0:
        raise EliminationError(f"monomial {m0} does not occur in q")
    if max(m0) == 1:
        a, b = [i for i, k in enumerate(m0) if k]
        sq_a = tuple(2 if i == a else 0 for i in range(4))
        sq_b = tuple(2 if i == b else 0 for i in range(4))
        if q.coeff(sq_a) and q.coeff(sq_b):
            raise EliminationError(f"monomial {m0} is not a vertex of the Newton polytope of q; rewriting would not terminate")
    rest = {e: -c / c0 for e, c in q.terms.items() if e != m0}
    pending = dict(g.terms)
    out: dict[Exponent, Fraction] = {}
    while pending:
        e, c = pending.popitem()
        if not c:
            continue
        if _divides(m0, e):
            u = tuple(x - y for x, y in zip(e, m0))
            for r, rc in rest.items():
                ne = _add_exp(u, r)
                pending[ne] = pending.get(ne, 0) + c * rc
        else:
            out[e] = out.get(e, 0) + c
    return MultiForm(g.grading, out)
