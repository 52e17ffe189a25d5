"""Small exact linear algebra over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple[Fraction, ...], ...]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def det(a: Matrix) -> Fraction:
    m = [list(r) for r in as_matrix(a)]
    n = len(m)
    sign = 1
    out = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        out *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return sign * out


def inverse(a: Matrix) -> Matrix | None:
    a = as_matrix(a)
    n = len(a)
    m = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a)]
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            return None
        m[k], m[p] = m[p], m[k]
        piv = m[k][k]
        m[k] = [x / piv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return tuple(tuple(r[n:]) for r in m)


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction] | None:
    """Solve a square system exactly; None when singular."""
    n = len(a)
    m = [list(map(Fraction, r)) + [Fraction(v)] for r, v in zip(a, b)]
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            return None
        m[k], m[p] = m[p], m[k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n + 1):
                    m[i][j] -= f * m[k][j]
    x = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        s = m[k][n] - sum(m[k][j] * x[j] for j in range(k + 1, n))
        x[k] = s / m[k][k]
    return x


def congruence_diagonalize(a: Matrix) -> tuple[Matrix, tuple[Fraction, ...]]:
    """Return (P, diag) with P^T A P = diag(diag) for symmetric A.

    Symmetric Gaussian elimination; when every remaining diagonal entry is
    zero, an off-diagonal pivot is folded in by adding one basis vector to another.
    """
    n = len(a)
    m = [list(r) for r in as_matrix(a)]
    p = [list(r) for r in identity(n)]

    def col_op(dst: int, src: int, f: Fraction) -> None:
        # column dst += f * column src, then the matching row operation
        for i in range(n):
            m[i][dst] += f * m[i][src]
        for j in range(n):
            m[dst][j] += f * m[src][j]
        for i in range(n):
            p[i][dst] += f * p[i][src]

    def swap(i: int, j: int) -> None:
        for r in m:
            r[i], r[j] = r[j], r[i]
        m[i], m[j] = m[j], m[i]
        for r in p:
            r[i], r[j] = r[j], r[i]

    for k in range(n):
        if m[k][k] == 0:
            j = next((j for j in range(k + 1, n) if m[j][j] != 0), None)
            if j is not None:
                swap(k, j)
            else:
                j = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
                if j is None:
                    continue
                col_op(k, j, Fraction(1))
        piv = m[k][k]
        for j in range(k + 1, n):
            if m[k][j] != 0:
                col_op(j, k, -m[k][j] / piv)
    return as_matrix(p), tuple(m[i][i] for i in range(n))
