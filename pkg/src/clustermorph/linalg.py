"""Exact linear algebra over Q and Z.

Everything here works on small dense matrices given as sequences of rows.
Rational work uses ``fractions.Fraction``; integer invariant factors come
from sympy.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

Vec = tuple
Rows = Sequence[Sequence]


def _frac_rows(rows: Rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in r] for r in rows]


def rref(rows: Rows) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = _frac_rows(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                k = m[i][c]
                m[i] = [a - k * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Rows) -> int:
    return len(rref(rows)[1])


def det(rows: Rows) -> Fraction:
    m = _frac_rows(rows)
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, n):
            k = m[i][c] / m[c][c]
            if k:
                m[i] = [a - k * b for a, b in zip(m[i], m[c])]
    return result


def solve(matrix: Rows, rhs: Sequence) -> tuple[Fraction, ...] | None:
    """One solution x of ``matrix @ x == rhs``, or None if inconsistent.

    Free variables are set to zero, so the answer is unique exactly when the
    matrix has full column rank.
    """
    ncols = len(matrix[0]) if matrix else 0
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(red, pivots):
        x[c] = row[-1]
    return tuple(x)


def coordinates(basis: Sequence[Sequence], v: Sequence) -> tuple[Fraction, ...] | None:
    """Coefficients of ``v`` in the linearly independent ``basis``, if in the span."""
    if not basis:
        return () if all(x == 0 for x in v) else None
    cols = [[b[i] for b in basis] for i in range(len(v))]
    return solve(cols, v)


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    if not vectors:
        return all(x == 0 for x in v)
    return rank(list(vectors) + [v]) == rank(vectors)


def is_integral(xs) -> bool:
    return all(Fraction(x).denominator == 1 for x in xs)


def as_ints(xs) -> tuple[int, ...]:
    return tuple(int(x) for x in xs)


def mat_mul(a: Rows, b: Rows) -> list[list]:
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def smith_invariants(rows: Rows, nrows: int | None = None, ncols: int | None = None) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order."""
    nrows = len(rows) if nrows is None else nrows
    ncols = (len(rows[0]) if rows else 0) if ncols is None else ncols
    if nrows == 0 or ncols == 0:
        return []
    m = Matrix(nrows, ncols, [int(x) for r in rows for x in r])
    return [abs(int(d)) for d in invariant_factors(m, domain=ZZ) if d != 0]
