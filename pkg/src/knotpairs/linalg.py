"""Exact integer/rational matrix helpers (small dense matrices only)."""
from __future__ import annotations

from fractions import Fraction


def det_int(M) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(map(int, r)) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rank(rows) -> int:
    """Rank over Q."""
    A = [[Fraction(v) for v in r] for r in rows]
    if not A:
        return 0
    m = len(A[0])
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
        if r == len(A):
            break
    return r


def signature(S) -> int:
    """Signature of a symmetric matrix by congruence diagonalisation over Q.

    When every remaining diagonal entry vanishes, row/column ``i`` is replaced
    by ``i + j`` for some ``j`` with ``S[i][j] != 0``, which makes the pivot
    ``2 S[i][j]`` nonzero (the usual rank-2 block step).
    """
    A = [[Fraction(v) for v in r] for r in S]
    n = len(A)
    for i in range(n):
        for j in range(n):
            if A[i][j] != A[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0
    idx = list(range(n))
    while idx:
        p = next((i for i in idx if A[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in idx for j in idx if i != j and A[i][j] != 0), None)
            if pair is None:
                break                      # the rest is the zero form
            i, j = pair
            # row_i += row_j ; col_i += col_j
            for c in range(n):
                A[i][c] += A[j][c]
            for r in range(n):
                A[r][i] += A[r][j]
            p = i
        d = A[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        idx.remove(p)
        for r in idx:
            if A[r][p] != 0:
                f = A[r][p] / d
                for c in range(n):
                    A[r][c] -= f * A[p][c]
        for r in idx:
            A[p][r] = A[r][p] = Fraction(0)
    return pos - neg


def interpolate(xs, ys) -> list:
    """Coefficients (low to high) of the polynomial through the points, exact."""
    n = len(xs)
    coef = [Fraction(0)] * n
    for i in range(n):
        # Lagrange basis polynomial for node i
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(n):
            coef[k] += ys[i] * basis[k] / denom
    return coef


def matpoly_det(V) -> dict:
    """det(t V - V^T) as {exponent: integer coefficient}."""
    n = len(V)
    if n == 0:
        return {0: 1}
    xs = list(range(n + 1))
    ys = []
    for t in xs:
        M = [[t * V[i][j] - V[j][i] for j in range(n)] for i in range(n)]
        ys.append(det_int(M))
    coef = interpolate(xs, ys)
    out = {}
    for k, c in enumerate(coef):
        if c.denominator != 1:
            raise ArithmeticError("non-integral interpolation")
        if c:
            out[k] = int(c)
    return out
