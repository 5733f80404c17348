"""Exact rational linear algebra: rank, solving, and semidefinite profiles.

Rank uses fraction-free (Bareiss) elimination on denominator-cleared integer
matrices; no floating point, no tolerances.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import lcm
from typing import List, Optional, Sequence, Tuple

Matrix = Sequence[Sequence[Q]]


def _int_rows(m: Matrix) -> List[List[int]]:
    """Scale each row by its denominator lcm; rank is unchanged."""
    out = []
    for row in m:
        d = lcm(*(Q(x).denominator for x in row)) if row else 1
        out.append([int(Q(x) * d) for x in row])
    return out


def mat_rank(m: Matrix) -> int:
    """Rank via fraction-free Gaussian elimination."""
    if not m or not m[0]:
        return 0
    a = _int_rows(m)
    rows, cols = len(a), len(a[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        rank += 1
        if r == rows:
            break
    return rank


def kernel_dim(m: Matrix) -> int:
    """Dimension of the right kernel."""
    if not m or not m[0]:
        return 0
    return len(m[0]) - mat_rank(m)


def solve(a: Matrix, b: Sequence[Q]) -> Optional[List[Q]]:
    """One exact solution of A x = b, or None if inconsistent.

    Free variables are set to zero.
    """
    rows = [list(map(Q, r)) + [Q(v)] for r, v in zip(a, b)]
    nrows = len(rows)
    ncols = len(a[0]) if nrows else 0
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, nrows):
        if rows[i][ncols] != 0:
            return None
    x = [Q(0)] * ncols
    for i, c in enumerate(piv_cols):
        x[c] = rows[i][ncols]
    return x


def sym_psd_profile(m: Matrix) -> Tuple[bool, Optional[int]]:
    """Exact PSD certificate for a symmetric matrix.

    Returns (is_psd, nullity).  Eliminates with positive diagonal pivots;
    a negative diagonal entry in any Schur complement, or a zero diagonal
    with a nonzero row, disproves semidefiniteness.  Nullity is None when
    the matrix is not PSD.
    """
    n = len(m)
    a = [[Q(x) for x in row] for row in m]
    active = list(range(n))
    while active:
        for i in active:
            if a[i][i] < 0:
                return False, None
        piv = next((i for i in active if a[i][i] > 0), None)
        if piv is None:
            for i in active:
                for j in active:
                    if a[i][j] != 0:
                        return False, None
            return True, len(active)
        active.remove(piv)
        p = a[piv][piv]
        for i in active:
            if a[i][piv] == 0:
                continue
            f = a[i][piv] / p
            for j in active:
                a[i][j] -= f * a[piv][j]
    return True, 0
