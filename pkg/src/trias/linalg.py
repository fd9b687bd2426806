"""Row reduction over an exact field (tiny matrices only)."""

from __future__ import annotations


def row_reduce(rows, zero):
    """Reduced row echelon form; returns (rref rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows, zero=None) -> int:
    return len(row_reduce(rows, zero)[1])


def solve_unique(rows, rhs, zero):
    """Solve ``rows @ x = rhs``; None unless there is exactly one solution."""
    if not rows:
        return None
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = row_reduce(aug, zero)
    if n in pivots:
        return None
    if len(pivots) < n:
        return None
    x = [zero] * n
    for row, col in zip(red, pivots):
        x[col] = row[n]
    return x
