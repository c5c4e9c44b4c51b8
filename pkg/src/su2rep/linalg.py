"""Exact rank computation over the rationals.

Gaussian elimination with fractions: no pivoting subtleties, no tolerances.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def dependency_vector(
    rows: Sequence[Sequence[Fraction]],
) -> tuple[Fraction, ...] | None:
    """A nontrivial rational combination of the rows summing to zero, if one exists.

    Returns None when the rows are linearly independent.  Row operations are
    tracked against the identity, so a vanished row hands back its recipe.
    """
    work = [list(map(Fraction, r)) for r in rows]
    n = len(work)
    if n == 0:
        return None
    ncols = len(work[0])
    transform = [
        [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)
    ]
    for i, row in enumerate(work):
        if not any(row):
            return tuple(transform[i])
    rank = 0
    for col in range(ncols):
        pivot_row = next(
            (r for r in range(rank, n) if work[r][col] != 0), None
        )
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        transform[rank], transform[pivot_row] = transform[pivot_row], transform[rank]
        pivot = work[rank][col]
        for r in range(rank + 1, n):
            if work[r][col] != 0:
                factor = work[r][col] / pivot
                for c in range(col, ncols):
                    work[r][c] -= factor * work[rank][c]
                for c in range(n):
                    transform[r][c] -= factor * transform[rank][c]
                if not any(work[r]):
                    return tuple(transform[r])
        rank += 1
        if rank == n:
            return None
    return tuple(transform[rank])


def exact_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of the matrix whose rows are the given rational vectors."""
    work = [list(map(Fraction, r)) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    if any(len(r) != ncols for r in work):
        raise ValueError("rows must have equal length")
    rank = 0
    col = 0
    while rank < len(work) and col < ncols:
        pivot_row = next(
            (r for r in range(rank, len(work)) if work[r][col] != 0), None
        )
        if pivot_row is None:
            col += 1
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        for r in range(rank + 1, len(work)):
            if work[r][col] != 0:
                factor = work[r][col] / pivot
                row = work[r]
                top = work[rank]
                for c in range(col, ncols):
                    row[c] -= factor * top[c]
        rank += 1
        col += 1
    return rank
