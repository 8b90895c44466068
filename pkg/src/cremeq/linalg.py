"""Exact linear algebra over the rationals.

Everything in this package that solves a linear system does it here, with
fractions.Fraction entries.  No floats anywhere: the certificates downstream
are only worth something if every intermediate value is exact.
"""

from __future__ import annotations

from fractions import Fraction


def echelon_with_transform(
    rows: list[list[Fraction]],
) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    """Forward Gaussian elimination, no back-substitution.

    Returns (ech, T) with ech[i] == sum_j T[i][j] * rows[j].  Keeping only the
    forward pass matters to callers that want derived rows to stay close to
    simple pairwise differences of the input equations.
    """
    m = len(rows)
    work = [list(r) for r in rows]
    n = len(work[0]) if m else 0
    T = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    pivot_row = 0
    for col in range(n):
        pr = next((r for r in range(pivot_row, m) if work[r][col] != 0), None)
        if pr is None:
            continue
        work[pivot_row], work[pr] = work[pr], work[pivot_row]
        T[pivot_row], T[pr] = T[pr], T[pivot_row]
        piv = work[pivot_row][col]
        for r in range(pivot_row + 1, m):
            f = work[r][col] / piv
            if f:
                work[r] = [a - f * b for a, b in zip(work[r], work[pivot_row])]
                T[r] = [a - f * b for a, b in zip(T[r], T[pivot_row])]
        pivot_row += 1
        if pivot_row == m:
            break
    return work, T


def solve_exact(
    matrix: list[list[int]], rhs: list[int]
) -> tuple[str, list[Fraction] | None]:
    """Solve matrix @ x = rhs exactly.

    Returns ("unique", xs), ("inconsistent", None) or ("underdetermined", None).
    Overdetermined but consistent systems come back "unique".
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    ech, _ = echelon_with_transform(aug)
    pivots: list[int] = []
    for row in ech:
        lead = next((j for j, v in enumerate(row) if v != 0), None)
        if lead is None:
            continue
        if lead == n:
            return "inconsistent", None
        pivots.append(lead)
    if len(pivots) < n:
        return "underdetermined", None
    # back-substitute; pivots are strictly increasing so this is triangular
    xs: list[Fraction] = [Fraction(0)] * n
    live = [row for row in ech if any(v != 0 for v in row)]
    for row, lead in reversed(list(zip(live, pivots))):
        acc = row[n] - sum(row[j] * xs[j] for j in range(lead + 1, n))
        xs[lead] = acc / row[lead]
    return "unique", xs


def determinant(matrix: list[list[int]]) -> Fraction:
    """Determinant via fraction-free-ish elimination (exact, small matrices)."""
    n = len(matrix)
    work = [[Fraction(v) for v in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pr = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != col:
            work[col], work[pr] = work[pr], work[col]
            det = -det
        piv = work[col][col]
        det *= piv
        for r in range(col + 1, n):
            f = work[r][col] / piv
            if f:
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return det


def invert_unimodular(matrix: list[list[int]]) -> list[list[int]]:
    """Invert an integer matrix with determinant +-1.

    Raises ValueError otherwise; the inverse of a unimodular matrix is again
    integral, which is exactly what a lattice basis change needs.
    """
    n = len(matrix)
    det = determinant(matrix)
    if det not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {det})")
    cols: list[list[Fraction]] = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        status, xs = solve_exact(matrix, e)
        assert status == "unique" and xs is not None
        cols.append(xs)
    return [[int(cols[j][i]) for j in range(n)] for i in range(n)]
