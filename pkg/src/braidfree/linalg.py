"""Exact linear algebra over the rationals, built on integer rows.

Row reduction is fraction-free: a row update is  row <- a*row - b*pivot  with
a, b coprime, followed by a content division when the multiplier is not 1.
Everything stays in arbitrary-precision integers, so ranks and nullspaces are
certificates rather than numerical estimates.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _divide_content(row, start):
    g = 0
    for c in range(start, len(row)):
        v = row[c]
        if v:
            g = gcd(g, v)
            if g == 1:
                return
    if g > 1:
        for c in range(start, len(row)):
            row[c] //= g


def row_echelon(rows: list[list[int]], ncols: int | None = None):
    """Reduce ``rows`` in place to echelon form; return (rank, pivot columns).

    Pivot rows are chosen by smallest absolute entry to limit growth.
    """
    nrows = len(rows)
    if nrows == 0:
        return 0, []
    if ncols is None:
        ncols = len(rows[0])
    rank = 0
    pivots = []
    for col in range(ncols):
        if rank == nrows:
            break
        best = -1
        bestval = 0
        for r in range(rank, nrows):
            v = rows[r][col]
            if v:
                a = -v if v < 0 else v
                if best < 0 or a < bestval:
                    best, bestval = r, a
                    if a == 1:
                        break
        if best < 0:
            continue
        rows[rank], rows[best] = rows[best], rows[rank]
        piv = rows[rank]
        pv = piv[col]
        for r in range(rank + 1, nrows):
            row = rows[r]
            v = row[col]
            if not v:
                continue
            if v % pv == 0:
                q = v // pv
                for c in range(col, ncols):
                    if piv[c]:
                        row[c] -= q * piv[c]
            else:
                g = gcd(pv, v)
                a = pv // g
                b = v // g
                for c in range(col, ncols):
                    row[c] = a * row[c] - b * piv[c]
                _divide_content(row, col)
        pivots.append(col)
        rank += 1
    return rank, pivots


def rank_of(rows, ncols: int | None = None) -> int:
    work = [list(r) for r in rows]
    rank, _ = row_echelon(work, ncols)
    return rank


def primitive(vec) -> list[int]:
    """Scale a rational vector to a primitive integer one with positive lead."""
    denom = 1
    for x in vec:
        if isinstance(x, Fraction):
            denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) if isinstance(x, Fraction) else int(x) * denom for x in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-x for x in ints]
            break
    return ints


def nullspace(rows, ncols: int):
    """A primitive integer basis of the right kernel {x : rows @ x = 0}.

    One basis vector per free column, with a 1 in the free slot, so the basis
    is independent by construction.
    """
    work = [list(r) for r in rows]
    rank, pivots = row_echelon(work, ncols)
    work = work[:rank]
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        x: list = [0] * ncols
        x[free] = Fraction(1)
        for r in range(rank - 1, -1, -1):
            pc = pivots[r]
            if pc > free:
                continue
            row = work[r]
            s = row[free] if free > pc else 0
            for c in pivots[r + 1:]:
                if c > free:
                    break
                if row[c] and x[c]:
                    s += row[c] * x[c]
            x[pc] = -Fraction(s, row[pc]) if s else Fraction(0)
        basis.append(primitive(x))
    return basis


class ReducedSpan:
    """Incrementally maintained echelon basis for integer row vectors.

    ``reduce`` returns the (primitive) residual of a vector against the span;
    ``add`` inserts an independent residual.  Used to split new module
    elements from products of the generators already chosen.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> list[int]:
        v = list(vec)
        for row, pc in zip(self.rows, self.pivots):
            x = v[pc]
            if not x:
                continue
            pv = row[pc]
            if x % pv == 0:
                q = x // pv
                for c in range(pc, self.ncols):
                    if row[c]:
                        v[c] -= q * row[c]
            else:
                g = gcd(pv, x)
                a = pv // g
                b = x // g
                for c in range(self.ncols):
                    v[c] = a * v[c] - b * row[c] if row[c] else a * v[c]
                _divide_content(v, 0)
        return v

    def add(self, residual) -> bool:
        for pc, x in enumerate(residual):
            if x:
                at = 0
                while at < len(self.pivots) and self.pivots[at] < pc:
                    at += 1
                self.rows.insert(at, primitive(residual))
                self.pivots.insert(at, pc)
                return True
        return False

    def insert(self, vec) -> bool:
        """Reduce and, if independent, add; True when the rank grew."""
        return self.add(self.reduce(vec))


def fraction_matrix_inverse(rows):
    """Inverse of a small square matrix, exactly (Gauss-Jordan over Fractions)."""
    n = len(rows)
    aug = [[Fraction(rows[r][c]) for c in range(n)] + [Fraction(int(r == c)) for c in range(n)]
           for r in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def fraction_determinant(rows) -> Fraction:
    """Determinant of a small square Fraction matrix by elimination."""
    n = len(rows)
    work = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            det = -det
        pv = work[col][col]
        det *= pv
        for r in range(col + 1, n):
            if work[r][col]:
                f = work[r][col] / pv
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return det
