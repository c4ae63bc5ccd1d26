"""Exact rational linear algebra.

Everything here is exact: entries are Python ints or fractions.Fraction,
never floats.  Matrices are small (Cech-slice differentials have at most
C(t, k) rows for t generators), so dense row operations are fine.  The
integer fast path uses fraction-free (Bareiss) elimination, which keeps
intermediate values integral.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _int_rank(m: list[list[int]]) -> int:
    """Rank via Bareiss fraction-free elimination. Destroys `m`."""
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        p = pr[c]
        for i in range(r + 1, nrows):
            mi = m[i]
            q = mi[c]
            for j in range(c + 1, ncols):
                mi[j] = (p * mi[j] - q * pr[j]) // prev
            mi[c] = 0
        prev = p
        r += 1
        rank += 1
        if r == nrows:
            break
    return rank


def _frac_rref(m: list[list[Fraction]]) -> list[int]:
    """In-place reduced row echelon form; returns the pivot columns."""
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [e * inv for e in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                q = m[i][c]
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _as_fraction_rows(entries) -> list[list[Fraction]]:
    return [[Fraction(e) for e in row] for row in entries]


class RationalMatrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Sequence], cols: int | None = None):
        ent = tuple(tuple(Fraction(e) for e in row) for row in entries)
        if ent:
            ncols = len(ent[0])
            if any(len(row) != ncols for row in ent):
                raise ValueError("ragged rows")
        else:
            ncols = 0 if cols is None else cols
        object.__setattr__(self, "entries", ent)
        object.__setattr__(self, "rows", len(ent))
        object.__setattr__(self, "cols", ncols)

    def __setattr__(self, *a):
        raise AttributeError("RationalMatrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "RationalMatrix":
        columns = [list(c) for c in columns]
        if not columns:
            return cls.zero(rows or 0, 0)
        n = len(columns[0])
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(n)])

    # -- basics ------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, RationalMatrix)
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols}, {[[str(e) for e in r] for r in self.entries]})"

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def scale(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix([[c * e for e in row] for row in self.entries], cols=self.cols)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RationalMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + other.scale(-1)

    def __mul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ocols = other.cols
        out = []
        for row in self.entries:
            acc = [Fraction(0)] * ocols
            for a, orow in zip(row, other.entries):
                if a:
                    for j in range(ocols):
                        if orow[j]:
                            acc[j] += a * orow[j]
            out.append(acc)
        return RationalMatrix(out, cols=ocols)

    def mul_vec(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(
            sum((a * Fraction(x) for a, x in zip(row, v) if a), Fraction(0))
            for row in self.entries
        )

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    # -- exact linear algebra ---------------------------------------------

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        if all(e.denominator == 1 for row in self.entries for e in row):
            return _int_rank([[int(e) for e in row] for row in self.entries])
        m = [list(row) for row in self.entries]
        return len(_frac_rref(m))

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def rref(self) -> tuple["RationalMatrix", tuple[int, ...]]:
        m = [list(row) for row in self.entries]
        pivots = _frac_rref(m)
        return RationalMatrix(m, cols=self.cols), tuple(pivots)

    def kernel_basis(self) -> "RationalMatrix":
        """Columns form a basis of the right kernel (cols - rank of them)."""
        if self.cols == 0:
            return RationalMatrix.zero(0, 0)
        if self.rows == 0:
            return RationalMatrix.identity(self.cols)
        m = [list(row) for row in self.entries]
        pivots = _frac_rref(m)
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        cols = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for r, p in enumerate(pivots):
                v[p] = -m[r][f]
            cols.append(v)
        return RationalMatrix.from_columns(cols, rows=self.cols)

    def column_space_basis(self) -> "RationalMatrix":
        """Deterministic basis of the column space, as RREF row vectors
        of the transpose turned back into columns."""
        red, _ = self.transpose().rref()
        cols = [row for row in red.entries if any(row)]
        return RationalMatrix.from_columns(cols, rows=self.rows)

    def solve(self, b: Sequence) -> tuple[Fraction, ...] | None:
        """One solution x of self @ x = b, or None if inconsistent."""
        b = [Fraction(x) for x in b]
        if len(b) != self.rows:
            raise ValueError("shape mismatch")
        aug = [list(row) + [b[i]] for i, row in enumerate(self.entries)]
        pivots = _frac_rref(aug)
        if self.cols in pivots:
            return None
        x = [Fraction(0)] * self.cols
        for r, p in enumerate(pivots):
            x[p] = aug[r][self.cols]
        return tuple(x)


def rank(matrix: RationalMatrix) -> int:
    return matrix.rank()


def kernel_basis(matrix: RationalMatrix) -> RationalMatrix:
    return matrix.kernel_basis()
