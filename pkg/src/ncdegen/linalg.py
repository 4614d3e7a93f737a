"""Exact linear algebra over Q and Z.

Matrices are dense and immutable.  A matrix is read as a linear map acting
on column vectors (``rows x cols`` sends Q^cols to Q^rows) unless a function
says otherwise.  Nothing here touches floating point.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        # Fraction normalizes on construction; this only guards the type.
        if not all(isinstance(x, Fraction) for x in self.entries):
            object.__setattr__(self, "entries", tuple(Fraction(x) for x in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> RatMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty row list")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(Fraction(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> RatMatrix:
        return cls.from_rows(list(zip(*columns)) if columns else [[]] * rows, cols=len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> RatMatrix:
        return RatMatrix.from_rows([self.column(j) for j in range(self.cols)], cols=self.rows)

    T = property(transpose)

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum((a * c[k] for k, a in nz), Fraction(0)) for c in ocols])
        return RatMatrix.from_rows(out, cols=other.cols)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        nz = [(k, x) for k, x in enumerate(v) if x]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.append(sum((r[k] * x for k, x in nz if r[k]), Fraction(0)))
        return tuple(out)

    def __add__(self, other: RatMatrix) -> RatMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RatMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> RatMatrix:
        return RatMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.entries)

    def to_int_rows(self) -> list[list[int]]:
        if not self.is_integral():
            raise ValueError("matrix has non-integral entries")
        return [[int(x) for x in self.row(i)] for i in range(self.rows)]

    def submatrix(self, rows: Iterable[int] | None = None, cols: Iterable[int] | None = None) -> RatMatrix:
        rows = range(self.rows) if rows is None else list(rows)
        cols = range(self.cols) if cols is None else list(cols)
        return RatMatrix.from_rows([[self[i, j] for j in cols] for i in rows], cols=len(cols))

    def hstack(self, other: RatMatrix) -> RatMatrix:
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return RatMatrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)],
                                   cols=self.cols + other.cols)

    def vstack(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return RatMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for i in range(self.rows):
            w.writerow([_fmt(x) for x in self.row(i)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> RatMatrix:
        rows = [r for r in csv.reader(io.StringIO(text)) if r]
        return cls.from_rows([[Fraction(x) for x in r] for r in rows])


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rref(m: RatMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = m.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r]
        inv = 1 / piv[c]
        nz = [k for k in range(c, m.cols) if piv[k]]
        for k in nz:
            piv[k] *= inv
        for i in range(m.rows):
            row = a[i]
            f = row[c]
            if i != r and f:
                for k in nz:
                    row[k] -= f * piv[k]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank_q(m: RatMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis_q(m: RatMatrix) -> list[Vector]:
    """Basis of {v : m v = 0}, one vector per free column of the RREF."""
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    assert len(basis) + len(pivots) == m.cols
    assert all(not any(m.apply(v)) for v in basis)
    return basis


def left_kernel_basis_q(m: RatMatrix) -> list[Vector]:
    """Basis of {w : w m = 0}."""
    return kernel_basis_q(m.transpose())


def image_basis_q(m: RatMatrix) -> list[Vector]:
    """Pivot columns of ``m``; a basis of its column space."""
    return [m.column(c) for c in rref(m)[1]]


def complement_basis(m: RatMatrix) -> list[int]:
    """Indices of standard basis vectors that extend the column space of ``m`` to Q^rows.

    Chosen greedily in index order, so the result is deterministic.
    """
    aug = m.hstack(RatMatrix.identity(m.rows))
    return [c - m.cols for c in rref(aug)[1] if c >= m.cols]


def solve_q(m: RatMatrix, b: Sequence) -> Vector | None:
    """One solution x of m x = b, or None."""
    aug = m.hstack(RatMatrix.from_columns([tuple(b)], rows=m.rows))
    reduced, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for row, p in zip(reduced, pivots):
        x[p] = row[-1]
    return tuple(x)


@dataclass(frozen=True)
class SmithNormalForm:
    invariant_factors: tuple[int, ...]
    rank: int
    source_shape: tuple[int, int]

    def __post_init__(self):
        assert self.rank == len(self.invariant_factors)
        assert all(d > 0 for d in self.invariant_factors)
        assert all(b % a == 0 for a, b in zip(self.invariant_factors, self.invariant_factors[1:]))

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d != 1)

    def cokernel(self) -> tuple[int, tuple[int, ...]]:
        """Cokernel of the row-vector map Z^rows -> Z^cols, v -> v m.

        Returned as (free rank, torsion factors).  For the usual column
        convention use :func:`integer_cokernel`.
        """
        return self.source_shape[1] - self.rank, self.torsion


def smith_normal_form(m: RatMatrix | Sequence[Sequence[int]]) -> SmithNormalForm:
    if isinstance(m, RatMatrix):
        shape = m.shape
        a = m.to_int_rows()
    else:
        a = [[int(x) for x in r] for r in m]
        shape = (len(a), len(a[0]) if a else 0)
    diag = _snf_diagonal(a, *shape)
    return SmithNormalForm(tuple(diag), len(diag), shape)


def _snf_diagonal(a: list[list[int]], nrows: int, ncols: int) -> list[int]:
    a = [r[:] for r in a]
    diag = []
    t = 0
    while t < min(nrows, ncols):
        nz = [(abs(a[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        a[t], a[pi] = a[pi], a[t]
        for r in a:
            r[t], r[pj] = r[pj], r[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // p
                    for r in a:
                        r[j] -= q * r[t]
                    if a[t][j]:
                        dirty = True
            if dirty:
                # a remainder smaller than the pivot survived; move it to (t, t)
                _, pi, pj = min((abs(a[i][j]), i, j)
                                for i, j in [(i, t) for i in range(t, nrows)] + [(t, j) for j in range(t, ncols)]
                                if a[i][j])
                a[t], a[pi] = a[pi], a[t]
                for r in a:
                    r[t], r[pj] = r[pj], r[t]
                continue
            bad = next((i for i in range(t + 1, nrows)
                        for j in range(t + 1, ncols) if a[i][j] % p), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def integer_cokernel(m: RatMatrix) -> tuple[int, tuple[int, ...]]:
    """Z^rows / m Z^cols as (free rank, torsion factors)."""
    snf = smith_normal_form(m)
    return m.rows - snf.rank, snf.torsion
