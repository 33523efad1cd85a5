"""Exact rational linear algebra.

Forward elimination runs on integer rows (denominators cleared, rows kept
primitive by their gcd), and only the final back-substitution produces
Fractions.  ``EchelonBasis`` is the sparse incremental variant used by the
quotient code, where columns are monomials rather than integer positions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .errors import InvalidArgument

Number = int | Fraction


def _as_fraction(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _integer_row(row: Sequence[Number]) -> list[int]:
    """Scale a rational row to a primitive integer row (same span)."""
    fr = [_as_fraction(v) for v in row]
    den = 1
    for v in fr:
        den = den * v.denominator // math.gcd(den, v.denominator)
    ints = [int(v * den) for v in fr]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints] if g > 1 else ints


class RationalMatrix:
    """Dense immutable matrix of exact rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Sequence[Number]], cols: int | None = None):
        rows = [tuple(_norm(_as_fraction(v)) for v in r) for r in data]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise InvalidArgument("matrix rows have inconsistent lengths")
        self._data = tuple(rows)
        self.rows = len(rows)
        self.cols = cols

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, r: int, c: int) -> "RationalMatrix":
        return cls([[0] * c for _ in range(r)], c)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def tolist(self) -> list[list[Number]]:
        return [list(r) for r in self._data]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise InvalidArgument(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ot = other.transpose()._data
        return RationalMatrix([[sum(a * b for a, b in zip(r, c)) for c in ot] for r in self._data], other.cols)

    def stack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows and other.rows and self.cols != other.cols:
            raise InvalidArgument("width mismatch")
        return RationalMatrix(list(self._data) + list(other._data), max(self.cols, other.cols))

    def trace(self) -> Number:
        if self.rows != self.cols:
            raise InvalidArgument("trace needs a square matrix")
        return _norm(sum((_as_fraction(self._data[i][i]) for i in range(self.rows)), Fraction(0)))

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.cols == other.cols and self._data == other._data

    def __hash__(self):
        return hash((self.cols, self._data))

    def __repr__(self):
        return f"RationalMatrix({[list(map(str, r)) for r in self._data]})"


def _forward(rows: list[list[int]], cols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form with leftmost pivots; returns (rows, pivots)."""
    work = [r[:] for r in rows if any(r)]
    echelon: list[list[int]] = []
    pivots: list[int] = []
    for c in range(cols):
        idx = next((i for i, r in enumerate(work) if r[c]), None)
        if idx is None:
            continue
        piv = work.pop(idx)
        p = piv[c]
        rest = []
        for r in work:
            a = r[c]
            if a:
                r = [p * u - a * v for u, v in zip(r, piv)]
                g = 0
                for v in r:
                    g = math.gcd(g, v)
                if g == 0:
                    continue
                if g > 1:
                    r = [v // g for v in r]
            rest.append(r)
        work = rest
        echelon.append(piv)
        pivots.append(c)
        if not work:
            break
    return echelon, pivots


def rref(M: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    ints = [_integer_row(M.row(i)) for i in range(M.rows)]
    echelon, pivots = _forward(ints, M.cols)
    rows = [[Fraction(v, r[p]) for v in r] for r, p in zip(echelon, pivots)]
    for i in range(len(rows) - 1, -1, -1):
        p = pivots[i]
        for j in range(i):
            a = rows[j][p]
            if a:
                rows[j] = [u - a * v for u, v in zip(rows[j], rows[i])]
    rows += [[0] * M.cols for _ in range(M.rows - len(rows))]
    return RationalMatrix(rows, M.cols), pivots


def rank(M: RationalMatrix) -> int:
    return len(_forward([_integer_row(M.row(i)) for i in range(M.rows)], M.cols)[1])


def kernel(M: RationalMatrix) -> list[tuple[Number, ...]]:
    """Right null space; one basis vector per free column, in column order."""
    R, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -_as_fraction(R[i, f])
        basis.append(tuple(_norm(x) for x in v))
    return basis


def member(v: Sequence[Number], M: RationalMatrix) -> bool:
    """Whether v lies in the row space of M."""
    if len(v) != M.cols:
        raise InvalidArgument(f"vector of length {len(v)} against width {M.cols}")
    return rank(M.stack(RationalMatrix([v], M.cols))) == rank(M)


# ---------------------------------------------------------------- sparse
SparseRow = dict  # column label -> nonzero int or Fraction


class EchelonBasis:
    """Incremental sparse echelon basis with labelled columns.

    The pivot of a row is its smallest column under ``order``.  Rows are kept
    as primitive integer vectors, which is enough for rank and membership;
    ``reduce`` gives the exact rational normal form.
    """

    def __init__(self, order: Callable[[Hashable], object] | None = None):
        self._order = order or (lambda c: c)
        self._rows: dict[Hashable, dict] = {}  # pivot label -> primitive integer row

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def pivots(self) -> list[Hashable]:
        return sorted(self._rows, key=self._order)

    def _lead(self, row: Mapping) -> Hashable:
        return min(row, key=self._order)

    @staticmethod
    def _primitive(row: Mapping[Hashable, Number]) -> dict:
        vals = list(row.values())
        if any(isinstance(v, Fraction) for v in vals):
            den = 1
            for v in vals:
                d = _as_fraction(v).denominator
                den = den * d // math.gcd(den, d)
            row = {k: int(_as_fraction(v) * den) for k, v in row.items()}
        g = 0
        for v in row.values():
            g = math.gcd(g, v)
        if g > 1:
            row = {k: v // g for k, v in row.items()}
        return dict(row)

    def _echelonize(self, row: dict) -> dict:
        """Eliminate leading terms until the lead is not a pivot (integer arithmetic)."""
        row = {k: v for k, v in row.items() if v}
        while row:
            lead = self._lead(row)
            piv = self._rows.get(lead)
            if piv is None:
                return row
            a, p = row[lead], piv[lead]
            g = math.gcd(a, p)
            ma, mp = p // g, a // g
            new = {k: v * ma for k, v in row.items()}
            for k, v in piv.items():
                s = new.get(k, 0) - mp * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            row = self._primitive(new) if new else new
        return row

    def add(self, vector: Mapping[Hashable, Number]) -> bool:
        """Insert a vector; True when it was independent of the current rows."""
        row = self._echelonize(self._primitive({k: v for k, v in vector.items() if v}))
        if not row:
            return False
        lead = self._lead(row)
        if row[lead] < 0:
            row = {k: -v for k, v in row.items()}
        self._rows[lead] = row
        return True

    def contains(self, vector: Mapping[Hashable, Number]) -> bool:
        row = {k: v for k, v in vector.items() if v}
        return not row or not self._echelonize(self._primitive(row))

    def reduce(self, vector: Mapping[Hashable, Number]) -> dict:
        """Normal form: subtract rows until no pivot column survives (exact)."""
        out = {k: _as_fraction(v) for k, v in vector.items() if v}
        while True:
            hits = [k for k in out if k in self._rows]
            if not hits:
                break
            k = min(hits, key=self._order)
            piv = self._rows[k]
            factor = out[k] / piv[k]
            for c, v in piv.items():
                s = out.get(c, 0) - factor * v
                if s:
                    out[c] = s
                else:
                    out.pop(c, None)
        return {k: _norm(v) for k, v in out.items()}
