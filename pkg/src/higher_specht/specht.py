"""Young symmetrizers, (higher) Specht polynomials, Garnir straightening."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .combinatorics import (Partition, Tableau, enumerate_fillings, enumerate_partitions,
                            mu_cocharge_tableaux, ordinary_cocharge_rows)
from .errors import InvalidArgument
from .exactlinalg import RationalMatrix
from .polyring import (DiagonalPolynomial, Permutation, orbit_sum,
                       tableau_monomial)


def _require_bijective(T: Tableau) -> None:
    if not T.is_bijective():
        raise InvalidArgument(f"expected a bijective filling, got {T.literal()!r}")


@lru_cache(maxsize=None)
def _block_group(n: int, blocks: tuple[tuple[int, ...], ...]) -> tuple[tuple[Permutation, ...], tuple[int, ...]]:
    """Every permutation preserving each block setwise, with its sign."""
    blocks = tuple(b for b in blocks if len(b) > 1)
    perms, signs = [], []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        images = list(range(1, n + 1))
        for block, img in zip(blocks, choice):
            for src, dst in zip(block, img):
                images[src - 1] = dst
        p = Permutation(tuple(images))
        perms.append(p)
        signs.append(p.sign())
    return tuple(perms), tuple(signs)


def row_column_groups(T: Tableau) -> tuple[list[Permutation], list[Permutation]]:
    """Explicit element lists of R(T) and C(T)."""
    _require_bijective(T)
    rows, _ = _block_group(T.n, tuple(T.rows))
    cols, _ = _block_group(T.n, tuple(T.columns()))
    return list(rows), list(cols)


def epsilon_apply(T: Tableau, f: DiagonalPolynomial, order: str = "rows-first") -> DiagonalPolynomial:
    """Sum over tau in C(T), sigma in R(T) of sgn(tau) (tau sigma) . f.

    The row sum acts first.  ``order="columns-first"`` computes the
    reversed product beta(R) alpha(C) instead; it exists only for
    comparison and is not the Young symmetrizer used anywhere else.
    """
    _require_bijective(T)
    if f.n != T.n:
        raise InvalidArgument(f"tableau of size {T.n} against n={f.n}")
    rperms, _ = _block_group(T.n, tuple(T.rows))
    cperms, csigns = _block_group(T.n, tuple(T.columns()))
    if order == "rows-first":
        return orbit_sum(orbit_sum(f, rperms), cperms, csigns)
    if order == "columns-first":
        return orbit_sum(orbit_sum(f, cperms, csigns), rperms)
    raise InvalidArgument(f"unknown symmetrizer order {order!r}")


def specht_poly(T: Tableau) -> DiagonalPolynomial:
    """Product over columns of (x_i - x_j), i above j."""
    _require_bijective(T)
    n = T.n
    out = DiagonalPolynomial.constant(n)
    for col in T.columns():
        for s in range(len(col)):
            for r in range(s + 1, len(col)):
                out = out * (DiagonalPolynomial.var("x", col[r], n) - DiagonalPolynomial.var("x", col[s], n))
    return out


def higher_specht(T: Tableau, c: Sequence[int], d: Sequence[int]) -> DiagonalPolynomial:
    """F_T^{c,d}: the symmetrizer applied to x_T^c y_T^d (c, d in reading order)."""
    return epsilon_apply(T, tableau_monomial(T, c, d).as_poly())


def hook_higher_specht(T: Tableau, S: Tableau, k: int) -> DiagonalPolynomial:
    if T.shape != S.shape:
        raise InvalidArgument("T and S must have the same shape")
    pair = mu_cocharge_tableaux(S, k)
    return higher_specht(T, pair.x_exponents(), pair.y_exponents())


def aty_exponents(S: Tableau) -> list[int]:
    """Ordinary cocharge labels of S, one per cell in reading order."""
    return [v for row in reversed(ordinary_cocharge_rows(S)) for v in row]


def aty_higher_specht(T: Tableau, S: Tableau) -> DiagonalPolynomial:
    """The one-variable higher Specht polynomial (x only)."""
    if T.shape != S.shape:
        raise InvalidArgument("T and S must have the same shape")
    return higher_specht(T, aty_exponents(S), [0] * T.n)


def psi_shift(f: DiagonalPolynomial, q: int) -> DiagonalPolynomial:
    """Send y_i to 1/x_i and multiply by (x_1...x_n)^q."""
    n = f.n
    need = 0
    terms: dict = {}
    for key, c in f.items():
        new = tuple(key[i] - key[n + i] + q for i in range(n))
        need = max(need, max(key[n + i] - key[i] for i in range(n)))
        terms[new + (0,) * n] = terms.get(new + (0,) * n, 0) + c
    if need > q:
        raise InvalidArgument(f"q={q} leaves negative exponents; need q >= {need}")
    return DiagonalPolynomial(n, terms)


# ------------------------------------------------------------------ Garnir
@dataclass(frozen=True)
class GarnirSpec:
    a: int
    b: int
    t: int

    def validate(self, shape: Partition) -> None:
        ncols = shape.parts[0]
        if not (1 <= self.a < self.b <= ncols):
            raise InvalidArgument(f"need 1 <= a < b <= {ncols}, got a={self.a}, b={self.b}")
        if not 1 <= self.t <= shape.column_length(self.b):
            raise InvalidArgument(f"row t={self.t} is not in column {self.b}")

    def cells(self, shape: Partition) -> list[tuple[int, int]]:
        """Cells of column a at rows >= t, then column b at rows <= t."""
        self.validate(shape)
        upper = [(r, self.a) for r in range(self.t, shape.column_length(self.a) + 1)]
        lower = [(r, self.b) for r in range(1, self.t + 1)]
        return upper + lower


def garnir_specs(shape: Partition) -> list[GarnirSpec]:
    out = []
    for a in range(1, shape.parts[0] + 1):
        for b in range(a + 1, shape.parts[0] + 1):
            for t in range(1, shape.column_length(b) + 1):
                out.append(GarnirSpec(a, b, t))
    return out


def garnir_apply(spec: GarnirSpec, T: Tableau, f: DiagonalPolynomial) -> DiagonalPolynomial:
    """The signed sum over all permutations of the Garnir entry set."""
    values = tuple(sorted(T[c] for c in spec.cells(T.shape)))
    perms, signs = _block_group(T.n, (values,))
    return orbit_sum(f, perms, signs)


@dataclass(frozen=True)
class SpechtExpansion:
    shape: Partition
    coeffs: tuple[tuple[Tableau, int | Fraction], ...]

    def as_dict(self) -> dict[Tableau, int | Fraction]:
        return dict(self.coeffs)

    def coefficient(self, T: Tableau):
        return self.as_dict().get(T, 0)

    def to_json(self) -> dict[str, str]:
        out = {}
        for T, c in self.coeffs:
            f = Fraction(c)
            out[T.literal()] = f"{f.numerator}/{f.denominator}"
        return out

    def reconstruct(self) -> DiagonalPolynomial:
        total = DiagonalPolynomial.zero(self.shape.n)
        for T, c in self.coeffs:
            total = total + specht_poly(T).scale(c)
        return total


def _column_sort(T: Tableau) -> tuple[int, Tableau]:
    """Sort each column upward; the sign is that of the sorting permutation."""
    sign = 1
    cols = []
    for col in T.columns():
        inversions = sum(1 for i in range(len(col)) for j in range(i + 1, len(col)) if col[i] > col[j])
        if inversions % 2:
            sign = -sign
        cols.append(sorted(col))
    rows = tuple(tuple(cols[c][r] for c in range(len(T.rows[r]))) for r in range(len(T.rows)))
    return sign, Tableau(rows)


def _first_row_violation(T: Tableau) -> tuple[int, int] | None:
    # scanned in reading order: top row first, left to right
    for r in range(len(T.rows), 0, -1):
        row = T.rows[r - 1]
        for c in range(len(row) - 1):
            if row[c] > row[c + 1]:
                return r, c + 1
    return None


def _perm_sign(src: Sequence[int], dst: Sequence[int]) -> int:
    where = {v: i for i, v in enumerate(src)}
    arrangement = [where[v] for v in dst]
    inv = sum(1 for i in range(len(arrangement)) for j in range(i + 1, len(arrangement))
              if arrangement[i] > arrangement[j])
    return -1 if inv % 2 else 1


@lru_cache(maxsize=200000)
def _straighten(T: Tableau) -> tuple[tuple[Tableau, int], ...]:
    sign, U = _column_sort(T)
    bad = _first_row_violation(U)
    if bad is None:
        return ((U, sign),)
    r, c = bad
    spec = GarnirSpec(c, c + 1, r)
    cells = spec.cells(U.shape)
    n_upper = U.shape.column_length(c) - r + 1
    current = [U[cell] for cell in cells]
    pool = sorted(current)
    acc: dict[Tableau, int] = {}
    for chosen in itertools.combinations(pool, n_upper):
        upper = list(chosen)
        if sorted(current[:n_upper]) == upper:
            continue
        lower = [v for v in pool if v not in chosen]
        new_vals = upper + lower
        s = _perm_sign(current, new_vals)
        values = {(cell_r, cell_c): U[(cell_r, cell_c)] for cell_r in range(1, len(U.rows) + 1)
                  for cell_c in range(1, len(U.rows[cell_r - 1]) + 1)}
        for cell, v in zip(cells, new_vals):
            values[cell] = v
        V = Tableau(tuple(tuple(values[(rr, cc)] for cc in range(1, len(U.rows[rr - 1]) + 1))
                          for rr in range(1, len(U.rows) + 1)))
        for W, coeff in _straighten(V):
            acc[W] = acc.get(W, 0) - sign * s * coeff
    return tuple((W, v) for W, v in acc.items() if v)


def straighten(T: Tableau) -> SpechtExpansion:
    """Write F_T in the basis {F_U : U standard of the same shape}."""
    _require_bijective(T)
    order = {U: i for i, U in enumerate(enumerate_fillings(T.shape))}
    terms = sorted(_straighten(T), key=lambda kv: order[kv[0]])
    return SpechtExpansion(T.shape, tuple(terms))


def rep_matrix(shape: Partition, pi: Permutation) -> RationalMatrix:
    """Matrix of pi on the Specht module; column j is straighten(pi T_j)."""
    if pi.n != shape.n:
        raise InvalidArgument("permutation size does not match the shape")
    basis = enumerate_fillings(shape)
    index = {U: i for i, U in enumerate(basis)}
    m = len(basis)
    cols = []
    for T in basis:
        col = [0] * m
        for U, c in _straighten(T.relabel(pi.images)):
            col[index[U]] = c
        cols.append(col)
    return RationalMatrix([[cols[j][i] for j in range(m)] for i in range(m)], m)


@lru_cache(maxsize=None)
def _characters(n: int) -> tuple:
    classes = [lam.parts for lam in enumerate_partitions(n)]
    table = []
    for lam in enumerate_partitions(n):
        table.append((lam.parts, tuple(rep_matrix(lam, Permutation.of_cycle_type(n, ct)).trace()
                                       for ct in classes)))
    return tuple(classes), tuple(table)


def characters(n: int) -> tuple[list[tuple[int, ...]], dict[tuple[int, ...], tuple]]:
    """Irreducible characters as traces of straightening matrices.

    Returns (class cycle types, {shape parts: values on those classes}).
    """
    classes, table = _characters(n)
    return list(classes), dict(table)
