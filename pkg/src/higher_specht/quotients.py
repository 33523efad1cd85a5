"""Bigraded quotients of C[x, y] by S_n-stable ideals.

Two independent routes compute the same graded data:

* ``GradedQuotient`` builds a Groebner basis under the graded-lex order
  x1 > ... > xn > y1 > ... > yn.  Reduction modulo it gives, in every
  bidegree, the unique representative supported on standard monomials,
  which is exactly the row-reduction normal form with columns in
  descending canonical order.
* ``graded_ideal_basis`` row-reduces the explicit spanning set
  {generator * monomial} of one graded piece (a Macaulay matrix).  It is
  only practical for small pieces and serves as the cross-check.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from sympy.polys.domains import QQ
from sympy.polys.groebnertools import groebner
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring

from .combinatorics import Partition
from .errors import InvalidArgument
from .exactlinalg import EchelonBasis, RationalMatrix, kernel
from .polyring import (DiagonalPolynomial, Key, Permutation, apply_diff,
                       canonical_key, elementary_symmetric, monomials_of_bidegree,
                       partial, polarized_power_sum)

CACHE_VERSION = "1"


@dataclass(frozen=True)
class IdealSpec:
    n: int
    generators: tuple[DiagonalPolynomial, ...]
    label: str
    kind: str = "custom"
    # "xy": the ambient ring is C[x, y]; "x": only y-degree 0 is in scope
    ambient: str = "xy"

    def __post_init__(self):
        for g in self.generators:
            if g.n != self.n:
                raise InvalidArgument("generator variable count differs from n")
            if not g.is_bihomogeneous():
                raise InvalidArgument(f"generator {g} is not bihomogeneous")

    def generator_bidegrees(self) -> list[tuple[int, int]]:
        return [g.bidegree() for g in self.generators]


def _squarefree(n: int, size: int, letter: str) -> list[DiagonalPolynomial]:
    out = []
    offset = 0 if letter == "x" else n
    for subset in itertools.combinations(range(n), size):
        key = [0] * (2 * n)
        for i in subset:
            key[offset + i] = 1
        out.append(DiagonalPolynomial._raw(n, {tuple(key): 1}))
    return out


def _xy_products(n: int) -> list[DiagonalPolynomial]:
    out = []
    for i in range(n):
        key = [0] * (2 * n)
        key[i] = key[n + i] = 1
        out.append(DiagonalPolynomial._raw(n, {tuple(key): 1}))
    return out


def ideal_spec(kind: str, n: int, k: int | None = None) -> IdealSpec:
    """The ideals hook(n,k), pk(n,k), diagonal(n) and onevar(n)."""
    if n < 1:
        raise InvalidArgument("n must be positive")
    if kind in ("hook", "pk"):
        if k is None or not 1 <= k <= n:
            raise InvalidArgument(f"k must satisfy 1 <= k <= n, got k={k}")
        gens: list[DiagonalPolynomial] = []
        if kind == "hook":
            gens += [elementary_symmetric(d, "x", n) for d in range(1, n + 1)]
            gens += [elementary_symmetric(d, "y", n) for d in range(1, n + 1)]
        gens += _squarefree(n, k, "x") + _squarefree(n, n - k + 1, "y") + _xy_products(n)
        return IdealSpec(n, tuple(gens), f"{kind}({n},{k})", kind)
    if k is not None:
        raise InvalidArgument(f"{kind} takes no k")
    if kind == "diagonal":
        gens = [polarized_power_sum(a, s - a, n) for s in range(1, n + 1) for a in range(s, -1, -1)]
        return IdealSpec(n, tuple(gens), f"diagonal({n})", kind)
    if kind == "onevar":
        gens = [elementary_symmetric(d, "x", n) for d in range(1, n + 1)]
        return IdealSpec(n, tuple(gens), f"onevar({n})", kind, ambient="x")
    raise InvalidArgument(f"unknown ideal kind {kind!r}")


def parse_ideal(text: str) -> IdealSpec:
    """Parse labels such as ``hook(4,2)`` or ``diagonal(3)``."""
    text = text.strip().replace(" ", "")
    if "(" not in text or not text.endswith(")"):
        raise InvalidArgument(f"cannot parse ideal {text!r}")
    kind, args = text[:-1].split("(", 1)
    try:
        nums = [int(a) for a in args.split(",") if a]
    except ValueError as exc:
        raise InvalidArgument(f"cannot parse ideal {text!r}") from exc
    if len(nums) == 1:
        return ideal_spec(kind, nums[0])
    if len(nums) == 2:
        return ideal_spec(kind, nums[0], nums[1])
    raise InvalidArgument(f"cannot parse ideal {text!r}")


def hook_partition(n: int, k: int) -> Partition:
    return Partition.hook(n, k)


# ------------------------------------------------------- disk memo (opt-in)
_cache_dir: Path | None = None


def set_cache_dir(path: str | os.PathLike | None) -> None:
    """Persist graded-piece dimensions under ``path`` (None disables)."""
    global _cache_dir
    _cache_dir = Path(path) if path else None
    if _cache_dir:
        _cache_dir.mkdir(parents=True, exist_ok=True)


def _disk_key(label: str, d1: int, d2: int) -> str:
    raw = f"{label}|{d1},{d2}|v{CACHE_VERSION}"
    return hashlib.sha256(raw.encode()).hexdigest()[:32]


def _disk_get(label: str, d1: int, d2: int):
    if _cache_dir is None:
        return None
    p = _cache_dir / f"{_disk_key(label, d1, d2)}.json"
    if p.exists():
        return json.loads(p.read_text())["dim"]
    return None


def _disk_put(label: str, d1: int, d2: int, dim: int) -> None:
    if _cache_dir is None:
        return
    p = _cache_dir / f"{_disk_key(label, d1, d2)}.json"
    tmp = p.with_suffix(f".{os.getpid()}.tmp")
    tmp.write_text(json.dumps({"ideal": label, "bidegree": [d1, d2], "dim": dim}))
    os.replace(tmp, p)


# --------------------------------------------------------- Groebner route
def _to_fraction(c) -> int | Fraction:
    num, den = int(c.numerator), int(c.denominator)
    return num if den == 1 else Fraction(num, den)


class GradedQuotient:
    """Normal forms, standard monomials and piece dimensions for one ideal."""

    def __init__(self, ideal: IdealSpec):
        self.ideal = ideal
        n = self.n = ideal.n
        names = [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]
        self.ring, *_ = ring(names, QQ, grlex)
        gens = [self._to_ring(g) for g in ideal.generators]
        self.basis = groebner(gens, self.ring) if gens else []
        self.leading = [max(g.monoms(), key=canonical_key) for g in self.basis]
        self._std: dict[tuple[int, int], tuple[Key, ...]] = {}
        self._mono_nf: dict[Key, dict] = {}
        self._lock = threading.Lock()

    def _to_ring(self, f: DiagonalPolynomial):
        return self.ring.from_dict({k: QQ(Fraction(c).numerator, Fraction(c).denominator)
                                    for k, c in f.items()})

    def _from_ring(self, p) -> DiagonalPolynomial:
        return DiagonalPolynomial._raw(self.n, {tuple(k): _to_fraction(c) for k, c in p.items()})

    def normal_form(self, f: DiagonalPolynomial) -> DiagonalPolynomial:
        if f.n != self.n:
            raise InvalidArgument("variable count mismatch")
        if not f:
            return f
        if not self.basis:
            return f
        return self._from_ring(self._to_ring(f).rem(self.basis))

    def monomial_normal_form(self, key: Key) -> dict:
        nf = self._mono_nf.get(key)
        if nf is None:
            nf = self.normal_form(DiagonalPolynomial._raw(self.n, {key: 1})).terms
            with self._lock:
                self._mono_nf.setdefault(key, nf)
        return nf

    def is_standard(self, key: Key) -> bool:
        return not any(all(a <= b for a, b in zip(lm, key)) for lm in self.leading)

    def in_scope(self, d1: int, d2: int) -> bool:
        return self.ideal.ambient == "xy" or d2 == 0

    def standard_monomials(self, d1: int, d2: int) -> tuple[Key, ...]:
        """Standard monomials of bidegree (d1, d2), descending canonical order."""
        if d1 < 0 or d2 < 0:
            raise InvalidArgument("bidegrees are nonnegative")
        cached = self._std.get((d1, d2))
        if cached is not None:
            return cached
        n = self.n
        if (d1, d2) == (0, 0):
            cands = {(0,) * (2 * n)}
        else:
            # standard monomials are closed under division, so grow from below
            cands = set()
            if d1 > 0:
                for m in self.standard_monomials(d1 - 1, d2):
                    for i in range(n):
                        cands.add(m[:i] + (m[i] + 1,) + m[i + 1:])
            if d2 > 0:
                for m in self.standard_monomials(d1, d2 - 1):
                    for i in range(n, 2 * n):
                        cands.add(m[:i] + (m[i] + 1,) + m[i + 1:])
        out = tuple(sorted((m for m in cands if self.is_standard(m)), key=canonical_key, reverse=True))
        with self._lock:
            self._std.setdefault((d1, d2), out)
        return self._std[(d1, d2)]

    def dim(self, d1: int, d2: int) -> int:
        if not self.in_scope(d1, d2):
            return 0
        hit = _disk_get(self.ideal.label, d1, d2)
        if hit is not None:
            return hit
        d = len(self.standard_monomials(d1, d2))
        _disk_put(self.ideal.label, d1, d2, d)
        return d

    def is_finite(self) -> bool:
        """Whether every in-scope variable has a pure power among leading monomials."""
        slots = range(self.n) if self.ideal.ambient == "x" else range(2 * self.n)
        pure = set()
        for lm in self.leading:
            nz = [i for i, e in enumerate(lm) if e]
            if len(nz) == 1:
                pure.add(nz[0])
        return all(s in pure for s in slots)

    def certified_window(self, limit: int = 200) -> tuple[int, int]:
        """Smallest total degree D such that every piece of total degree D vanishes."""
        if not self.is_finite():
            raise InvalidArgument(f"{self.ideal.label} has an infinite-dimensional quotient; give explicit bounds")
        for total in range(limit):
            if all(self.dim(a, total - a) == 0 for a in range(total + 1)):
                return total, total
        raise InvalidArgument("no vanishing antidiagonal below the search limit")

    def support(self, D1: int | None = None, D2: int | None = None) -> list[tuple[int, int]]:
        if D1 is None or D2 is None:
            top, _ = self.certified_window()
            cells = [(a, t - a) for t in range(top) for a in range(t + 1)]
        else:
            cells = [(a, b) for a in range(D1 + 1) for b in range(D2 + 1)]
        return [(a, b) for a, b in cells if self.in_scope(a, b)]


_quotients: dict[str, GradedQuotient] = {}
_quotients_lock = threading.Lock()


def quotient(ideal: IdealSpec) -> GradedQuotient:
    """Shared engine per ideal label (custom ideals are never shared)."""
    if ideal.kind == "custom":
        return GradedQuotient(ideal)
    q = _quotients.get(ideal.label)
    if q is None:
        built = GradedQuotient(ideal)
        with _quotients_lock:
            q = _quotients.setdefault(ideal.label, built)
    return q


# ---------------------------------------------------------- Macaulay route
def _descending(key: Key):
    return tuple(-v for v in (sum(key),) + key)


@dataclass
class GradedPieceBasis:
    bidegree: tuple[int, int]
    ambient_monomials: list[Key]
    ideal_rowspace: EchelonBasis
    quotient_dim: int

    @property
    def rank(self) -> int:
        return self.ideal_rowspace.rank

    def matrix(self) -> RationalMatrix:
        index = {m: i for i, m in enumerate(self.ambient_monomials)}
        rows = []
        for piv in self.ideal_rowspace.pivots():
            row = [0] * len(index)
            for k, v in self.ideal_rowspace._rows[piv].items():
                row[index[k]] = v
            rows.append(row)
        return RationalMatrix(rows, len(index))

    def reduce(self, f: DiagonalPolynomial) -> DiagonalPolynomial:
        return DiagonalPolynomial._raw(f.n, self.ideal_rowspace.reduce(f.terms))

    def contains(self, f: DiagonalPolynomial) -> bool:
        return self.ideal_rowspace.contains(f.terms)


def graded_ideal_basis(I: IdealSpec, d1: int, d2: int) -> GradedPieceBasis:
    """Row-reduce {generator * monomial} inside bidegree (d1, d2)."""
    if d1 < 0 or d2 < 0:
        raise InvalidArgument("bidegrees are nonnegative")
    n = I.n
    ambient = monomials_of_bidegree(n, d1, d2)
    ech = EchelonBasis(order=_descending)
    for g in I.generators:
        a, b = g.bidegree()
        if a > d1 or b > d2:
            continue
        for m in monomials_of_bidegree(n, d1 - a, d2 - b):
            row = {}
            for k, c in g.items():
                row[tuple(u + v for u, v in zip(k, m))] = c
            ech.add(row)
    return GradedPieceBasis((d1, d2), ambient, ech, len(ambient) - ech.rank)


# ------------------------------------------------------------ public API
def quotient_dim(I: IdealSpec, d1: int, d2: int) -> int:
    return quotient(I).dim(d1, d2)


@dataclass
class HilbertTable:
    ideal: str
    dims: dict[tuple[int, int], int]
    total: int
    certified: bool = False

    def to_json(self) -> dict:
        return {"ideal": self.ideal,
                "dims": {f"({a},{b})": d for (a, b), d in sorted(self.dims.items())},
                "total": self.total}

    def by_x_degree(self) -> list[int]:
        top = max((a for a, _ in self.dims), default=-1)
        return [sum(d for (a, _), d in self.dims.items() if a == i) for i in range(top + 1)]


def hilbert_table(I: IdealSpec, D1: int | None = None, D2: int | None = None) -> HilbertTable:
    """Nonzero piece dimensions over a rectangle, or the certified support when bounds are omitted."""
    q = quotient(I)
    cells = q.support(D1, D2)
    dims = {}
    for a, b in cells:
        d = q.dim(a, b)
        if d:
            dims[(a, b)] = d
    return HilbertTable(I.label, dims, sum(dims.values()), certified=D1 is None or D2 is None)


def normal_form(f: DiagonalPolynomial, I: IdealSpec) -> DiagonalPolynomial:
    return quotient(I).normal_form(f)


def _rank_of(vectors: Iterable[dict]) -> int:
    ech = EchelonBasis(order=_descending)
    return sum(1 for v in vectors if ech.add(v))


def independent_mod(polys: Sequence[DiagonalPolynomial], I: IdealSpec) -> tuple[bool, int]:
    """(independent?, rank of the images in the quotient)."""
    q = quotient(I)
    forms = [q.normal_form(p) for p in polys]
    if all(p.is_bihomogeneous() or not p for p in polys):
        blocks: dict[tuple[int, int], list[dict]] = {}
        for f in forms:
            if f:
                blocks.setdefault(f.bidegree(), []).append(f.terms)
        r = sum(_rank_of(vs) for vs in blocks.values())
    else:
        r = _rank_of(f.terms for f in forms if f)
    return r == len(polys), r


def block_ranks(polys: Sequence[DiagonalPolynomial], I: IdealSpec) -> dict[tuple[int, int], tuple[int, int]]:
    """Per bidegree: (number of polynomials, rank of their images)."""
    q = quotient(I)
    blocks: dict[tuple[int, int], list[dict]] = {}
    counts: dict[tuple[int, int], int] = {}
    for p in polys:
        d = p.bidegree()
        counts[d] = counts.get(d, 0) + 1
        f = q.normal_form(p)
        blocks.setdefault(d, [])
        if f:
            blocks[d].append(f.terms)
    return {d: (counts[d], _rank_of(blocks[d])) for d in sorted(counts)}


def apolar_kernel(delta: DiagonalPolynomial, d1: int, d2: int) -> list[DiagonalPolynomial]:
    """Basis of {f of bidegree (d1, d2) : f(d/dx, d/dy) delta = 0}."""
    n = delta.n
    monos = monomials_of_bidegree(n, d1, d2)
    images = [apply_diff(DiagonalPolynomial._raw(n, {m: 1}), delta) for m in monos]
    targets = sorted({k for img in images for k in img.terms}, key=canonical_key, reverse=True)
    if not targets:
        return [DiagonalPolynomial._raw(n, {m: 1}) for m in monos]
    index = {k: i for i, k in enumerate(targets)}
    rows = [[0] * len(monos) for _ in targets]
    for j, img in enumerate(images):
        for k, c in img.items():
            rows[index[k]][j] = c
    out = []
    for vec in kernel(RationalMatrix(rows, len(monos))):
        out.append(DiagonalPolynomial(n, {m: c for m, c in zip(monos, vec) if c}))
    return out


def harmonic_dim(delta: DiagonalPolynomial, by_bidegree: bool = False):
    """Dimension of the span of all iterated partial derivatives of delta."""
    if not delta:
        raise InvalidArgument("the zero polynomial has no harmonic space")
    if not delta.is_bihomogeneous():
        raise InvalidArgument("expected a bihomogeneous polynomial")
    n = delta.n
    top = delta.bidegree()
    pieces: dict[tuple[int, int], list[DiagonalPolynomial]] = {top: [delta]}
    dims = {top: 1}
    for total in range(sum(top) - 1, -1, -1):
        for a in range(min(total, top[0]), -1, -1):
            b = total - a
            if b > top[1]:
                continue
            ech = EchelonBasis(order=_descending)
            for src, slots in (((a + 1, b), range(n)), ((a, b + 1), range(n, 2 * n))):
                for g in pieces.get(src, []):
                    for s in slots:
                        ech.add(partial(g, s).terms)
            if ech.rank:
                pieces[(a, b)] = [DiagonalPolynomial._raw(n, dict(r)) for r in ech._rows.values()]
                dims[(a, b)] = ech.rank
    total_dim = sum(dims.values())
    return (total_dim, dict(sorted(dims.items()))) if by_bidegree else total_dim


def quotient_trace(I: IdealSpec, pi: Permutation, d1: int, d2: int) -> int | Fraction:
    """Trace of v -> normal_form(pi . v) on the standard-monomial basis."""
    if pi.n != I.n:
        raise InvalidArgument("permutation size does not match the ideal")
    q = quotient(I)
    if not q.in_scope(d1, d2):
        return 0
    n = I.n
    total = 0
    for m in q.standard_monomials(d1, d2):
        moved = [0] * (2 * n)
        for i in range(n):
            j = pi.images[i] - 1
            moved[j] = m[i]
            moved[n + j] = m[n + i]
        total += q.monomial_normal_form(tuple(moved)).get(m, 0)
    return total


def pk_survives(key: Key, n: int, k: int) -> bool:
    """Whether a monomial is nonzero in the quotient by the pk(n,k) monomial ideal."""
    x, y = key[:n], key[n:]
    if any(a and b for a, b in zip(x, y)):
        return False
    return sum(1 for a in x if a) < k and sum(1 for b in y if b) < n - k + 1
