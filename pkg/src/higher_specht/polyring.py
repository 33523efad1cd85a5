"""Exact polynomials in two sets of n variables with the diagonal S_n action.

A term key is a tuple of 2n exponents, x_1..x_n followed by y_1..y_n.
Coefficients are Python ints or Fractions (integral Fractions are stored as
ints).  The canonical monomial order compares total degree, then the
x-exponent vector lexicographically, then the y-exponent vector.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import kernels
from .combinatorics import Partition, Tableau, mu_cocharge_tableaux
from .errors import InvalidArgument

Key = tuple[int, ...]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _parse_coeff(text) -> int | Fraction:
    if isinstance(text, int):
        return text
    return _norm(Fraction(str(text)))


def canonical_key(key: Key) -> tuple:
    n = len(key) // 2
    return (sum(key), key[:n], key[n:])


@dataclass(frozen=True)
class Monomial:
    x_exp: tuple[int, ...]
    y_exp: tuple[int, ...]

    def __post_init__(self):
        x = tuple(int(e) for e in self.x_exp)
        y = tuple(int(e) for e in self.y_exp)
        if len(x) != len(y):
            raise InvalidArgument("x and y exponent vectors differ in length")
        if any(e < 0 for e in x + y):
            raise InvalidArgument("exponents must be nonnegative")
        object.__setattr__(self, "x_exp", x)
        object.__setattr__(self, "y_exp", y)

    @classmethod
    def from_key(cls, key: Key) -> "Monomial":
        n = len(key) // 2
        return cls(key[:n], key[n:])

    @property
    def n(self) -> int:
        return len(self.x_exp)

    @property
    def key(self) -> Key:
        return self.x_exp + self.y_exp

    @property
    def bidegree(self) -> tuple[int, int]:
        return sum(self.x_exp), sum(self.y_exp)

    def as_poly(self, coeff=1) -> "DiagonalPolynomial":
        return DiagonalPolynomial(self.n, {self.key: coeff})

    def __str__(self) -> str:
        return _monomial_str(self.key)


def _monomial_str(key: Key) -> str:
    n = len(key) // 2
    parts = []
    for letter, offset in (("x", 0), ("y", n)):
        for i in range(n):
            e = key[offset + i]
            if e == 1:
                parts.append(f"{letter}{i + 1}")
            elif e > 1:
                parts.append(f"{letter}{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


class DiagonalPolynomial:
    """Immutable sparse polynomial in x_1..x_n, y_1..y_n."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Key, int | Fraction] | None = None):
        if n < 1:
            raise InvalidArgument("n must be positive")
        clean: dict[Key, int | Fraction] = {}
        for key, c in (terms or {}).items():
            key = tuple(int(e) for e in key)
            if len(key) != 2 * n or any(e < 0 for e in key):
                raise InvalidArgument(f"bad exponent key {key} for n={n}")
            c = _norm(c if isinstance(c, (int, Fraction)) else Fraction(c))
            if c:
                clean[key] = _norm(clean.get(key, 0) + c)
                if not clean[key]:
                    del clean[key]
        self.n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "DiagonalPolynomial":
        # trusted constructor: keys are valid tuples and coefficients nonzero
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "DiagonalPolynomial":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c=1) -> "DiagonalPolynomial":
        return cls(n, {(0,) * (2 * n): c})

    @classmethod
    def var(cls, letter: str, i: int, n: int) -> "DiagonalPolynomial":
        if not 1 <= i <= n or letter not in ("x", "y"):
            raise InvalidArgument(f"no variable {letter}{i} when n={n}")
        key = [0] * (2 * n)
        key[i - 1 + (n if letter == "y" else 0)] = 1
        return cls._raw(n, {tuple(key): 1})

    # inspection -------------------------------------------------------
    @property
    def terms(self) -> dict[Key, int | Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Key, int | Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self, descending: bool = True) -> list[tuple[Key, int | Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: canonical_key(kv[0]), reverse=descending)

    def bidegrees(self) -> set[tuple[int, int]]:
        n = self.n
        return {(sum(k[:n]), sum(k[n:])) for k in self._terms}

    def is_bihomogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    def bidegree(self) -> tuple[int, int]:
        degs = self.bidegrees()
        if len(degs) != 1:
            raise InvalidArgument("polynomial is not bihomogeneous (or is zero)")
        return next(iter(degs))

    def components(self) -> dict[tuple[int, int], "DiagonalPolynomial"]:
        n = self.n
        out: dict[tuple[int, int], dict] = {}
        for k, c in self._terms.items():
            out.setdefault((sum(k[:n]), sum(k[n:])), {})[k] = c
        return {d: DiagonalPolynomial._raw(n, t) for d, t in out.items()}

    def coefficient(self, key: Key):
        return self._terms.get(tuple(key), 0)

    def max_exponent(self) -> int:
        return max((max(k) for k in self._terms), default=0)

    def uses_y(self) -> bool:
        n = self.n
        return any(any(k[n:]) for k in self._terms)

    # arithmetic -------------------------------------------------------
    def _check(self, other: "DiagonalPolynomial"):
        if other.n != self.n:
            raise InvalidArgument(f"variable count mismatch: {self.n} vs {other.n}")

    def _coerce(self, other):
        if isinstance(other, DiagonalPolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return DiagonalPolynomial.constant(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for k, c in other._terms.items():
            s = _norm(terms.get(k, 0) + c)
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return DiagonalPolynomial._raw(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return DiagonalPolynomial._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "DiagonalPolynomial":
        c = _norm(Fraction(c)) if not isinstance(c, int) else c
        if not c:
            return DiagonalPolynomial.zero(self.n)
        return DiagonalPolynomial._raw(self.n, {k: _norm(v * c) for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, DiagonalPolynomial):
            return NotImplemented
        self._check(other)
        terms: dict[Key, int | Fraction] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                terms[k] = terms.get(k, 0) + c1 * c2
        return DiagonalPolynomial._raw(self.n, {k: _norm(c) for k, c in terms.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise InvalidArgument("negative powers are not polynomials")
        out = DiagonalPolynomial.constant(self.n)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = DiagonalPolynomial.constant(self.n, other) if other else DiagonalPolynomial.zero(self.n)
        if not isinstance(other, DiagonalPolynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # serialization ----------------------------------------------------
    def to_json(self) -> list[dict]:
        n = self.n
        out = []
        for k, c in self.sorted_terms():
            f = Fraction(c)
            out.append({"coeff": f"{f.numerator}/{f.denominator}", "x": list(k[:n]), "y": list(k[n:])})
        return out

    @classmethod
    def from_json(cls, n: int, data: Iterable[Mapping]) -> "DiagonalPolynomial":
        return cls(n, {tuple(t["x"]) + tuple(t["y"]): _parse_coeff(t["coeff"]) for t in data})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for k, c in self.sorted_terms():
            mono = _monomial_str(k)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__


# ------------------------------------------------------------ permutations
@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidArgument(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def of_cycle_type(cls, n: int, cycle_type: Sequence[int]) -> "Permutation":
        """A representative permutation built from consecutive cycles."""
        if sum(cycle_type) != n:
            raise InvalidArgument("cycle type must sum to n")
        cycles, start = [], 1
        for length in cycle_type:
            cycles.append(list(range(start, start + length)))
            start += length
        return cls.from_cycles(n, cycles)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(i) = self(other(i))."""
        if other.n != self.n:
            raise InvalidArgument("permutation sizes differ")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def cycle_type(self) -> tuple[int, ...]:
        seen = [False] * self.n
        lengths = []
        for i in range(self.n):
            if not seen[i]:
                j, length = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = self.images[j] - 1
                    length += 1
                lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def sign(self) -> int:
        return -1 if (self.n - len(self.cycle_type())) % 2 else 1

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.images)) + "]"


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def _act_key(images: Sequence[int], key: Key) -> Key:
    n = len(images)
    new = [0] * (2 * n)
    for i in range(n):
        j = images[i] - 1
        new[j] = key[i]
        new[n + j] = key[n + i]
    return tuple(new)


def diagonal_act(pi: Permutation, f: DiagonalPolynomial) -> DiagonalPolynomial:
    """Rename x_i, y_i to x_pi(i), y_pi(i)."""
    if pi.n != f.n:
        raise InvalidArgument(f"permutation on {pi.n} letters acting on n={f.n}")
    return DiagonalPolynomial._raw(f.n, {_act_key(pi.images, k): c for k, c in f.items()})


def orbit_sum(f: DiagonalPolynomial, perms: Sequence[Permutation],
              weights: Sequence[int] | None = None) -> DiagonalPolynomial:
    """Sum_g w_g (g . f) over a list of permutations."""
    n = f.n
    if weights is None:
        weights = [1] * len(perms)
    if not f or not perms:
        return DiagonalPolynomial.zero(n)
    coeffs = list(f._terms.values())
    integral = all(isinstance(c, int) for c in coeffs)
    bound = max(abs(c) for c in coeffs) * sum(abs(w) for w in weights) if integral else None
    base = kernels.key_base(f.max_exponent(), 2 * n)
    if integral and base is not None and bound < kernels.INT64_SAFE and len(f) * len(perms) > 64:
        exps = np.array(list(f._terms.keys()), dtype=np.int64)
        inv = np.array([[v - 1 for v in p.inverse().images] for p in perms], dtype=np.int64)
        out_e, out_c = kernels.orbit_sum(exps, np.array(coeffs, dtype=np.int64), inv,
                                         np.array(weights, dtype=np.int64), base)
        return DiagonalPolynomial._raw(n, {tuple(e): int(c) for e, c in zip(out_e.tolist(), out_c.tolist())})
    terms: dict[Key, int | Fraction] = {}
    for p, w in zip(perms, weights):
        for k, c in f._terms.items():
            nk = _act_key(p.images, k)
            terms[nk] = terms.get(nk, 0) + w * c
    return DiagonalPolynomial._raw(n, {k: _norm(c) for k, c in terms.items() if c})


# ----------------------------------------------------- symmetric functions
def elementary_symmetric(d: int, varset: str, n: int) -> DiagonalPolynomial:
    """e_d in the x or y variables; zero when d > n."""
    if d < 0:
        raise InvalidArgument("degree must be nonnegative")
    if varset not in ("x", "y"):
        raise InvalidArgument(f"unknown variable set {varset!r}")
    offset = 0 if varset == "x" else n
    terms = {}
    if d <= n:
        for subset in itertools.combinations(range(n), d):
            key = [0] * (2 * n)
            for i in subset:
                key[offset + i] = 1
            terms[tuple(key)] = 1
    return DiagonalPolynomial._raw(n, terms)


def polarized_power_sum(a: int, b: int, n: int) -> DiagonalPolynomial:
    if a < 0 or b < 0 or a + b == 0:
        raise InvalidArgument("need a, b >= 0 with a + b >= 1")
    terms = {}
    for i in range(n):
        key = [0] * (2 * n)
        key[i] = a
        key[n + i] = b
        terms[tuple(key)] = 1
    return DiagonalPolynomial._raw(n, terms)


def hook_e(nu: Partition | Sequence[int], k: int, n: int) -> DiagonalPolynomial:
    """e_nu^(k): e_d(x) for parts d <= k-1 and e_{n-d}(y) for parts d >= k."""
    parts = nu.parts if isinstance(nu, Partition) else tuple(nu)
    if not 1 <= k <= n:
        raise InvalidArgument(f"k={k} out of range for n={n}")
    out = DiagonalPolynomial.constant(n)
    for d in parts:
        if not 1 <= d <= n:
            raise InvalidArgument(f"part {d} out of range 1..{n}")
        factor = elementary_symmetric(d, "x", n) if d <= k - 1 else elementary_symmetric(n - d, "y", n)
        out = out * factor
    return out


# ------------------------------------------------------ tableau monomials
def tableau_monomial(T: Tableau, c: Sequence[int], d: Sequence[int]) -> Monomial:
    """Prod over cells b of x_{T(b)}^{c(b)} y_{T(b)}^{d(b)}; c, d in reading order."""
    n = T.n
    if len(c) != n or len(d) != n:
        raise InvalidArgument(f"exponent lists must have length {n}")
    if not T.is_bijective():
        raise InvalidArgument("tableau monomials need a bijective filling")
    x = [0] * n
    y = [0] * n
    for v, a, b in zip(T.entries(), c, d):
        x[v - 1] = a
        y[v - 1] = b
    return Monomial(tuple(x), tuple(y))


def row_exponents(T: Tableau) -> list[int]:
    """c = row - 1 per cell in reading order (the exponents of x_T)."""
    return [cell.row - 1 for cell in T.cells()]


def mu_monomial(T: Tableau, S: Tableau, k: int) -> Monomial:
    if T.shape != S.shape:
        raise InvalidArgument("T and S must have the same shape")
    pair = mu_cocharge_tableaux(S, k)
    return tableau_monomial(T, pair.x_exponents(), pair.y_exponents())


def delta_cells(mu: Partition) -> list[tuple[int, int]]:
    """(x-exponent, y-exponent) per cell of mu, cells in reading order.

    The x-exponent is the zero-based row and the y-exponent the zero-based
    column, so a single row gives a Vandermonde in y.
    """
    return [(cell.row - 1, cell.col - 1) for cell in mu.cells()]


@lru_cache(maxsize=None)
def _delta_terms(parts: tuple[int, ...]) -> tuple:
    mu = Partition(parts)
    n = mu.n
    cells = delta_cells(mu)
    terms = {}
    for perm in itertools.permutations(range(n)):
        key = [0] * (2 * n)
        for j, i in enumerate(perm):
            key[i] = cells[j][0]
            key[n + i] = cells[j][1]
        sign = Permutation(tuple(p + 1 for p in perm)).sign()
        terms[tuple(key)] = sign
    return tuple(terms.items())


def delta_mu(mu: Partition) -> DiagonalPolynomial:
    """det(x_i^{a_j} y_i^{b_j}) over the cells of mu in reading order."""
    return DiagonalPolynomial._raw(mu.n, dict(_delta_terms(mu.parts)))


# -------------------------------------------------- differential pairing
def _falling(b: int, a: int) -> int:
    return math.perm(b, a)


def apply_diff(f: DiagonalPolynomial, g: DiagonalPolynomial) -> DiagonalPolynomial:
    """The operator f(d/dx, d/dy) applied to g."""
    if f.n != g.n:
        raise InvalidArgument("variable count mismatch")
    n = f.n
    if not f or not g:
        return DiagonalPolynomial.zero(n)
    fc = list(f._terms.values())
    gc = list(g._terms.values())
    integral = all(isinstance(c, int) for c in fc + gc)
    base = kernels.key_base(g.max_exponent(), 2 * n)
    if integral and base is not None and len(f) * len(g) > 256:
        top = g.max_exponent()
        bound = max(map(abs, fc)) * max(map(abs, gc)) * math.factorial(top) ** (2 * n) * len(f) * len(g)
        if bound < kernels.INT64_SAFE:
            out_e, out_c = kernels.differentiate(
                np.array(list(f._terms), dtype=np.int64), np.array(fc, dtype=np.int64),
                np.array(list(g._terms), dtype=np.int64), np.array(gc, dtype=np.int64), base)
            return DiagonalPolynomial._raw(n, {tuple(e): int(c) for e, c in zip(out_e.tolist(), out_c.tolist())})
    terms: dict[Key, int | Fraction] = {}
    for kf, cf in f._terms.items():
        for kg, cg in g._terms.items():
            if any(a > b for a, b in zip(kf, kg)):
                continue
            c = cf * cg
            for a, b in zip(kf, kg):
                if a:
                    c *= _falling(b, a)
            k = tuple(b - a for a, b in zip(kf, kg))
            terms[k] = terms.get(k, 0) + c
    return DiagonalPolynomial._raw(n, {k: _norm(c) for k, c in terms.items() if c})


def partial(g: DiagonalPolynomial, slot: int) -> DiagonalPolynomial:
    """Derivative with respect to one variable (slot 0..2n-1)."""
    terms = {}
    for k, c in g._terms.items():
        e = k[slot]
        if e:
            nk = k[:slot] + (e - 1,) + k[slot + 1:]
            terms[nk] = c * e
    return DiagonalPolynomial._raw(g.n, terms)


def pairing(f: DiagonalPolynomial, g: DiagonalPolynomial):
    """<f, g>: the constant term of apply_diff(f, g)."""
    return apply_diff(f, g).coefficient((0,) * (2 * f.n))


def homogeneous_component(f: DiagonalPolynomial, d1: int, d2: int) -> DiagonalPolynomial:
    n = f.n
    return DiagonalPolynomial._raw(n, {k: c for k, c in f.items() if sum(k[:n]) == d1 and sum(k[n:]) == d2})


def coefficient_of(f: DiagonalPolynomial, m: Monomial | Key):
    key = m.key if isinstance(m, Monomial) else tuple(m)
    if len(key) != 2 * f.n:
        raise InvalidArgument("monomial size mismatch")
    return f.coefficient(key)


def monomials_of_bidegree(n: int, d1: int, d2: int) -> list[Key]:
    """All exponent keys of bidegree (d1, d2), in descending canonical order."""
    xs = _compositions(d1, n)
    ys = _compositions(d2, n)
    return [x + y for x in xs for y in ys]


@lru_cache(maxsize=None)
def _compositions(d: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Weak compositions of d into n parts, lexicographically descending."""
    if n == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, n - 1):
            out.append((first,) + rest)
    return tuple(out)
