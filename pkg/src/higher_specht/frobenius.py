"""Bigraded Schur series: tableau formulas and quotient decompositions.

A SchurSeries maps a bidegree (d1, d2) to {partition parts: multiplicity}.
In every series built from a quotient, d1 is the x-degree (variable q)
and d2 the y-degree (variable t).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .combinatorics import (Partition, count_syt, cocharge, descent_data, enumerate_fillings,
                            enumerate_partitions, maj_comaj_range, mu_cocharge_tableaux,
                            reading_word, standard_tableaux)
from .errors import InternalInconsistency, InvalidArgument
from .polyring import Permutation
from .quotients import IdealSpec, quotient, quotient_trace
from .specht import characters

Parts = tuple[int, ...]
Bidegree = tuple[int, int]


@dataclass(frozen=True)
class SchurSeries:
    data: tuple[tuple[Bidegree, tuple[tuple[Parts, int], ...]], ...] = ()

    @classmethod
    def from_dict(cls, data: Mapping[Bidegree, Mapping[Parts, int]]) -> "SchurSeries":
        clean = []
        for deg in sorted(data):
            entries = tuple(sorted(((tuple(p), int(m)) for p, m in data[deg].items() if m),
                                   key=lambda pm: [-v for v in pm[0]]))
            for _, m in entries:
                if m < 0:
                    raise InvalidArgument("Schur multiplicities must be nonnegative")
            if entries:
                clean.append(((int(deg[0]), int(deg[1])), entries))
        return cls(tuple(clean))

    def as_dict(self) -> dict[Bidegree, dict[Parts, int]]:
        return {deg: dict(entries) for deg, entries in self.data}

    def swapped(self) -> "SchurSeries":
        return SchurSeries.from_dict({(b, a): dict(e) for (a, b), e in self.data})

    def is_empty(self) -> bool:
        return not self.data

    def coefficient(self, deg: Bidegree, parts: Parts) -> int:
        return self.as_dict().get(tuple(deg), {}).get(tuple(parts), 0)

    def single_graded(self) -> bool:
        return all(b == 0 for (_, b), _ in self.data)

    def to_json(self) -> dict:
        return {f"({a},{b})": {",".join(map(str, p)): m for p, m in entries}
                for (a, b), entries in self.data}

    @classmethod
    def from_json(cls, obj: Mapping) -> "SchurSeries":
        data = {}
        for deg, entries in obj.items():
            a, b = (int(v) for v in deg.strip("()").split(","))
            data[(a, b)] = {tuple(int(v) for v in p.split(",")): m for p, m in entries.items()}
        return cls.from_dict(data)

    def render(self) -> str:
        by_shape: dict[Parts, dict[Bidegree, int]] = {}
        for deg, entries in self.data:
            for p, m in entries:
                by_shape.setdefault(p, {})[deg] = m
        if not by_shape:
            return "0"
        pieces = []
        for p in sorted(by_shape, key=lambda p: [-v for v in p]):
            monos = []
            for (a, b), m in sorted(by_shape[p].items(), key=lambda kv: (kv[0][0] + kv[0][1], -kv[0][0])):
                body = "*".join(s for s in (_power("q", a), _power("t", b)) if s)
                if not body:
                    monos.append(str(m))
                else:
                    monos.append(body if m == 1 else f"{m}*{body}")
            coeff = monos[0] if len(monos) == 1 else "(" + " + ".join(monos) + ")"
            sym = "s(" + ",".join(map(str, p)) + ")"
            pieces.append(sym if coeff == "1" else f"{coeff}*{sym}")
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.render()


def _power(var: str, e: int) -> str:
    return "" if e == 0 else (var if e == 1 else f"{var}^{e}")


def _accumulate(items) -> SchurSeries:
    acc: dict[Bidegree, Counter] = {}
    for deg, parts in items:
        acc.setdefault(deg, Counter())[parts] += 1
    return SchurSeries.from_dict(acc)


def formula_series(kind: str, n: int | None = None, k: int | None = None,
                   mu: Partition | None = None) -> SchurSeries:
    """Series from tableau statistics.

    kinds: ``stembridge`` and ``cc_mu`` (need n, k), ``lusztig_stanley``
    (needs n), ``ls_cocharge`` (needs mu).
    """
    if kind in ("stembridge", "cc_mu"):
        if n is None or k is None or n < 1 or not 1 <= k <= n:
            raise InvalidArgument(f"{kind} needs n >= 1 and 1 <= k <= n")
        items = []
        for T in standard_tableaux(n):
            if kind == "stembridge":
                maj, _ = maj_comaj_range(T, 1, n - k + 1)
                _, comaj = maj_comaj_range(T, n - k + 1, n)
                items.append(((maj, comaj), T.shape.parts))
            else:
                pair = mu_cocharge_tableaux(T, k)
                items.append(((pair.cc_mu, pair.cc_mu_prime), T.shape.parts))
        return _accumulate(items)
    if kind == "lusztig_stanley":
        if n is None or n < 1:
            raise InvalidArgument("lusztig_stanley needs n >= 1")
        return _accumulate(((descent_data(T)[1], 0), T.shape.parts) for T in standard_tableaux(n))
    if kind == "ls_cocharge":
        if mu is None:
            raise InvalidArgument("ls_cocharge needs a content partition")
        items = []
        for lam in enumerate_partitions(mu.n):
            for T in enumerate_fillings(lam, "semistandard-content", mu):
                items.append(((cocharge(reading_word(T)).total, 0), lam.parts))
        return _accumulate(items)
    raise InvalidArgument(f"unknown formula {kind!r}")


def parse_formula(text: str) -> SchurSeries:
    """Parse ``stembridge:3,2``, ``ccmu:3,2``, ``ls:4``, ``lscocharge:2,1,1`` or ``nabla-e3``."""
    name, _, args = text.partition(":")
    name = name.strip().lower().replace("_", "").replace("-", "")
    try:
        nums = [int(a) for a in args.split(",") if a.strip()]
    except ValueError as exc:
        raise InvalidArgument(f"cannot parse formula {text!r}") from exc
    if name in ("stembridge", "ccmu") and len(nums) == 2:
        return formula_series("stembridge" if name == "stembridge" else "cc_mu", nums[0], nums[1])
    if name in ("ls", "lusztigstanley") and len(nums) == 1:
        return formula_series("lusztig_stanley", nums[0])
    if name == "lscocharge" and nums:
        return formula_series("ls_cocharge", mu=Partition(tuple(nums)))
    if name == "nablae3" and not nums:
        return NABLA_E3
    raise InvalidArgument(f"cannot parse formula {text!r}")


def series_hilbert(s: SchurSeries) -> dict[Bidegree, int]:
    out = {}
    for deg, entries in s.data:
        out[deg] = sum(m * count_syt(Partition(p)) for p, m in entries)
    return out


def _class_size(n: int, cycle_type: Parts) -> int:
    z = 1
    for part, mult in Counter(cycle_type).items():
        z *= part ** mult * math.factorial(mult)
    return math.factorial(n) // z


def decompose_character(n: int, values: Mapping[Parts, int | Fraction]) -> dict[Parts, int]:
    """Multiplicities of the irreducibles in a class function (given on every class)."""
    classes, table = characters(n)
    order = math.factorial(n)
    out = {}
    for lam, chi in table.items():
        m = sum((Fraction(_class_size(n, c)) * values[c] * chi_c for c, chi_c in zip(classes, chi)), Fraction(0))
        m /= order
        if m.denominator != 1 or m < 0:
            raise InternalInconsistency(f"multiplicity of {lam} came out as {m}")
        if m:
            out[lam] = int(m)
    return out


def quotient_frobenius(I: IdealSpec, D1: int | None = None, D2: int | None = None) -> SchurSeries:
    """Decompose every nonzero quotient piece into irreducibles via traces."""
    q = quotient(I)
    n = I.n
    classes, _ = characters(n)
    reps = {c: Permutation.of_cycle_type(n, c) for c in classes}
    data = {}
    for a, b in q.support(D1, D2):
        dim = q.dim(a, b)
        if not dim:
            continue
        values = {c: quotient_trace(I, reps[c], a, b) for c in classes}
        mult = decompose_character(n, values)
        if sum(m * count_syt(Partition(p)) for p, m in mult.items()) != dim:
            raise InternalInconsistency(f"piece {(a, b)} of {I.label}: multiplicities disagree with dimension {dim}")
        data[(a, b)] = mult
    return SchurSeries.from_dict(data)


@dataclass
class SeriesComparison:
    equal: bool
    orientation: str | None  # "direct", "swapped" or None
    differences: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"equal": self.equal, "orientation": self.orientation, "differences": self.differences}

    def describe(self) -> str:
        if self.orientation == "direct":
            return "equal"
        if self.orientation == "swapped":
            return "equal after q<->t swap"
        return f"unequal ({len(self.differences)} differing coefficients)"


def _diff(a: SchurSeries, b: SchurSeries) -> list[dict]:
    da, db = a.as_dict(), b.as_dict()
    out = []
    for deg in sorted(set(da) | set(db)):
        ea, eb = da.get(deg, {}), db.get(deg, {})
        for p in sorted(set(ea) | set(eb), key=lambda p: [-v for v in p]):
            if ea.get(p, 0) != eb.get(p, 0):
                out.append({"bidegree": list(deg), "partition": list(p), "a": ea.get(p, 0), "b": eb.get(p, 0)})
    return out


def compare_series(a: SchurSeries, b: SchurSeries, allow_qt_swap: bool = False) -> SeriesComparison:
    diffs = _diff(a, b)
    if not diffs:
        return SeriesComparison(True, "direct")
    if allow_qt_swap and not _diff(a, b.swapped()):
        return SeriesComparison(True, "swapped")
    return SeriesComparison(False, None, diffs)


# s(3) + (q + t + q^2 + qt + t^2) s(2,1) + (qt + q^3 + t^3 + q^2 t + q t^2) s(1,1,1)
NABLA_E3 = SchurSeries.from_dict({
    (0, 0): {(3,): 1},
    (1, 0): {(2, 1): 1}, (0, 1): {(2, 1): 1},
    (2, 0): {(2, 1): 1}, (1, 1): {(2, 1): 1, (1, 1, 1): 1}, (0, 2): {(2, 1): 1},
    (3, 0): {(1, 1, 1): 1}, (0, 3): {(1, 1, 1): 1}, (2, 1): {(1, 1, 1): 1}, (1, 2): {(1, 1, 1): 1},
})
