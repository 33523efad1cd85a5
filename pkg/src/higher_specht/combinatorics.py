"""Partitions, tableaux, words and the tableau statistics built on them.

Diagrams use the French convention: row 1 is the bottom row and rows grow
upward.  Reading order visits the top row first, each row left to right;
this is the canonical cell order for every exponent list in the package.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidArgument

Word = tuple[int, ...]


class Cell(NamedTuple):
    row: int  # 1-based from the bottom
    col: int  # 1-based from the left


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise InvalidArgument("a partition needs at least one part")
        if any(p <= 0 for p in parts):
            raise InvalidArgument(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidArgument(f"parts must be weakly decreasing: {parts}")

    @classmethod
    def hook(cls, n: int, k: int) -> "Partition":
        """The hook (n-k+1, 1^(k-1)) of height k."""
        if not 1 <= k <= n:
            raise InvalidArgument(f"hook height k={k} out of range for n={n}")
        return cls((n - k + 1,) + (1,) * (k - 1))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        cleaned = text.strip().strip("()[]")
        try:
            return cls(tuple(int(p) for p in cleaned.replace(" ", ",").split(",") if p))
        except ValueError as exc:
            raise InvalidArgument(f"cannot parse partition {text!r}") from exc

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def column_length(self, col: int) -> int:
        return sum(1 for p in self.parts if p >= col)

    def cells(self) -> list[Cell]:
        """Cells in reading order (top row first, left to right)."""
        return [Cell(r, c) for r in range(len(self.parts), 0, -1) for c in range(1, self.parts[r - 1] + 1)]

    def __contains__(self, cell) -> bool:
        r, c = cell
        return 1 <= r <= len(self.parts) and 1 <= c <= self.parts[r - 1]

    def key(self) -> str:
        return ",".join(map(str, self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return [Partition(p) for p in gen(n, n)]


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram, stored as rows from bottom to top."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or any(not row for row in rows):
            raise InvalidArgument("tableau rows must be nonempty")
        Partition(tuple(len(r) for r in rows))  # validates the shape

    # construction -----------------------------------------------------
    @classmethod
    def from_cells(cls, shape: Partition, values: dict) -> "Tableau":
        return cls(tuple(tuple(values[Cell(r, c)] for c in range(1, shape.parts[r - 1] + 1))
                         for r in range(1, len(shape) + 1)))

    @classmethod
    def from_reading_word(cls, shape: Partition, word: Sequence[int]) -> "Tableau":
        cells = shape.cells()
        if len(word) != len(cells):
            raise InvalidArgument("word length does not match the shape")
        return cls.from_cells(shape, dict(zip(cells, word)))

    @classmethod
    def parse(cls, text: str) -> "Tableau":
        """Parse ``"1 2 4 / 3 5 / 6 7"`` (rows bottom to top)."""
        try:
            rows = tuple(tuple(int(v) for v in chunk.split()) for chunk in text.split("/"))
        except ValueError as exc:
            raise InvalidArgument(f"cannot parse tableau {text!r}") from exc
        return cls(rows)

    @classmethod
    def from_json(cls, obj) -> "Tableau":
        T = cls(tuple(tuple(r) for r in obj["rows"]))
        if "shape" in obj and list(T.shape.parts) != list(obj["shape"]):
            raise InvalidArgument("declared shape does not match rows")
        return T

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows]}

    def literal(self) -> str:
        return " / ".join(" ".join(map(str, r)) for r in self.rows)

    def __str__(self) -> str:
        return self.literal()

    # structure --------------------------------------------------------
    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def __getitem__(self, cell) -> int:
        r, c = cell
        return self.rows[r - 1][c - 1]

    def cells(self) -> list[Cell]:
        return self.shape.cells()

    def entries(self) -> list[int]:
        """Entries in reading order."""
        return [v for row in reversed(self.rows) for v in row]

    def columns(self) -> list[tuple[int, ...]]:
        """Columns left to right, each listed bottom to top."""
        return [tuple(row[c] for row in self.rows if len(row) > c) for c in range(len(self.rows[0]))]

    def positions(self) -> dict[int, Cell]:
        if not self.is_bijective():
            raise InvalidArgument("positions are defined only for bijective fillings")
        return {self.rows[r][c]: Cell(r + 1, c + 1) for r in range(len(self.rows)) for c in range(len(self.rows[r]))}

    def relabel(self, images: Sequence[int]) -> "Tableau":
        """Apply a permutation (1-based image list) to every entry."""
        return Tableau(tuple(tuple(images[v - 1] for v in row) for row in self.rows))

    # classification ---------------------------------------------------
    def is_bijective(self) -> bool:
        return sorted(self.entries()) == list(range(1, self.n + 1))

    def is_semistandard(self) -> bool:
        rows = self.rows
        if any(v <= 0 for row in rows for v in row):
            return False
        if any(a > b for row in rows for a, b in zip(row, row[1:])):
            return False
        return all(rows[r][c] < rows[r + 1][c] for r in range(len(rows) - 1) for c in range(len(rows[r + 1])))

    def is_standard(self) -> bool:
        return self.is_bijective() and self.is_semistandard()

    @property
    def kind(self) -> str:
        if self.is_standard():
            return "standard"
        if self.is_semistandard():
            return "semistandard"
        if self.is_bijective():
            return "general-bijective"
        return "arbitrary"


def _require_standard(T: Tableau) -> None:
    if not T.is_standard():
        raise InvalidArgument(f"expected a standard tableau, got {T.literal()!r}")


@lru_cache(maxsize=None)
def _syt(parts: tuple[int, ...]) -> tuple[Tableau, ...]:
    n = sum(parts)
    if n == 1:
        return (Tableau(((1,),)),)
    out = []
    # n sits in a removable corner
    for r, length in enumerate(parts):
        if r + 1 < len(parts) and parts[r + 1] == length:
            continue
        smaller = list(parts)
        smaller[r] -= 1
        if smaller[r] == 0:
            smaller.pop(r)
        for T in _syt(tuple(smaller)):
            rows = [list(row) for row in T.rows]
            if r == len(rows):
                rows.append([n])
            else:
                rows[r].append(n)
            out.append(Tableau(tuple(tuple(row) for row in rows)))
    out.sort(key=lambda T: T.entries())
    return tuple(out)


def _multiset_permutations(items: Sequence[int]):
    counts: dict[int, int] = {}
    for v in items:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts)
    total = len(items)
    prefix: list[int] = []

    def rec():
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for v in keys:
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                yield from rec()
                prefix.pop()
                counts[v] += 1

    yield from rec()


def enumerate_fillings(shape: Partition, kind: str = "standard",
                       content: Partition | None = None) -> list[Tableau]:
    """Enumerate fillings of ``shape``; the result is sorted by reading word.

    ``kind`` is one of ``"standard"``, ``"general-bijective"`` or
    ``"semistandard-content"`` (the latter needs ``content``).
    """
    if kind == "standard":
        return list(_syt(shape.parts))
    if kind == "general-bijective":
        return [Tableau.from_reading_word(shape, w) for w in itertools.permutations(range(1, shape.n + 1))]
    if kind == "semistandard-content":
        if content is None or content.n != shape.n:
            raise InvalidArgument("semistandard-content needs a content partition of the same size")
        letters = [i + 1 for i, m in enumerate(content.parts) for _ in range(m)]
        found = (Tableau.from_reading_word(shape, w) for w in _multiset_permutations(letters))
        return [T for T in found if T.is_semistandard()]
    raise InvalidArgument(f"unknown filling kind {kind!r}")


def standard_tableaux(n: int) -> list[Tableau]:
    """SYT of every shape of size n, shapes in reverse lexicographic order."""
    return [T for lam in enumerate_partitions(n) for T in _syt(lam.parts)]


def count_syt(shape: Partition) -> int:
    return len(_syt(shape.parts))


def reading_word(T: Tableau) -> Word:
    return tuple(T.entries())


def standardize(T: Tableau) -> Tableau:
    if not T.is_semistandard():
        raise InvalidArgument("standardization needs a semistandard tableau")
    cells = T.cells()
    order = sorted(range(len(cells)), key=lambda i: (T[cells[i]], i))
    values = {cells[i]: rank + 1 for rank, i in enumerate(order)}
    return Tableau.from_cells(T.shape, values)


def rsk_insert(word: Sequence[int]) -> Tableau:
    """RSK insertion tableau of a word (row bumping, bottom row first)."""
    if len(word) == 0:
        raise InvalidArgument("cannot insert an empty word")
    rows: list[list[int]] = []
    for letter in word:
        a = letter
        for row in rows:
            i = bisect.bisect_right(row, a)
            if i == len(row):
                row.append(a)
                break
            row[i], a = a, row[i]
        else:
            rows.append([a])
    return Tableau(tuple(tuple(r) for r in rows))


def descent_data(T: Tableau) -> tuple[frozenset[int], int, int]:
    """(Des(T), maj(T), des(T)) for a standard tableau."""
    _require_standard(T)
    pos = T.positions()
    des = frozenset(i for i in range(1, T.n) if pos[i + 1].col <= pos[i].col)
    return des, sum(des), len(des)


def maj_comaj_range(T: Tableau, i: int, j: int) -> tuple[int, int]:
    """maj_{i,j} and comaj_{i,j}: sums of d and of n-d over descents i <= d < j."""
    n = T.n
    if not 1 <= i <= j <= n:
        raise InvalidArgument(f"need 1 <= i <= j <= n, got i={i}, j={j}, n={n}")
    des, _, _ = descent_data(T)
    chosen = [d for d in des if i <= d < j]
    return sum(chosen), sum(n - d for d in chosen)


@dataclass(frozen=True)
class CochargeLabeling:
    labels: tuple[int, ...]
    subword_ids: tuple[int, ...]
    total: int


def _check_word(word: Sequence[int]) -> Word:
    w = tuple(int(v) for v in word)
    if not w:
        raise InvalidArgument("empty word")
    if min(w) < 1:
        raise InvalidArgument("letters must be positive")
    return w


def _is_permutation(w: Word) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def cocharge(word: Sequence[int]) -> CochargeLabeling:
    """Cocharge labels of a word with partition content.

    Subwords are extracted right to left with cyclic wrapping; inside each
    subword the label goes up by one exactly when letter i+1 sits to the
    left of letter i (the leftward search did not wrap).
    """
    w = _check_word(word)
    top = max(w)
    counts = [w.count(v) for v in range(1, top + 1)]
    if any(c == 0 for c in counts) or any(a < b for a, b in zip(counts, counts[1:])):
        raise InvalidArgument(f"cocharge needs partition content, got content {tuple(counts)}")

    length = len(w)
    remaining = set(range(length))
    labels = [0] * length
    ids = [0] * length
    sid = 0
    while remaining:
        sid += 1
        biggest = max(w[p] for p in remaining)
        chosen = []
        cursor = length
        for letter in range(1, biggest + 1):
            for step in range(1, length + 1):
                p = (cursor - step) % length
                if p in remaining and w[p] == letter:
                    break
            chosen.append(p)
            cursor = p
        label = 0
        for idx, p in enumerate(chosen):
            if idx and p < chosen[idx - 1]:
                label += 1
            labels[p] = label
            ids[p] = sid
            remaining.discard(p)
    return CochargeLabeling(tuple(labels), tuple(ids), sum(labels))


def word_transform(word: Sequence[int], op: str) -> Word:
    w = _check_word(word)
    if op == "flip":
        if not _is_permutation(w):
            raise InvalidArgument("flip is defined on permutations only")
        return tuple(len(w) + 1 - v for v in w)
    if op == "rev":
        return w[::-1]
    raise InvalidArgument(f"unknown word transform {op!r}")


def phi(T: Tableau) -> Tableau:
    """RSK insertion of rev(flip(reading word)); sends maj to cocharge."""
    _require_standard(T)
    return rsk_insert(word_transform(word_transform(reading_word(T), "flip"), "rev"))


@dataclass(frozen=True)
class MuCochargePair:
    """Hook cocharge labelings, stored as label rows aligned with the shape."""

    cc_tab: tuple[tuple[int, ...], ...]
    cc_tab_prime: tuple[tuple[int, ...], ...]
    cc_mu: int
    cc_mu_prime: int

    def x_exponents(self) -> list[int]:
        """ccTab_mu values in reading order."""
        return [v for row in reversed(self.cc_tab) for v in row]

    def y_exponents(self) -> list[int]:
        return [v for row in reversed(self.cc_tab_prime) for v in row]

    def label(self, cell: Cell) -> tuple[int, int]:
        return self.cc_tab[cell.row - 1][cell.col - 1], self.cc_tab_prime[cell.row - 1][cell.col - 1]


def mu_cocharge_tableaux(S: Tableau, k: int) -> MuCochargePair:
    _require_standard(S)
    n = S.n
    if not 1 <= k <= n:
        raise InvalidArgument(f"k={k} out of range for n={n}")
    word = reading_word(S)
    where = {v: i for i, v in enumerate(word)}
    start = n - k + 1

    forward = {v: 0 for v in range(1, n + 1)}
    label = 0
    for v in range(start + 1, n + 1):
        if where[v] < where[v - 1]:
            label += 1
        forward[v] = label

    backward = {v: 0 for v in range(1, n + 1)}
    label = 0
    for v in range(start - 1, 0, -1):
        if where[v] > where[v + 1]:
            label += 1
        backward[v] = label

    cc = tuple(tuple(forward[v] for v in row) for row in S.rows)
    ccp = tuple(tuple(backward[v] for v in row) for row in S.rows)
    return MuCochargePair(cc, ccp, sum(forward.values()), sum(backward.values()))


def ordinary_cocharge_rows(S: Tableau) -> tuple[tuple[int, ...], ...]:
    """ccTab(S): cocharge labels of the reading word placed in their cells."""
    _require_standard(S)
    lab = cocharge(reading_word(S)).labels
    by_value = dict(zip(reading_word(S), lab))
    return tuple(tuple(by_value[v] for v in row) for row in S.rows)


def syt_pairs(n: int) -> Iterable[tuple[Tableau, Tableau]]:
    """All (T, S) with T, S standard of a common shape; n! pairs."""
    for lam in enumerate_partitions(n):
        tabs = _syt(lam.parts)
        for S in tabs:
            for T in tabs:
                yield T, S
