"""Partitions, skew shapes, hooks, and the ribbon attached to a descent set.

All cell coordinates are 1-based: ``Cell(1, 1)`` is the top-left corner and
rows grow downward.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Iterable, NamedTuple

from .errors import DomainError


class Cell(NamedTuple):
    row: int
    col: int

    @property
    def content(self) -> int:
        """Diagonal index ``col - row`` (may be negative)."""
        return self.col - self.row

    def __str__(self):
        return f"{self.row}:{self.col}"


def weakly_northwest(a: Cell, b: Cell) -> bool:
    """Partial order on cells: ``a <= b`` iff ``a`` is weakly north and weakly west of ``b``."""
    return a.row <= b.row and a.col <= b.col


def parse_cell(text: str) -> Cell:
    try:
        r, c = text.strip().split(":")
        cell = Cell(int(r), int(c))
    except ValueError as exc:
        raise DomainError(f"malformed cell {text!r}; expected row:col") from exc
    if cell.row < 1 or cell.col < 1:
        raise DomainError(f"cell {text!r} is not 1-based")
    return cell


def parse_cells(text: str) -> list[Cell]:
    """Parse ``"1:1,1:2,2:1"`` into cells. Empty text gives an empty list."""
    text = text.strip()
    if not text:
        return []
    return [parse_cell(piece) for piece in text.split(",")]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so the empty tuple is the only
    partition of zero and equality is structural.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise DomainError(f"parts must be weakly decreasing: {parts}")
        if any(p < 0 for p in parts):
            raise DomainError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition{tuple(self)!r}"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (1-based), zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> Partition:
        return conjugate(self)

    def has_cell(self, cell: Cell) -> bool:
        return cell.row >= 1 and cell.col >= 1 and cell.col <= self.part(cell.row)

    def cells(self) -> list[Cell]:
        """Cells of the Young diagram in row-major order."""
        return [Cell(i, j) for i, length in enumerate(self, 1) for j in range(1, length + 1)]

    def contains(self, other: Partition) -> bool:
        """True when ``other`` fits inside ``self`` componentwise."""
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))


def conjugate(p: Iterable[int]) -> Partition:
    p = Partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for part in p if part >= j) for j in range(1, p[0] + 1))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise DomainError(f"inner {tuple(self.inner)} is not contained in outer {tuple(self.outer)}")

    def __str__(self):
        return f"{tuple(self.outer)}/{tuple(self.inner)}"

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> list[Cell]:
        """Unshaded cells (those of outer not in inner), row-major."""
        return [
            Cell(i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)
        ]

    def nonempty_rows(self) -> list[int]:
        return [i for i in range(1, len(self.outer) + 1) if self.outer.part(i) > self.inner.part(i)]

    def is_connected(self) -> bool:
        rows = self.nonempty_rows()
        if not rows:
            return False
        if rows != list(range(rows[0], rows[-1] + 1)):
            return False
        return all(self.inner.part(i) < self.outer.part(i + 1) for i in rows[:-1])

    def is_ribbon(self) -> bool:
        if not self.is_connected():
            return False
        rows = self.nonempty_rows()
        return all(self.outer.part(i + 1) - self.inner.part(i) == 1 for i in rows[:-1])

    def to_json(self) -> str:
        return json.dumps({"outer": list(self.outer), "inner": list(self.inner)})

    @classmethod
    def from_json(cls, text: str | dict) -> SkewShape:
        data = json.loads(text) if isinstance(text, str) else text
        try:
            return cls(Partition(data["outer"]), Partition(data.get("inner", [])))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed shape JSON: {text!r}") from exc


@dataclass(frozen=True)
class DescentSet:
    elements: tuple[int, ...] = ()

    def __post_init__(self):
        elems = tuple(sorted(set(int(e) for e in self.elements)))
        if any(e < 1 for e in elems):
            raise DomainError(f"descent positions must be positive: {elems}")
        object.__setattr__(self, "elements", elems)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __str__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"

    @property
    def m(self) -> int:
        """``max(I ∪ {0})``, the degree of the descent polynomial."""
        return self.elements[-1] if self.elements else 0

    @classmethod
    def parse(cls, text: str) -> DescentSet:
        """Parse ``"3,5"``; the empty string is the empty set."""
        text = text.strip().strip("{}[]")
        if not text:
            return cls(())
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError as exc:
            raise DomainError(f"malformed descent set {text!r}") from exc

    def to_json(self) -> str:
        return json.dumps(list(self.elements))


def as_descent_set(I) -> DescentSet:
    if isinstance(I, DescentSet):
        return I
    if isinstance(I, str):
        return DescentSet.parse(I)
    return DescentSet(tuple(I))


@lru_cache(maxsize=4096)
def hook_table(lam: Partition) -> tuple[tuple[int, ...], ...]:
    """Hook lengths of every cell, ``table[i-1][j-1] = h(c_{i,j})``."""
    lam = Partition(lam)
    conj = conjugate(lam)
    return tuple(
        tuple((lam[i - 1] - j) + (conj[j - 1] - i) + 1 for j in range(1, lam[i - 1] + 1))
        for i in range(1, len(lam) + 1)
    )


def hook_length(lam: Partition, c: Cell) -> int:
    lam = Partition(lam)
    c = Cell(*c)
    if not lam.has_cell(c):
        raise DomainError(f"cell {c} is outside the diagram of {tuple(lam)}")
    return hook_table(lam)[c.row - 1][c.col - 1]


def hook_multiset_below_first_row(lam: Partition) -> list[int]:
    """Hooks of all cells in rows 2, 3, ..., listed row-major."""
    return [h for row in hook_table(Partition(lam))[1:] for h in row]


def hook_product(lam: Partition, cells: Iterable[Cell]) -> int:
    table = hook_table(Partition(lam))
    return prod(table[c[0] - 1][c[1] - 1] for c in cells)


def alpha_vector(lam: Partition) -> tuple[int, ...]:
    """First-row hooks minus one: ``alpha_i = h(c_{1,i}) - 1`` for ``i = 1..lam_1``."""
    lam = Partition(lam)
    if not lam:
        raise DomainError("alpha vector of the empty partition is undefined")
    return tuple(h - 1 for h in hook_table(lam)[0])


def extend_first_row(lam: Partition, t: int) -> Partition:
    lam = Partition(lam)
    if t < 1:
        raise DomainError(f"t must be a positive integer, got {t}")
    if not lam:
        raise DomainError("cannot extend the first row of the empty partition")
    return Partition((lam[0] + t - 1,) + tuple(lam[1:]))


def ribbon_from_descent_set(I) -> SkewShape:
    """Minimal ribbon of size ``m + 1`` whose standard fillings realize descent set ``I``.

    Row lengths read bottom-to-top are the composition
    ``(i_1, i_2 - i_1, ..., m + 1 - i_k)``; consecutive rows share exactly one
    column. Reading a filling from the bottom-left cell to the top-right cell,
    position ``i`` is a descent exactly when cell ``i + 1`` sits above cell ``i``.
    """
    I = as_descent_set(I)
    cuts = (0,) + I.elements + (I.m + 1,)
    composition = [b - a for a, b in zip(cuts, cuts[1:])]
    nrows = len(composition)
    outer = [0] * nrows
    inner = [0] * nrows
    start = 1
    for k, length in enumerate(composition):
        row = nrows - k  # bottom row first
        inner[row - 1] = start - 1
        outer[row - 1] = start + length - 1
        start = start + length - 1
    return SkewShape(Partition(outer), Partition(inner))


def ribbon_reading_order(shape: SkewShape) -> list[Cell]:
    """Cells of a ribbon from the bottom-left end to the top-right end."""
    if not shape.is_ribbon():
        raise DomainError(f"{shape} is not a ribbon")
    order = []
    for i in reversed(shape.nonempty_rows()):
        order.extend(Cell(i, j) for j in range(shape.inner.part(i) + 1, shape.outer.part(i) + 1))
    return order


def descent_set_of_ribbon(shape: SkewShape) -> DescentSet:
    """Inverse of :func:`ribbon_from_descent_set` (up to translation of the ribbon)."""
    order = ribbon_reading_order(shape)
    return DescentSet(tuple(i for i in range(1, len(order)) if order[i].row < order[i - 1].row))
