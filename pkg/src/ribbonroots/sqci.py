"""Circle/square diagrams, their weights, and the slice/push operators.

A diagram ``(D; F)`` lives on the Young diagram of a partition. Circles ``D``
may each move at most one step southeast; squares ``F`` (a multiset) stay put.
The weight sums hook products over every admissible circle placement, times
the hook product of the squares.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from . import kernels
from .errors import DomainError
from .shapes import Cell, Partition, hook_product, hook_table


def _cells(cells: Iterable) -> list[Cell]:
    return [Cell(*c) for c in cells]


@dataclass(frozen=True)
class SqciDiagram:
    circles: tuple[Cell, ...]
    squares: tuple[Cell, ...]
    ambient: Partition

    def __post_init__(self):
        lam = Partition(self.ambient)
        circles = tuple(sorted(set(_cells(self.circles))))
        squares = tuple(sorted(_cells(self.squares)))
        for c in circles:
            if not lam.has_cell(Cell(c.row + 1, c.col + 1)):
                raise DomainError(f"circle {c}: cell {c.row + 1}:{c.col + 1} is not in {tuple(lam)}")
        for c in squares:
            if not lam.has_cell(c):
                raise DomainError(f"square {c} is not in {tuple(lam)}")
        object.__setattr__(self, "ambient", lam)
        object.__setattr__(self, "circles", circles)
        object.__setattr__(self, "squares", squares)

    @property
    def weight(self) -> int:
        return sqci_weight(self)


def placements(d: SqciDiagram) -> list[tuple[Cell, ...]]:
    """Admissible images ``D'`` of the circles, sorted."""
    return [tuple(Cell(*c) for c in p) for p in kernels.sqci_placements(d.circles)]


def sqci_weight(d: SqciDiagram) -> int:
    circle_sum = kernels.sqci_weight(d.circles, hook_table(d.ambient))
    return circle_sum * hook_product(d.ambient, d.squares)


class SliceKind(Enum):
    LEFT = "left-of-column"
    RIGHT = "right-of-column"
    TOP = "top-rows"
    BELOW = "below-rows"


@dataclass(frozen=True)
class SliceSpec:
    kind: SliceKind
    index: int

    def __post_init__(self):
        object.__setattr__(self, "kind", SliceKind(self.kind))
        if self.index < 0:
            raise DomainError(f"slice index must be nonnegative, got {self.index}")


def slice_cells(d: Iterable[Cell], spec: SliceSpec) -> frozenset[Cell]:
    """Cut a cell set with a vertical or horizontal knife.

    ``LEFT, k`` keeps the first ``k`` columns and ``RIGHT, k`` drops them;
    ``TOP, i`` keeps the first ``i`` rows and ``BELOW, i`` drops them.
    """
    k = spec.index
    keep = {
        SliceKind.LEFT: lambda c: c.col <= k,
        SliceKind.RIGHT: lambda c: c.col > k,
        SliceKind.TOP: lambda c: c.row <= k,
        SliceKind.BELOW: lambda c: c.row > k,
    }[spec.kind]
    return frozenset(c for c in _cells(d) if keep(c))


def push(d: Iterable[Cell], direction: str) -> list[Cell]:
    """Shift every cell one step ``"right"`` or ``"southeast"``. Multiplicities are kept."""
    if direction == "right":
        return [Cell(c.row, c.col + 1) for c in _cells(d)]
    if direction == "southeast":
        return [Cell(c.row + 1, c.col + 1) for c in _cells(d)]
    raise DomainError(f"unknown push direction {direction!r}")


def normalize_northwest(d: Iterable[Cell]) -> frozenset[Cell]:
    cells = _cells(d)
    if not cells:
        raise DomainError("cannot normalize an empty diagram")
    r0 = min(c.row for c in cells)
    c0 = min(c.col for c in cells)
    return frozenset(Cell(c.row - r0 + 1, c.col - c0 + 1) for c in cells)


def young_shape_of(cells: Iterable[Cell]) -> Partition | None:
    """The partition whose diagram is exactly ``cells``, or ``None``."""
    cells = set(_cells(cells))
    rows = {}
    for c in cells:
        rows[c.row] = rows.get(c.row, 0) + 1
    if not rows:
        return Partition()
    if sorted(rows) != list(range(1, len(rows) + 1)):
        return None
    parts = [rows[i] for i in range(1, len(rows) + 1)]
    try:
        lam = Partition(parts)
    except DomainError:
        return None
    return lam if set(lam.cells()) == cells else None


@dataclass(frozen=True)
class SlicePushVerdict:
    lhs: int
    rhs: int
    holds: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "holds", self.lhs >= self.rhs)


def _sliced_diagrams(d: SqciDiagram, k: int, pushed: bool) -> SqciDiagram:
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    mu = young_shape_of(normalize_northwest(d.circles)) if d.circles else None
    if not mu:
        raise DomainError("circles must be a translate of a nonempty Young diagram")
    left = slice_cells(d.circles, SliceSpec(SliceKind.LEFT, k))
    right = slice_cells(d.circles, SliceSpec(SliceKind.RIGHT, k))
    moved = push(right, "right") if pushed else list(right)
    for c in moved:
        if not d.ambient.has_cell(c):
            raise DomainError(f"pushed square {c} leaves the diagram of {tuple(d.ambient)}")
    return SqciDiagram(tuple(left), d.squares + tuple(moved), d.ambient)


def check_slice_and_push(d: SqciDiagram, k: int) -> SlicePushVerdict:
    """Compare ``wt(D; F)`` with ``wt(D|_k; F + (|_k D)->)``."""
    return SlicePushVerdict(sqci_weight(d), sqci_weight(_sliced_diagrams(d, k, pushed=True)))


def check_slice_without_push(d: SqciDiagram, k: int) -> SlicePushVerdict:
    """Same comparison but with the right part kept in place (fails in general)."""
    return SlicePushVerdict(sqci_weight(d), sqci_weight(_sliced_diagrams(d, k, pushed=False)))


def multiset_weight(F: Iterable[Cell], lam: Partition) -> int:
    return hook_product(Partition(lam), _cells(F))


def check_square_relation(F: Iterable[Cell], lam: Partition, corners) -> bool:
    """Check the four-corner hook identity on ``F`` plus one corner at a time.

    ``corners`` lists ``c_{i,j}, c_{i',j}, c_{i,j'}, c_{i',j'}`` in that order.
    """
    lam = Partition(lam)
    a, b, c, d = _cells(corners)
    if not (a.row == c.row and b.row == d.row and a.col == b.col and c.col == d.col):
        raise DomainError(f"corners {a}, {b}, {c}, {d} do not form a rectangle")
    for x in (a, b, c, d):
        if not lam.has_cell(x):
            raise DomainError(f"corner {x} is outside {tuple(lam)}")
    F = _cells(F)
    w = lambda extra: multiset_weight(F + [extra], lam)  # noqa: E731
    return w(a) + w(d) == w(c) + w(b)


def circle_translates(mu: Partition, lam: Partition) -> list[tuple[Cell, ...]]:
    """Every translate of ``D(mu)`` that is a legal circle set inside ``D(lam)``."""
    mu, lam = Partition(mu), Partition(lam)
    base = mu.cells()
    out = []
    for dr in range(len(lam)):
        for dc in range(lam.part(1) if lam else 0):
            cells = tuple(Cell(c.row + dr, c.col + dc) for c in base)
            if all(lam.has_cell(Cell(c.row + 1, c.col + 1)) for c in cells):
                out.append(cells)
    return out
