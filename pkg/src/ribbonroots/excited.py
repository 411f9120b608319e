"""Excited diagrams, Naruse's hook-length formula, and SYT-count oracles."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, product
from math import factorial, prod
from typing import Iterable

from . import kernels
from .errors import DomainError, InternalConsistencyError, ResourceError
from .shapes import Cell, Partition, SkewShape, hook_product, hook_table, weakly_northwest

# value of f^{lambda/mu}; plain ints are already arbitrary precision
SytCount = int

DEFAULT_BUDGET = 20


@dataclass(frozen=True)
class ExcitedDiagram:
    cells: tuple[Cell, ...]
    origin: SkewShape

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(sorted(Cell(*c) for c in self.cells)))

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)

    @property
    def weight(self) -> int:
        return diagram_weight(self, self.origin.outer)

    def first_row_count(self) -> int:
        return sum(1 for c in self.cells if c.row == 1)

    def below_first_row(self) -> tuple[Cell, ...]:
        return tuple(c for c in self.cells if c.row >= 2)

    def format(self) -> str:
        return "[" + ",".join(str(c) for c in self.cells) + "]"


def _check_shape(shape: SkewShape) -> SkewShape:
    if not isinstance(shape, SkewShape):
        raise DomainError(f"expected a SkewShape, got {shape!r}")
    return shape


def enumerate_excited(shape: SkewShape) -> list[ExcitedDiagram]:
    """All excited diagrams of ``shape``; the seed ``D(mu)`` comes first.

    The order is the depth-first discovery order of the kernel and does not
    depend on the backend.
    """
    shape = _check_shape(shape)
    raw = kernels.enumerate_excited(tuple(shape.outer), tuple(shape.inner))
    return [ExcitedDiagram(tuple(Cell(*c) for c in cells), shape) for cells in raw]


def diagram_weight(d: Iterable[Cell], lam: Partition) -> int:
    """Product of hook lengths (in ``lam``) over the cells of ``d``."""
    lam = Partition(lam)
    cells = list(d)
    for c in cells:
        if not lam.has_cell(Cell(*c)):
            raise DomainError(f"cell {Cell(*c)} lies outside {tuple(lam)}")
    return hook_product(lam, cells)


def excitation_sum(shape: SkewShape) -> int:
    """Sum of diagram weights over all excited diagrams."""
    return sum(d.weight for d in enumerate_excited(shape))


def naruse_count(shape: SkewShape) -> SytCount:
    shape = _check_shape(shape)
    numerator = factorial(shape.size) * excitation_sum(shape)
    denominator = prod(h for row in hook_table(shape.outer) for h in row)
    q, r = divmod(numerator, denominator)
    if r:
        raise InternalConsistencyError(
            f"Naruse formula gave a non-integer for {shape}: {numerator}/{denominator}"
        )
    return q


def frt_count(lam: Partition) -> SytCount:
    """Frame-Robinson-Thrall hook-length formula for a straight shape."""
    lam = Partition(lam)
    denominator = prod(h for row in hook_table(lam) for h in row)
    q, r = divmod(factorial(lam.size), denominator)
    if r:
        raise InternalConsistencyError(f"hook-length formula not integral for {tuple(lam)}")
    return q


def brute_force_count(shape: SkewShape, budget: int = DEFAULT_BUDGET) -> SytCount:
    """Count standard fillings directly, independent of any hook formula.

    Raises:
        ResourceError: if the shape has more than ``budget`` cells.
    """
    shape = _check_shape(shape)
    if shape.size > budget:
        raise ResourceError(f"shape {shape} has {shape.size} cells, budget is {budget}")
    return kernels.count_skew_syt(tuple(shape.outer), tuple(shape.inner))


def excitation_move(cells: Iterable[Cell], lam: Partition, c: Cell) -> tuple[Cell, ...] | None:
    """Apply the move ``c -> c + (1, 1)`` if it is legal, else ``None``."""
    occupied = set(Cell(*x) for x in cells)
    c = Cell(*c)
    target = Cell(c.row + 1, c.col + 1)
    if c not in occupied or not Partition(lam).has_cell(target):
        return None
    if {Cell(c.row + 1, c.col), Cell(c.row, c.col + 1), target} & occupied:
        return None
    occupied.discard(c)
    occupied.add(target)
    return tuple(sorted(occupied))


# --- literal definition (test oracle) -------------------------------------

def _by_diagonal(cells: Iterable[Cell]) -> dict[int, list[Cell]]:
    groups = defaultdict(list)
    for c in cells:
        groups[c.content].append(c)
    for k in groups:
        groups[k].sort()
    return groups


def is_excited_diagram(cells: Iterable[Cell], shape: SkewShape) -> bool:
    """Check the bijection-based definition directly.

    On each diagonal the only order-preserving bijection between two chains
    matches them in increasing order, so ``eta`` is forced; it then remains to
    test order preservation on every pair of adjacent diagonals.
    """
    cells = [Cell(*c) for c in cells]
    if len(set(cells)) != len(cells) or not all(shape.outer.has_cell(c) for c in cells):
        return False
    src = _by_diagonal(shape.inner.cells())
    dst = _by_diagonal(cells)
    if {k: len(v) for k, v in src.items()} != {k: len(v) for k, v in dst.items()}:
        return False
    eta = {}
    for k, chain in src.items():
        eta.update(zip(chain, dst[k]))
    for k in src:
        block = src[k] + src.get(k + 1, [])
        for a in block:
            for b in block:
                if weakly_northwest(a, b) and not weakly_northwest(eta[a], eta[b]):
                    return False
    return True


def excited_diagrams_by_definition(shape: SkewShape) -> set[tuple[Cell, ...]]:
    """Every cell set satisfying :func:`is_excited_diagram`, by exhaustive search."""
    src = _by_diagonal(shape.inner.cells())
    targets = _by_diagonal(shape.outer.cells())
    options = [list(combinations(targets.get(k, []), len(chain))) for k, chain in sorted(src.items())]
    found = set()
    for choice in product(*options):
        cells = tuple(sorted(c for group in choice for c in group))
        if is_excited_diagram(cells, shape):
            found.add(cells)
    return found
