import random

import pytest

from ribbonroots.descent import excitation_factor
from ribbonroots.errors import DomainError
from ribbonroots.excited import excitation_sum
from ribbonroots.shapes import Cell, Partition, alpha_vector, hook_product, ribbon_from_descent_set
from ribbonroots.sqci import (
    SliceKind,
    SliceSpec,
    SqciDiagram,
    check_slice_and_push,
    check_slice_without_push,
    check_square_relation,
    normalize_northwest,
    placements,
    push,
    slice_cells,
    sqci_weight,
    young_shape_of,
)
from ribbonroots.suites import descent_sets, random_partition

BLOCK = [Cell(1, 1), Cell(1, 2), Cell(2, 1), Cell(2, 2)]
LAM = Partition((5, 5, 4, 3, 2))


def test_block_weight_and_slice():
    d = SqciDiagram(BLOCK, (), LAM)
    assert sqci_weight(d) == 9120
    v = check_slice_and_push(d, 1)
    assert (v.lhs, v.rhs, v.holds) == (9120, 4560, True)


def test_two_cells_in_43():
    d = SqciDiagram([Cell(1, 1), Cell(1, 2)], (), Partition((4, 3)))
    assert d.weight == 27
    assert len(placements(d)) == 3
    bare = check_slice_without_push(d, 1)
    assert (bare.lhs, bare.rhs, bare.holds) == (27, 28, False)
    # pushed square lands on c_{1,3}, hook 3, next to c_{1,1}'s two placements (5, 2)
    assert check_slice_and_push(d, 1).rhs == 21


def test_no_circles_is_product_of_squares():
    F = (Cell(1, 1), Cell(2, 2), Cell(2, 2))
    d = SqciDiagram((), F, LAM)
    assert d.weight == hook_product(LAM, F) == 9 * 7 * 7


def test_squares_factor_out():
    rng = random.Random(3)
    for _ in range(50):
        F = tuple(rng.choice(LAM.cells()) for _ in range(rng.randint(1, 3)))
        with_f = SqciDiagram(BLOCK, F, LAM)
        bare = SqciDiagram(BLOCK, (), LAM)
        assert with_f.weight == bare.weight * hook_product(LAM, F)


def test_invariants_enforced():
    with pytest.raises(DomainError):
        SqciDiagram([Cell(2, 2)], (), Partition((3, 2)))  # c_{3,3} missing
    with pytest.raises(DomainError):
        SqciDiagram((), [Cell(4, 1)], Partition((3, 2)))


def test_slices():
    assert slice_cells(BLOCK, SliceSpec(SliceKind.LEFT, 1)) == {Cell(1, 1), Cell(2, 1)}
    assert slice_cells(BLOCK, SliceSpec("left-of-column", 0)) == frozenset()
    assert slice_cells(BLOCK, SliceSpec(SliceKind.BELOW, 1)) == {Cell(2, 1), Cell(2, 2)}
    assert slice_cells(BLOCK, SliceSpec(SliceKind.TOP, 1)) == {Cell(1, 1), Cell(1, 2)}
    for k in range(4):
        left = slice_cells(BLOCK, SliceSpec(SliceKind.LEFT, k))
        right = slice_cells(BLOCK, SliceSpec(SliceKind.RIGHT, k))
        assert left | right == set(BLOCK) and not left & right
    with pytest.raises(DomainError):
        SliceSpec(SliceKind.LEFT, -1)


def test_push():
    assert sorted(push([Cell(1, 2), Cell(2, 2)], "right")) == [Cell(1, 3), Cell(2, 3)]
    assert push([], "right") == []
    assert push([Cell(1, 1)], "southeast") == [Cell(2, 2)]
    with pytest.raises(DomainError):
        push([Cell(1, 1)], "up")


def test_normalize():
    assert normalize_northwest([Cell(2, 3), Cell(2, 4), Cell(3, 3)]) == {Cell(1, 1), Cell(1, 2), Cell(2, 1)}
    assert normalize_northwest([Cell(4, 7)]) == {Cell(1, 1)}
    with pytest.raises(DomainError):
        normalize_northwest([])
    assert young_shape_of([Cell(1, 1), Cell(2, 2)]) is None
    assert young_shape_of([Cell(1, 1), Cell(1, 2), Cell(2, 1)]) == (2, 1)


def test_slice_past_last_column_is_identity():
    d = SqciDiagram(BLOCK, (), LAM)
    v = check_slice_and_push(d, 5)
    assert v.lhs == v.rhs


def test_slice_needs_young_translate():
    d = SqciDiagram([Cell(1, 1), Cell(2, 2)], (), LAM)
    with pytest.raises(DomainError):
        check_slice_and_push(d, 1)


def test_square_relation_examples():
    corners = [Cell(1, 1), Cell(2, 1), Cell(1, 2), Cell(2, 2)]
    assert check_square_relation([], Partition((3, 3, 3)), corners)
    assert check_square_relation([Cell(1, 3), Cell(1, 3)], Partition((3, 3, 3)), corners)
    with pytest.raises(DomainError):
        check_square_relation([], Partition((3, 3, 3)), [Cell(1, 1), Cell(4, 1), Cell(1, 2), Cell(4, 2)])
    with pytest.raises(DomainError):
        check_square_relation([], Partition((3, 3, 3)), [Cell(1, 1), Cell(2, 2), Cell(1, 2), Cell(2, 1)])


def test_square_relation_random():
    rng = random.Random(11)
    for _ in range(1000):
        lam = random_partition(rng, 5, 6)
        if not lam:
            continue
        cells = lam.cells()
        a, b = rng.choice(cells), rng.choice(cells)
        i, i2 = sorted((a.row, b.row))
        j, j2 = sorted((a.col, b.col))
        if not lam.has_cell(Cell(i2, j2)):
            continue
        F = [rng.choice(cells) for _ in range(rng.randint(0, 3))]
        assert check_square_relation(F, lam, [Cell(i, j), Cell(i2, j), Cell(i, j2), Cell(i2, j2)])


def test_inner_diagram_weight_is_excitation_factor_at_one():
    for I in descent_sets(7):
        shape = ribbon_from_descent_set(I)
        d = SqciDiagram(tuple(shape.inner.cells()), (), shape.outer)
        nf = excitation_factor(shape)
        assert d.weight == nf.evaluate(1) == excitation_sum(shape)
        assert nf.alphas == alpha_vector(shape.outer)[:nf.s]
