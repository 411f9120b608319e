import pytest
from hypothesis import given, settings, strategies as st

from ribbonroots import _pykernels, kernels
from ribbonroots.shapes import Cell, Partition, hook_table

pytestmark = pytest.mark.skipif(kernels.compiled_backend is None, reason="compiled kernels not built")
C = kernels.compiled_backend


@st.composite
def shapes(draw, max_cells=14):
    lam = Partition(sorted(draw(st.lists(st.integers(1, 5), min_size=1, max_size=5)), reverse=True))
    mu = []
    for i, part in enumerate(lam):
        cap = part if i == 0 else min(part, mu[-1])
        mu.append(draw(st.integers(0, cap)))
    return tuple(lam), tuple(Partition(mu))


@settings(max_examples=80, deadline=None)
@given(shapes())
def test_excited_same_order(shape):
    lam, mu = shape
    assert C.enumerate_excited(lam, mu) == _pykernels.enumerate_excited(lam, mu)


@settings(max_examples=80, deadline=None)
@given(shapes())
def test_syt_counts_agree(shape):
    lam, mu = shape
    assert C.count_skew_syt(lam, mu) == _pykernels.count_skew_syt(lam, mu)


@settings(max_examples=60, deadline=None)
@given(shapes())
def test_placements_agree(shape):
    lam, mu = shape
    circles = [(r, c) for r, c in Partition(mu).cells() if Partition(lam).has_cell(Cell(r + 1, c + 1))]
    assert C.sqci_placements(circles) == _pykernels.sqci_placements(circles)
    table = hook_table(Partition(lam))
    assert C.sqci_weight(circles, table) == _pykernels.sqci_weight(circles, table)


@pytest.mark.parametrize("n", [1, 2, 5, 7])
def test_histograms_agree(n):
    hist = C.descent_histogram(n)
    assert hist == _pykernels.descent_histogram(n)
    assert sum(hist) == [1, 1, 2, 6, 24, 120, 720, 5040][n]


def test_large_inputs_fall_back():
    # 21 cells: beyond the 64-bit-safe compiled path for counting
    assert C.count_skew_syt((7, 7, 7), ()) == _pykernels.count_skew_syt((7, 7, 7), ())


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
