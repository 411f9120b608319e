"""Pure-Python implementations of the enumeration kernels.

These are the reference versions; ``_ckernels.pyx`` implements the same
algorithms with identical output ordering. Cells are plain ``(row, col)``
tuples, 1-based.
"""
from collections import defaultdict
from itertools import permutations, product


def descent_histogram(n):
    """Count permutations of ``n`` letters by descent set.

    Entry ``mask`` of the result counts permutations whose descent set is
    ``{i : bit i-1 of mask is set}``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    hist = [0] * (1 << (n - 1))
    bits = [1 << i for i in range(n - 1)]
    for perm in permutations(range(n)):
        mask = 0
        for bit, a, b in zip(bits, perm, perm[1:]):
            if a > b:
                mask |= bit
        hist[mask] += 1
    return hist


def count_skew_syt(outer, inner):
    """Number of standard fillings of ``outer/inner`` by forward DP on row-length states."""
    outer = tuple(outer)
    rows = len(outer)
    state = tuple(inner) + (0,) * (rows - len(inner))
    n = sum(outer) - sum(inner)
    level = {state: 1}
    for _ in range(n):
        nxt = defaultdict(int)
        for st, cnt in level.items():
            for i in range(rows):
                if st[i] < outer[i] and (i == 0 or st[i - 1] > st[i]):
                    nxt[st[:i] + (st[i] + 1,) + st[i + 1:]] += cnt
        level = nxt
    return level.get(outer, 0)


def _cell_index(outer):
    cells = [(i, j) for i, length in enumerate(outer, 1) for j in range(1, length + 1)]
    return cells, {c: k for k, c in enumerate(cells)}


def enumerate_excited(outer, inner):
    """All excited diagrams of ``outer/inner`` in depth-first discovery order.

    A diagram is a bitmask over the cells of ``outer`` (row-major). The move
    ``(i, j) -> (i+1, j+1)`` is legal when the target lies in ``outer`` and
    none of ``(i+1, j)``, ``(i, j+1)``, ``(i+1, j+1)`` is occupied. Children
    are pushed in row-major order, so the latest movable cell is explored first.
    """
    outer = tuple(outer)
    cells, index = _cell_index(outer)
    moves = []
    for (i, j) in cells:
        target = index.get((i + 1, j + 1))
        if target is None:
            moves.append(None)
        else:
            moves.append(((1 << index[(i + 1, j)]) | (1 << index[(i, j + 1)]) | (1 << target), 1 << target))
    seed = 0
    for i, length in enumerate(inner, 1):
        for j in range(1, length + 1):
            seed |= 1 << index[(i, j)]
    seen = {seed}
    stack = [seed]
    out = []
    while stack:
        mask = stack.pop()
        out.append(mask)
        m = mask
        while m:
            low = m & -m
            k = low.bit_length() - 1
            m ^= low
            mv = moves[k]
            if mv is not None and not (mask & mv[0]):
                child = (mask ^ low) | mv[1]
                if child not in seen:
                    seen.add(child)
                    stack.append(child)
    return [tuple(cells[k] for k in range(len(cells)) if mask >> k & 1) for mask in out]


def _diagonal_choices(chain):
    """Move vectors for one diagonal chain that keep images strictly increasing."""
    valid = []
    for v in product((0, 1), repeat=len(chain)):
        rows = [c[0] + d for c, d in zip(chain, v)]
        if all(a < b for a, b in zip(rows, rows[1:])):
            valid.append(v)
    return valid


def sqci_placements(circles):
    """All placements ``D'`` of the circles: each circle stays or moves one step
    southeast, images injective, and order preserved on every pair of adjacent
    diagonals. Returns tuples of image cells aligned with ``sorted(circles)``.
    """
    circles = sorted(set(tuple(c) for c in circles))
    by_diag = defaultdict(list)
    for c in circles:
        by_diag[c[1] - c[0]].append(c)
    diags = sorted(by_diag)
    chains = [sorted(by_diag[k]) for k in diags]
    per_diag = [_diagonal_choices(ch) for ch in chains]
    adjacent = [t for t in range(len(diags) - 1) if diags[t + 1] - diags[t] == 1]
    pos = {c: k for k, c in enumerate(circles)}
    out = []
    for choice in product(*per_diag):
        image = {}
        for chain, v in zip(chains, choice):
            for c, d in zip(chain, v):
                image[c] = (c[0] + d, c[1] + d)
        ok = True
        for t in adjacent:
            for p in chains[t]:
                for q in chains[t + 1]:
                    if p[0] <= q[0] and p[1] <= q[1]:
                        a, b = image[p], image[q]
                    elif q[0] <= p[0] and q[1] <= p[1]:
                        a, b = image[q], image[p]
                    else:
                        continue
                    if not (a[0] <= b[0] and a[1] <= b[1]):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            placed = [None] * len(circles)
            for c, img in image.items():
                placed[pos[c]] = img
            out.append(tuple(placed))
    out.sort()
    return out


def sqci_weight(circles, hooks):
    """Sum over placements of the product of hooks of the placed circles.

    ``hooks[i-1][j-1]`` is the hook length of cell ``(i, j)``; every placed
    cell must lie inside the table.
    """
    total = 0
    for placement in sqci_placements(circles):
        w = 1
        for (i, j) in placement:
            w *= hooks[i - 1][j - 1]
        total += w
    return total
