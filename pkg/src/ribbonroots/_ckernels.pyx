# distutils: language = c++
"""Compiled enumeration kernels.

Same contracts and output order as ``_pykernels``. Diagrams are uint64
bitmasks over row-major cell indices, so the fast paths require at most 64
cells; larger inputs are delegated to the pure-Python implementation.
"""
from libc.stdint cimport uint64_t, int64_t
from libcpp.vector cimport vector
from libcpp.unordered_set cimport unordered_set
from libcpp.unordered_map cimport unordered_map
from libcpp.algorithm cimport next_permutation
from libcpp.utility cimport pair

from . import _pykernels


def descent_histogram(int n):
    if n < 1:
        raise ValueError("n must be positive")
    if n > 13:
        return _pykernels.descent_histogram(n)
    cdef vector[int] perm
    cdef vector[uint64_t] hist
    cdef int i
    cdef uint64_t mask
    perm.resize(n)
    hist.resize(<size_t>1 << (n - 1), 0)
    for i in range(n):
        perm[i] = i
    with nogil:
        while True:
            mask = 0
            for i in range(n - 1):
                if perm[i] > perm[i + 1]:
                    mask |= (<uint64_t>1) << i
            hist[mask] += 1
            if not next_permutation(perm.begin(), perm.end()):
                break
    return [int(x) for x in hist]


def count_skew_syt(outer, inner):
    outer = tuple(outer)
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    cdef int n = sum(outer) - sum(inner)
    if n > 20:
        # counts may exceed 64 bits
        return _pykernels.count_skew_syt(outer, inner)
    cells = [(i, j) for i in range(1, len(outer) + 1)
             for j in range(inner[i - 1] + 1, outer[i - 1] + 1)]
    index = {c: k for k, c in enumerate(cells)}
    cdef vector[uint64_t] pred
    cdef uint64_t p
    for (i, j) in cells:
        p = 0
        if (i, j - 1) in index:
            p |= (<uint64_t>1) << index[(i, j - 1)]
        if (i - 1, j) in index:
            p |= (<uint64_t>1) << index[(i - 1, j)]
        pred.push_back(p)
    cdef unordered_map[uint64_t, uint64_t] level, nxt
    cdef pair[uint64_t, uint64_t] entry
    cdef uint64_t mask, bit, full
    cdef int step, k
    full = ((<uint64_t>1) << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    level[0] = 1
    for step in range(n):
        nxt.clear()
        for entry in level:
            mask = entry.first
            for k in range(n):
                bit = (<uint64_t>1) << k
                if not (mask & bit) and (mask & pred[k]) == pred[k]:
                    nxt[mask | bit] += entry.second
        level.swap(nxt)
    if level.count(full):
        return int(level[full])
    return 0


def enumerate_excited(outer, inner):
    outer = tuple(outer)
    cells = [(i, j) for i in range(1, len(outer) + 1) for j in range(1, outer[i - 1] + 1)]
    cdef int ncells = len(cells)
    if ncells > 64:
        return _pykernels.enumerate_excited(outer, inner)
    index = {c: k for k, c in enumerate(cells)}
    cdef vector[uint64_t] block, target
    cdef uint64_t seed = 0
    cdef int k
    for (i, j) in cells:
        t = index.get((i + 1, j + 1))
        if t is None:
            block.push_back(0)
            target.push_back(0)
        else:
            block.push_back(((<uint64_t>1) << index[(i + 1, j)])
                            | ((<uint64_t>1) << index[(i, j + 1)])
                            | ((<uint64_t>1) << <int>t))
            target.push_back((<uint64_t>1) << <int>t)
    for i, length in enumerate(inner, 1):
        for j in range(1, length + 1):
            seed |= (<uint64_t>1) << <int>index[(i, j)]
    cdef unordered_set[uint64_t] seen
    cdef vector[uint64_t] stack, out
    cdef uint64_t mask, child, low
    seen.insert(seed)
    stack.push_back(seed)
    with nogil:
        while not stack.empty():
            mask = stack.back()
            stack.pop_back()
            out.push_back(mask)
            for k in range(ncells):
                low = (<uint64_t>1) << k
                if (mask & low) and target[k] and not (mask & block[k]):
                    child = (mask ^ low) | target[k]
                    if seen.count(child) == 0:
                        seen.insert(child)
                        stack.push_back(child)
    result = []
    for mask in out:
        result.append(tuple(cells[k] for k in range(ncells) if (mask >> k) & 1))
    return result


def _placement_constraints(circles):
    # (p, q, same_diagonal) with p weakly northwest of q on equal or adjacent diagonals
    cons = []
    for a, p in enumerate(circles):
        for b, q in enumerate(circles):
            if a == b:
                continue
            dc = (q[1] - q[0]) - (p[1] - p[0])
            if abs(dc) <= 1 and p[0] <= q[0] and p[1] <= q[1]:
                cons.append((a, b, dc == 0))
    return cons


def sqci_placements(circles):
    circles = sorted(set(tuple(c) for c in circles))
    cdef int k = len(circles)
    if k > 62:
        return _pykernels.sqci_placements(circles)
    cdef vector[int] pa, pb, same
    cdef int flag
    for a, b, s in _placement_constraints(circles):
        pa.push_back(a)
        pb.push_back(b)
        flag = 1 if s else 0
        same.push_back(flag)
    cdef vector[int] rows, cols
    for (r, c) in circles:
        rows.push_back(r)
        cols.push_back(c)
    cdef vector[uint64_t] valid
    cdef uint64_t mask, total = (<uint64_t>1) << k
    cdef size_t t
    cdef int da, db
    cdef bint ok
    with nogil:
        mask = 0
        while mask < total:
            ok = True
            for t in range(pa.size()):
                da = (mask >> pa[t]) & 1
                db = (mask >> pb[t]) & 1
                if rows[pa[t]] + da > rows[pb[t]] + db or cols[pa[t]] + da > cols[pb[t]] + db:
                    ok = False
                    break
                if same[t] and rows[pa[t]] + da == rows[pb[t]] + db:
                    ok = False
                    break
            if ok:
                valid.push_back(mask)
            mask += 1
    out = []
    for mask in valid:
        out.append(tuple((circles[a][0] + ((mask >> a) & 1), circles[a][1] + ((mask >> a) & 1))
                         for a in range(k)))
    out.sort()
    return out


def sqci_weight(circles, hooks):
    total = 0
    for placement in sqci_placements(circles):
        w = 1
        for (i, j) in placement:
            w *= hooks[i - 1][j - 1]
        total += w
    return total
