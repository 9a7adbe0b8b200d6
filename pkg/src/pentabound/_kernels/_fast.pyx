# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: canonical labeling and 5-cycle counting.

Same contract and bit order as pentabound._kernels.pure.
"""

from libc.stdint cimport uint32_t, uint64_t


cdef struct SearchState:
    int n
    int total_bits
    int has_best
    uint64_t best_key
    uint32_t masks[12]
    int best_perm[12]


cdef void _descend(SearchState* st, int* placed, int j, uint64_t cur, int length) noexcept:
    cdef int i, v, u, k, ncand, ntried, twin
    cdef uint64_t bits, ncur
    cdef uint32_t used = 0, pairmask
    cdef uint64_t cand_bits[12]
    cdef int cand_v[12]
    cdef int tried[12]
    if j == st.n:
        if (not st.has_best) or cur < st.best_key:
            st.best_key = cur
            st.has_best = 1
            for i in range(st.n):
                st.best_perm[i] = placed[i]
        return
    for i in range(j):
        used |= (<uint32_t>1) << placed[i]
    ncand = 0
    for v in range(st.n):
        if (used >> v) & 1:
            continue
        bits = 0
        for i in range(j):
            bits = (bits << 1) | ((st.masks[v] >> placed[i]) & 1)
        cand_bits[ncand] = bits
        cand_v[ncand] = v
        ncand += 1
    for i in range(1, ncand):
        bits = cand_bits[i]
        v = cand_v[i]
        k = i - 1
        while k >= 0 and cand_bits[k] > bits:
            cand_bits[k + 1] = cand_bits[k]
            cand_v[k + 1] = cand_v[k]
            k -= 1
        cand_bits[k + 1] = bits
        cand_v[k + 1] = v
    ntried = 0
    for i in range(ncand):
        v = cand_v[i]
        twin = 0
        for k in range(ntried):
            u = tried[k]
            pairmask = ~((((<uint32_t>1) << u)) | (((<uint32_t>1) << v)))
            if (st.masks[u] & pairmask) == (st.masks[v] & pairmask):
                twin = 1
                break
        if twin:
            continue
        tried[ntried] = v
        ntried += 1
        ncur = (cur << j) | cand_bits[i]
        if st.has_best and ncur > (st.best_key >> (st.total_bits - (length + j))):
            continue
        placed[j] = v
        _descend(st, placed, j + 1, ncur, length + j)


def canon_search(int n, masks, fixed=()):
    """Minimize the packed upper-triangle bits over vertex orderings.

    Vertices in `fixed` are pinned to the first positions; the rest are
    permuted. Returns (key, order).
    """
    cdef SearchState st
    cdef int placed[12]
    cdef uint64_t cur = 0, bits
    cdef int length = 0
    cdef int j = 0, i, v
    if n == 0:
        return 0, ()
    if n > 10:
        raise ValueError("kernel supports n <= 10")
    st.n = n
    st.total_bits = n * (n - 1) // 2
    st.has_best = 0
    st.best_key = 0
    for v in range(n):
        st.masks[v] = masks[v]
    for v in fixed:
        placed[j] = v
        bits = 0
        for i in range(j):
            bits = (bits << 1) | ((st.masks[v] >> placed[i]) & 1)
        cur = (cur << j) | bits
        length += j
        j += 1
    _descend(&st, placed, j, cur, length)
    return st.best_key, tuple(st.best_perm[i] for i in range(n))


# The 12 distinct 5-cycles on a fixed 5-set (anchored rotation, one
# orientation), filled at import from the same construction as pure.
cdef int _C5A[12][5]
cdef int _C5B[12][5]


def _init_cycles(cycles):
    cdef int t, e
    for t in range(12):
        for e in range(5):
            _C5A[t][e] = cycles[t][e][0]
            _C5B[t][e] = cycles[t][e][1]


from itertools import permutations as _permutations

_cycles = []
for _perm in _permutations(range(1, 5)):
    if _perm[0] > _perm[3]:
        continue
    _cyc = (0,) + _perm
    _cycles.append(tuple((_cyc[i], _cyc[(i + 1) % 5]) for i in range(5)))
_init_cycles(_cycles)
del _cycles


def count_c5(int n, masks):
    """Number of 5-cycle subgraphs, by scanning all 5-subsets."""
    cdef uint32_t cmasks[32]
    cdef int a, b, c, d, e, t, i, ok
    cdef int sub[5]
    cdef long total = 0
    if n < 5:
        return 0
    if n > 31:
        raise ValueError("kernel supports n <= 31")
    for i in range(n):
        cmasks[i] = masks[i]
    for a in range(n):
        sub[0] = a
        for b in range(a + 1, n):
            sub[1] = b
            for c in range(b + 1, n):
                sub[2] = c
                for d in range(c + 1, n):
                    sub[3] = d
                    for e in range(d + 1, n):
                        sub[4] = e
                        for t in range(12):
                            ok = 1
                            for i in range(5):
                                if not (cmasks[sub[_C5A[t][i]]] >> sub[_C5B[t][i]]) & 1:
                                    ok = 0
                                    break
                            if ok:
                                total += 1
    return total
