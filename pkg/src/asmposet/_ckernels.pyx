# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ``_pykernels``."""

cimport cython

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset


cdef list _flip_masks(long m, int n, bint up):
    cdef long want0 = 0 if up else 1
    cdef long size = 1L << n
    cdef long *ws = <long *> malloc(size * sizeof(long))
    cdef char *st = <char *> malloc(size)
    cdef long cnt = 1, k, old, bit, cur
    cdef int b
    cdef list out
    if ws == NULL or st == NULL:
        free(ws)
        free(st)
        raise MemoryError()
    try:
        ws[0] = m
        st[0] = 0
        for b in range(n - 1, -1, -1):
            bit = 1L << b
            cur = (m >> b) & 1
            old = cnt
            for k in range(old):
                if st[k] == 0:
                    if cur == want0:
                        ws[cnt] = ws[k] ^ bit
                        st[cnt] = 1
                        cnt += 1
                elif cur != want0:
                    ws[cnt] = ws[k] ^ bit
                    st[cnt] = 0
                    cnt += 1
        out = [ws[k] for k in range(cnt) if st[k] == 1]
    finally:
        free(ws)
        free(st)
    out.sort()
    return out


def up_cover_masks(long x, int n):
    return _flip_masks(x, n, True)


def down_cover_masks(long y, int n):
    return _flip_masks(y, n, False)


cdef inline int _popcount(long m) nogil:
    cdef int c = 0
    while m:
        m &= m - 1
        c += 1
    return c


cdef inline void _add_limbs(uint64_t *a, uint64_t *b, int limbs) nogil:
    # a += b, carrying; both buffers hold `limbs` little-endian words
    cdef uint64_t carry = 0, s, t
    cdef int i
    for i in range(limbs):
        t = a[i] + carry
        carry = 1 if t < carry else 0
        s = t + b[i]
        if s < t:
            carry += 1
        a[i] = s


def count_chains(int n):
    """Number of maximal chains with exact multi-word accumulators.

    Every intermediate value is a sum over at most 2**n chain counts of the
    previous layer, and each layer multiplies the maximum by at most
    2**(n-1), so n*n + 1 bits always suffice.  Only pairs whose lower word
    has rank r-1 can be nonzero in layer r.
    """
    cdef long size = 1L << n
    cdef int limbs = (n * n) // 64 + 1
    cdef int used, layer, b, i
    cdef long k, w0, w1, bit, start, stop
    cdef uint64_t *a0 = <uint64_t *> calloc(size * limbs, sizeof(uint64_t))
    cdef uint64_t *a1 = <uint64_t *> calloc(size * limbs, sizeof(uint64_t))
    cdef long *order = <long *> malloc(size * sizeof(long))
    cdef long *offset = <long *> calloc(n + 2, sizeof(long))
    cdef uint64_t *tmp
    cdef uint64_t *p0
    cdef uint64_t *p1
    cdef long m
    if a0 == NULL or a1 == NULL or order == NULL or offset == NULL:
        free(a0)
        free(a1)
        free(order)
        free(offset)
        raise MemoryError()
    try:
        # counting sort of words by rank
        for m in range(size):
            offset[_popcount(m) + 1] += 1
        for i in range(n + 1):
            offset[i + 1] += offset[i]
        for m in range(size):
            i = _popcount(m)
            order[offset[i]] = m
            offset[i] += 1
        for i in range(n, 0, -1):
            offset[i] = offset[i - 1]
        offset[0] = 0
        a0[0] = 1
        with nogil:
            for layer in range(1, n + 1):
                used = (layer * n) // 64 + 1
                if used > limbs:
                    used = limbs
                start = offset[layer - 1]
                stop = offset[layer]
                for b in range(n - 1, -1, -1):
                    bit = 1L << b
                    for k in range(start, stop):
                        w0 = order[k]
                        if w0 & bit:
                            continue
                        w1 = w0 | bit
                        p0 = a0 + w0 * limbs
                        p1 = a1 + w1 * limbs
                        _add_limbs(p0, p1, used)
                        for i in range(used):
                            p1[i] = p0[i]
                tmp = a0
                a0 = a1
                a1 = tmp
                memset(a1, 0, size * limbs * sizeof(uint64_t))
        result = 0
        p0 = a0 + (size - 1) * limbs
        for i in range(limbs - 1, -1, -1):
            result = (result << 64) | p0[i]
        return result
    finally:
        free(a0)
        free(a1)
        free(order)
        free(offset)


@cython.wraparound(True)
def chain_masks(int n, prefix=None):
    """Depth-first stream of maximal chains as tuples of masks."""
    cdef long top = (1L << n) - 1
    cdef list path = list(prefix) if prefix else [0]
    cdef dict cache = {}
    cdef list stack, lst
    cdef list pos
    cdef Py_ssize_t base, depth
    cdef long nxt
    if path[0] != 0:
        return
    if path[-1] == top:
        if len(path) == n + 1:
            yield tuple(path)
        return
    base = len(path)
    lst = _flip_masks(path[-1], n, True)
    cache[path[-1]] = lst
    stack = [lst]
    pos = [0]
    while stack:
        depth = len(stack) - 1
        lst = <list> stack[depth]
        if pos[depth] >= len(lst):
            stack.pop()
            pos.pop()
            if len(path) > base:
                path.pop()
            continue
        nxt = lst[pos[depth]]
        pos[depth] += 1
        path.append(nxt)
        if nxt == top:
            yield tuple(path)
            path.pop()
        else:
            lst = cache.get(nxt)
            if lst is None:
                lst = _flip_masks(nxt, n, True)
                cache[nxt] = lst
            stack.append(lst)
            pos.append(0)
