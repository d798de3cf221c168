"""Pure-Python kernels.  Same contract as the compiled ``_ckernels``.

Vertices are integer masks with coordinate ``a_1`` in bit ``n-1``.
"""


def _flip_masks(m, n, up):
    # Scan positions a_1..a_n carrying the prefix sum s of the difference.
    # With s == 0 the next nonzero difference must be +1, with s == 1 it must
    # be -1; a walk ending at s == 1 is exactly an alternating difference.
    # Going up, +1 lands on a 0 bit; going down, +1 removes a 1 bit.
    want0 = 0 if up else 1
    partial = [(m, 0)]
    for b in range(n - 1, -1, -1):
        bit = 1 << b
        cur = (m >> b) & 1
        nxt = []
        for w, s in partial:
            nxt.append((w, s))
            if s == 0:
                if cur == want0:
                    nxt.append((w ^ bit, 1))
            elif cur != want0:
                nxt.append((w ^ bit, 0))
        partial = nxt
    return sorted(w for w, s in partial if s == 1)


def up_cover_masks(x, n):
    return _flip_masks(x, n, True)


def down_cover_masks(y, n):
    return _flip_masks(y, n, False)


def count_chains(n):
    """Number of maximal chains, by n applications of the down-cover sum.

    Layer r pushes counts from rank r-1 to rank r with a left-to-right scan
    over coordinates: ``a0`` holds words whose pending difference has prefix
    sum 0, ``a1`` those with prefix sum 1.  A pair (w0, w0|bit) can only be
    live when w0 has rank r-1, so only those pairs are visited.
    """
    size = 1 << n
    by_rank = [[] for _ in range(n + 1)]
    for m in range(size):
        by_rank[m.bit_count()].append(m)
    f = [0] * size
    f[0] = 1
    for r in range(1, n + 1):
        a0 = f
        a1 = [0] * size
        lower = by_rank[r - 1]
        for b in range(n - 1, -1, -1):
            bit = 1 << b
            for w0 in lower:
                if w0 & bit:
                    continue
                w1 = w0 | bit
                t = a0[w0] + a1[w1]
                if t:
                    a0[w0] = t
                    a1[w1] = t
        f = a1
    return f[size - 1]


def chain_masks(n, prefix=None):
    """Depth-first stream of maximal chains as tuples of masks.

    ``prefix`` restricts the stream to chains starting with those masks.
    """
    top = (1 << n) - 1
    path = list(prefix) if prefix else [0]
    if path[0] != 0:
        return
    cache = {}

    def ups(x):
        r = cache.get(x)
        if r is None:
            r = cache[x] = up_cover_masks(x, n)
        return r

    stack = [iter(ups(path[-1]))]
    base = len(path)
    if path[-1] == top:
        if len(path) == n + 1:
            yield tuple(path)
        return
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            if len(path) > base:
                path.pop()
            continue
        path.append(nxt)
        if nxt == top:
            yield tuple(path)
            path.pop()
        else:
            stack.append(iter(ups(nxt)))
