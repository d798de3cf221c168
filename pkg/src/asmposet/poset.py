"""The graded poset on binary words of length n.

``y`` covers ``x`` when the coordinatewise difference ``y - x`` is an
alternating sequence.  The Hasse diagram is the n-cube plus extra edges,
every maximal chain runs from the all-zeros word to the all-ones word in n
cover steps, and the rows of consecutive differences along a maximal chain
form an alternating sign matrix (and every ASM arises exactly once).
"""

from __future__ import annotations

import json
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import _kernels, seqcore
from .asm import Asm, validate_asm
from .errors import (
    BadEndpoints,
    NotACover,
    ParseError,
    RangeError,
    VertexError,
    WrongLength,
)
from .seqcore import Vertex, as_vertex

HASSE_MAX_N = 20
COUNT_MAX_N = 20
ENUM_MAX_N = 6


def _same_n(x: Vertex, y: Vertex) -> None:
    if x.n != y.n:
        raise VertexError(f"length mismatch: {x.n} vs {y.n}")


def is_cover(x, y) -> bool:
    x, y = as_vertex(x), as_vertex(y)
    _same_n(x, y)
    return seqcore.is_alternating(seqcore.vertex_difference(x, y))


def up_covers(x) -> list[Vertex]:
    """Vertices covering ``x``, in lexicographic order."""
    x = as_vertex(x)
    return [Vertex(x.n, m) for m in _kernels.up_cover_masks(x.mask, x.n)]


def down_covers(y) -> list[Vertex]:
    """Vertices covered by ``y``, in lexicographic order."""
    y = as_vertex(y)
    return [Vertex(y.n, m) for m in _kernels.down_cover_masks(y.mask, y.n)]


def up_covers_bruteforce(x) -> list[Vertex]:
    """Reference: test every vertex of the next rank with :func:`is_cover`."""
    x = as_vertex(x)
    return [Vertex(x.n, m) for m in range(1 << x.n)
            if m.bit_count() == x.mask.bit_count() + 1 and is_cover(x, Vertex(x.n, m))]


@dataclass(frozen=True)
class HasseEdge:
    lower: Vertex
    upper: Vertex

    def __str__(self):
        return f"{self.lower} {self.upper}"


def hasse_edges(n: int) -> Iterator[HasseEdge]:
    """Every cover pair once, ordered by lower vertex then upper vertex."""
    if not 1 <= n <= HASSE_MAX_N:
        raise RangeError("hasse_edges", n, 1, HASSE_MAX_N)
    for x in range(1 << n):
        lo = Vertex(n, x)
        for y in _kernels.up_cover_masks(x, n):
            yield HasseEdge(lo, Vertex(n, y))


def leq(x, y) -> bool:
    """Reflexive-transitive closure of the cover relation, searched by rank."""
    x, y = as_vertex(x), as_vertex(y)
    _same_n(x, y)
    if x == y:
        return True
    target_rank = y.mask.bit_count()
    if x.mask.bit_count() >= target_rank:
        return False
    layer = {x.mask}
    for _ in range(target_rank - x.mask.bit_count()):
        nxt = set()
        for m in layer:
            nxt.update(_kernels.up_cover_masks(m, x.n))
        layer = nxt
    return y.mask in layer


def _check_count_n(n, what, hi):
    if not 1 <= n <= hi:
        raise RangeError(what, n, 1, hi)


def count_maximal_chains(n: int) -> int:
    """Number of maximal chains (exact, arbitrary size) for 1 <= n <= 20."""
    _check_count_n(n, "count_maximal_chains", COUNT_MAX_N)
    return _kernels.count_chains(n)


def count_maximal_chains_layered(n: int) -> int:
    """Plain rank-layer DP: f(0)=1, f(v) = sum of f over down_covers(v).

    Slow; kept as an independent route for cross-checking the kernel.
    """
    _check_count_n(n, "count_maximal_chains_layered", COUNT_MAX_N)
    layers: list[list[int]] = [[] for _ in range(n + 1)]
    for m in range(1 << n):
        layers[m.bit_count()].append(m)
    f = {0: 1}
    for r in range(1, n + 1):
        for v in layers[r]:
            f[v] = sum(f[x] for x in _kernels.down_cover_masks(v, n))
    return f[(1 << n) - 1]


@dataclass(frozen=True)
class Chain:
    """A validated maximal chain ``x_0 < x_1 < ... < x_n``."""

    vertices: tuple[Vertex, ...]

    @property
    def n(self) -> int:
        return self.vertices[0].n

    def to_json(self) -> dict:
        return {"n": self.n, "vertices": [str(v) for v in self.vertices]}

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)


def validate_chain(vs: Sequence) -> Chain:
    """Check a vertex sequence is a maximal chain.

    Raises WrongLength (mixed lengths or not n+1 vertices), BadEndpoints, or
    NotACover(i) for the first step x_{i-1} -> x_i that is not a cover.
    """
    vs = [as_vertex(v) for v in vs]
    if not vs:
        raise WrongLength("empty vertex sequence")
    n = vs[0].n
    for k, v in enumerate(vs):
        if v.n != n:
            raise WrongLength(f"vertex {k} has length {v.n}, expected {n}")
    if len(vs) != n + 1:
        raise WrongLength(f"a maximal chain in order {n} has {n + 1} vertices, got {len(vs)}")
    if vs[0] != Vertex.zero(n) or vs[-1] != Vertex.one(n):
        raise BadEndpoints(f"chain must run from {Vertex.zero(n)} to {Vertex.one(n)}, "
                           f"got {vs[0]} .. {vs[-1]}")
    for i in range(1, n + 1):
        if not is_cover(vs[i - 1], vs[i]):
            raise NotACover(i, vs[i - 1], vs[i])
    return Chain(tuple(vs))


def _chain_from_masks(n, masks) -> Chain:
    return Chain(tuple(Vertex(n, m) for m in masks))


def enumerate_maximal_chains(n: int, *, force: bool = False,
                             workers: int = 1) -> Iterator[Chain]:
    """Depth-first stream of maximal chains, up-covers taken in lex order.

    With ``workers > 1`` the subtrees below each first step are expanded in
    parallel; chains are still yielded in the sequential order.
    """
    hi = COUNT_MAX_N if force else ENUM_MAX_N
    if not 1 <= n <= hi:
        raise RangeError("enumerate_maximal_chains", n, 1, hi)
    if workers <= 1:
        for masks in _kernels.chain_masks(n):
            yield _chain_from_masks(n, masks)
        return
    firsts = _kernels.up_cover_masks(0, n)

    def subtree(m):
        return list(_kernels.chain_masks(n, [0, m]))

    with ThreadPoolExecutor(max_workers=workers) as pool:
        for block in pool.map(subtree, firsts):
            for masks in block:
                yield _chain_from_masks(n, masks)


def chain_to_asm(c) -> Asm:
    """Row ``i`` is ``x_i - x_{i-1}``."""
    if not isinstance(c, Chain):
        c = validate_chain(c)
    vs = c.vertices
    return validate_asm([seqcore.vertex_difference(vs[i - 1], vs[i])
                         for i in range(1, len(vs))])


def asm_to_chain(a) -> Chain:
    """``x_i`` is the sum of rows 1..i."""
    if not isinstance(a, Asm):
        a = validate_asm(a)
    acc = [0] * a.n
    vs = [Vertex.zero(a.n)]
    for row in a.rows:
        acc = [s + r for s, r in zip(acc, row)]
        vs.append(Vertex.from_coords(acc))
    return validate_chain(vs)


def column_trajectories(c: Chain) -> list[tuple[int, ...]]:
    """For each column j, the j-th coordinates of x_0..x_n."""
    coords = [v.coords for v in c.vertices]
    return [tuple(x[j] for x in coords) for j in range(c.n)]


# external formats ---------------------------------------------------------

def parse_chain(text: str) -> Chain:
    """Chain JSON ``{"n":..,"vertices":[..]}`` or space-separated bitstrings."""
    s = text.strip()
    if not s:
        raise ParseError("empty chain text", 0)
    if s.startswith("{"):
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
        verts = obj.get("vertices") if isinstance(obj, dict) else None
        if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
            raise ParseError("chain JSON needs a 'vertices' list of bitstrings", 0)
        chain = validate_chain([Vertex.parse(v) for v in verts])
        if "n" in obj and obj["n"] != chain.n:
            raise WrongLength(f"declared n={obj['n']} but vertices have length {chain.n}")
        return chain
    vs = []
    pos = 0
    for tok in text.split():
        pos = text.index(tok, pos)
        try:
            vs.append(Vertex.parse(tok))
        except ParseError as exc:
            raise ParseError(f"bad vertex {tok!r}", pos + (exc.position or 0)) from None
        pos += len(tok)
    return validate_chain(vs)


def chain_json(c: Chain) -> str:
    return json.dumps(c.to_json(), separators=(",", ":"))


def export_edgelist(n: int) -> Iterator[str]:
    for e in hasse_edges(n):
        yield f"{e.lower} {e.upper}"


def export_dot(n: int) -> Iterator[str]:
    """Undirected DOT graph with one ``rank=same`` subgraph per rank."""
    yield f"graph Phi_{n} {{"
    yield "  rankdir=BT;"
    layers: dict[int, list[int]] = {}
    for m in range(1 << n):
        layers.setdefault(m.bit_count(), []).append(m)
    for r in range(n + 1):
        names = " ".join(f'"{Vertex(n, m)}";' for m in layers[r])
        yield f"  {{ rank=same; {names} }}"
    for e in hasse_edges(n):
        yield f'  "{e.lower}" -- "{e.upper}";'
    yield "}"


def export_json(n: int) -> str:
    verts = [str(Vertex(n, m)) for m in range(1 << n)]
    edges = [[str(e.lower), str(e.upper)] for e in hasse_edges(n)]
    return json.dumps({"n": n, "vertices": verts, "edges": edges}, separators=(",", ":"))


def all_vertices(n: int) -> Iterable[Vertex]:
    return (Vertex(n, m) for m in range(1 << n))
