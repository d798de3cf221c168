"""Dihedral symmetries of the Hasse diagram.

``rho`` rotates coordinates right, ``xi`` flips the first coordinate, and
``theta = xi . rho`` sends ``(a_1..a_n)`` to ``(1-a_n, a_1, .., a_{n-1})``;
it has order 2n and its n-th power is complementation.  ``tau`` reverses the
word.  Group elements are kept in the canonical form ``theta^k . tau^r``
(tau applied first).

Vertex permutations are tuples ``p`` with ``p[mask] = image mask``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

from .errors import ModulusMismatch, NotABijection, RangeError, VertexError
from .poset import hasse_edges
from .seqcore import Vertex, as_vertex

AUTO_MAX_N = 14
ORBIT_MAX_N = 14
GROUP_MAX_N = 12


# mask-level maps; bit n-1 is a_1 -------------------------------------------

def rho_mask(m: int, n: int) -> int:
    return (m >> 1) | ((m & 1) << (n - 1))


def xi_mask(m: int, n: int) -> int:
    return m ^ (1 << (n - 1))


def theta_mask(m: int, n: int) -> int:
    return (m >> 1) | ((~m & 1) << (n - 1))


def theta_inverse_mask(m: int, n: int) -> int:
    full = (1 << n) - 1
    return ((m << 1) & full) | (1 - (m >> (n - 1)))


def tau_mask(m: int, n: int) -> int:
    out = 0
    for _ in range(n):
        out = (out << 1) | (m & 1)
        m >>= 1
    return out


def _lift(f):
    def g(v):
        v = as_vertex(v)
        return Vertex(v.n, f(v.mask, v.n))
    g.__name__ = f.__name__.replace("_mask", "")
    return g


apply_rho = _lift(rho_mask)
apply_xi = _lift(xi_mask)
apply_theta = _lift(theta_mask)
apply_theta_inverse = _lift(theta_inverse_mask)
apply_tau = _lift(tau_mask)

NAMED_MAPS = {
    "rho": rho_mask,
    "xi": xi_mask,
    "theta": theta_mask,
    "theta_inv": theta_inverse_mask,
    "tau": tau_mask,
}


# group elements -----------------------------------------------------------

@dataclass(frozen=True, order=True)
class DihedralElement:
    """``theta^k . tau^r`` acting on words of length ``n``."""

    n: int
    k: int = 0
    r: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise RangeError("DihedralElement", self.n, 1, float("inf"))
        if not 0 <= self.k < 2 * self.n or self.r not in (0, 1):
            raise ValueError(f"non-canonical element k={self.k}, r={self.r} for n={self.n}")

    @classmethod
    def identity(cls, n):
        return cls(n, 0, 0)

    @classmethod
    def theta(cls, n, power=1):
        return cls(n, power % (2 * n), 0)

    @classmethod
    def tau(cls, n):
        return cls(n, 0, 1)

    def inverse(self) -> "DihedralElement":
        if self.r:
            return self  # reflections are involutions
        return DihedralElement(self.n, (-self.k) % (2 * self.n), 0)

    def __mul__(self, other):
        return compose(self, other)

    def __call__(self, v):
        return apply(self, v)

    def permutation(self) -> tuple[int, ...]:
        n = self.n
        return tuple(_apply_mask(self, m, n) for m in range(1 << n))


def _apply_mask(g: DihedralElement, m: int, n: int) -> int:
    if g.r:
        m = tau_mask(m, n)
    for _ in range(g.k):
        m = theta_mask(m, n)
    return m


def apply(g: DihedralElement, v) -> Vertex:
    v = as_vertex(v)
    if v.n != g.n:
        raise VertexError(f"element acts on length {g.n}, vertex has length {v.n}")
    return Vertex(v.n, _apply_mask(g, v.mask, v.n))


def compose(g: DihedralElement, h: DihedralElement) -> DihedralElement:
    """Canonical form of ``g . h`` (h applied first).

    Uses ``tau . theta^c = theta^(-c) . tau``, so
    ``theta^a tau^b theta^c tau^d = theta^(a +- c) tau^(b xor d)``.
    """
    if g.n != h.n:
        raise ModulusMismatch(f"cannot compose elements for n={g.n} and n={h.n}")
    c = -h.k if g.r else h.k
    return DihedralElement(g.n, (g.k + c) % (2 * g.n), g.r ^ h.r)


def all_elements(n: int) -> list[DihedralElement]:
    return [DihedralElement(n, k, r) for r in (0, 1) for k in range(2 * n)]


# permutations -------------------------------------------------------------

PermLike = Union[Callable, Sequence[int], str, DihedralElement]


def as_permutation(f: PermLike, n: int) -> tuple[int, ...]:
    """Materialise a vertex map as a mask table.

    Accepts a map name (``"theta"``, ``"tau"``, ...), a DihedralElement, a
    callable on :class:`Vertex`, or a sequence indexed by mask.  Raises
    NotABijection unless the result permutes the 2**n vertices.
    """
    size = 1 << n
    if isinstance(f, str):
        try:
            fm = NAMED_MAPS[f]
        except KeyError:
            raise ValueError(f"unknown map {f!r}; known: {sorted(NAMED_MAPS)}") from None
        table = tuple(fm(m, n) for m in range(size))
    elif isinstance(f, DihedralElement):
        if f.n != n:
            raise ModulusMismatch(f"element for n={f.n} used at n={n}")
        table = f.permutation()
    elif callable(f):
        table = []
        for m in range(size):
            img = as_vertex(f(Vertex(n, m)))
            if img.n != n:
                raise NotABijection(f"image of {Vertex(n, m)} has length {img.n}")
            table.append(img.mask)
        table = tuple(table)
    else:
        table = tuple(int(x) for x in f)
        if len(table) != size:
            raise NotABijection(f"table has {len(table)} entries, expected {size}")
    if sorted(table) != list(range(size)):
        raise NotABijection("map is not a permutation of the vertex set")
    return table


def _covers(a: int, b: int, n: int) -> bool:
    # b - a alternating, read from a_1 (top bit) down
    s = 0
    for i in range(n - 1, -1, -1):
        d = ((b >> i) & 1) - ((a >> i) & 1)
        s += d
        if s < 0 or s > 1:
            return False
    return s == 1


def _adjacent(a: int, b: int, n: int) -> bool:
    return _covers(a, b, n) or _covers(b, a, n)


def is_graph_automorphism(f: PermLike, n: int) -> bool:
    """True iff ``f`` maps every Hasse edge to a Hasse edge.

    Since ``f`` is a bijection, edge images are distinct; together with
    equal edge counts this makes the image edge set the whole edge set.
    """
    if not 1 <= n <= AUTO_MAX_N:
        raise RangeError("is_graph_automorphism", n, 1, AUTO_MAX_N)
    p = as_permutation(f, n)
    count = 0
    images = set()
    for e in hasse_edges(n):
        a, b = p[e.lower.mask], p[e.upper.mask]
        if not _adjacent(a, b, n):
            return False
        images.add((a, b) if a < b else (b, a))
        count += 1
    return len(images) == count


def theta_cycle(v) -> list[Vertex]:
    """Orbit of ``v`` under repeated theta, starting at ``v``."""
    v = as_vertex(v)
    out = [v]
    m = theta_mask(v.mask, v.n)
    while m != v.mask:
        out.append(Vertex(v.n, m))
        m = theta_mask(m, v.n)
    return out


def theta_cycles(n: int) -> list[list[Vertex]]:
    """All theta cycles, each started at its smallest member, sorted by it."""
    if not 1 <= n <= ORBIT_MAX_N:
        raise RangeError("theta_cycles", n, 1, ORBIT_MAX_N)
    seen = set()
    out = []
    for m in range(1 << n):
        if m in seen:
            continue
        cyc = theta_cycle(Vertex(n, m))
        seen.update(x.mask for x in cyc)
        out.append(cyc)
    return out


def vertex_orbits(n: int, generators: Iterable[PermLike]) -> list[list[Vertex]]:
    """Orbit partition under the group generated by ``generators``.

    Orbits are sorted by their smallest member; members are sorted.
    """
    if not 1 <= n <= ORBIT_MAX_N:
        raise RangeError("vertex_orbits", n, 1, ORBIT_MAX_N)
    perms = [as_permutation(g, n) for g in generators]
    size = 1 << n
    orbit_of = [-1] * size
    out = []
    for start in range(size):
        if orbit_of[start] >= 0:
            continue
        idx = len(out)
        orbit_of[start] = idx
        members = [start]
        frontier = [start]
        while frontier:
            m = frontier.pop()
            for p in perms:
                t = p[m]
                if orbit_of[t] < 0:
                    orbit_of[t] = idx
                    members.append(t)
                    frontier.append(t)
        out.append([Vertex(n, m) for m in sorted(members)])
    return out


def group_order(n: int) -> int:
    """Number of distinct vertex permutations among the 4n elements."""
    if not 1 <= n <= GROUP_MAX_N:
        raise RangeError("group_order", n, 1, GROUP_MAX_N)
    return len({g.permutation() for g in all_elements(n)})


def format_cycle(cycle: Sequence[Vertex], style: str = "tuple") -> str:
    """``v1 -> v2 -> ... -> v1``; tuple style prints ``(0,1,0)``."""
    def fmt(v):
        if style == "tuple":
            return "(" + ",".join(str(a) for a in v.coords) + ")"
        return str(v)
    return " -> ".join(fmt(v) for v in list(cycle) + [cycle[0]])
