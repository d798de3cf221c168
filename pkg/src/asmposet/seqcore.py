"""Sign sequences, constrained sequences and binary vertices.

A *sign sequence* is a tuple over {-1, 0, 1}.  It is *alternating* when its
nonzero entries read 1, -1, 1, ..., -1, 1; equivalently every prefix sum is
0 or 1 and the total is 1.  A *constrained sequence* is a 0/1 tuple
``(s_0, ..., s_n)`` with ``s_0 = 0`` and ``s_n = 1``.  Taking successive
differences maps constrained sequences onto alternating ones and partial
sums map back.

Sequences are plain tuples.  Vertices get a small value class because they
carry an order ``n`` next to the bits, and the bit encoding (a machine
integer with the first coordinate as most significant bit) is what the fast
kernels work on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError, RangeError, SequenceError, VertexError

MAX_ENUM_N = 24

_MINUS_SIGNS = "-−"


def is_alternating(s: Sequence[int]) -> bool:
    """Return True iff the nonzero entries of ``s`` read 1, -1, ..., -1, 1."""
    expect = 1
    seen = False
    for a in s:
        if a == 0:
            continue
        if a != expect:
            return False
        seen = True
        expect = -expect
    # pattern must end on a +1, i.e. the next expected sign is -1
    return seen and expect == -1


def is_constrained(s: Sequence[int]) -> bool:
    if len(s) < 2:
        return False
    if any(v not in (0, 1) for v in s):
        return False
    return s[0] == 0 and s[-1] == 1


def check_sign_sequence(s: Sequence[int]) -> tuple[int, ...]:
    s = tuple(s)
    if not s:
        raise SequenceError("sign sequence must be nonempty")
    for i, a in enumerate(s):
        if a not in (-1, 0, 1):
            raise SequenceError(f"entry {i + 1} is {a!r}, not in {{-1,0,1}}")
    return s


def check_alternating(s: Sequence[int]) -> tuple[int, ...]:
    """Validate ``s`` as an alternating sequence, naming the first violation."""
    s = check_sign_sequence(s)
    expect = 1
    for i, a in enumerate(s):
        if a == 0:
            continue
        if a != expect:
            raise SequenceError(
                f"entry {i + 1} is {a}, expected {expect} in the alternating pattern")
        expect = -expect
    if expect == 1:
        if all(a == 0 for a in s):
            raise SequenceError("all entries are zero; an alternating sequence sums to 1")
        raise SequenceError("last nonzero entry is -1; pattern must end with 1")
    return s


def check_constrained(s: Sequence[int]) -> tuple[int, ...]:
    s = tuple(s)
    if len(s) < 2:
        raise SequenceError("constrained sequence needs length >= 2")
    for i, v in enumerate(s):
        if v not in (0, 1):
            raise SequenceError(f"entry sigma_{i} is {v!r}, not 0 or 1")
    if s[0] != 0:
        raise SequenceError("first entry must be 0")
    if s[-1] != 1:
        raise SequenceError("last entry must be 1")
    return s


def differences(sigma: Sequence[int]) -> tuple[int, ...]:
    """Successive differences of a constrained sequence (an alternating one)."""
    sigma = check_constrained(sigma)
    return tuple(b - a for a, b in zip(sigma, sigma[1:]))


def partial_sums(alpha: Sequence[int]) -> tuple[int, ...]:
    """Prefix sums ``(0, a_1, a_1 + a_2, ...)`` of an alternating sequence."""
    alpha = check_alternating(alpha)
    return (0,) + tuple(itertools.accumulate(alpha))


def enumerate_alternating(n: int) -> list[tuple[int, ...]]:
    """All alternating sequences of length ``n``, lexicographic with -1 < 0 < 1.

    Built as a depth-first walk that tracks the running prefix sum, so only
    valid sequences are ever produced; there are ``2**(n-1)`` of them.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise RangeError("enumerate_alternating", n, 1, MAX_ENUM_N)
    out: list[tuple[int, ...]] = []
    buf = [0] * n

    def walk(i: int, total: int) -> None:
        if i == n:
            if total == 1:
                out.append(tuple(buf))
            return
        # try -1, 0, 1 in that order
        if total == 1:
            buf[i] = -1
            walk(i + 1, 0)
        buf[i] = 0
        walk(i + 1, total)
        if total == 0:
            buf[i] = 1
            walk(i + 1, 1)
        buf[i] = 0

    walk(0, 0)
    return out


# text formats -------------------------------------------------------------

def parse_sign_sequence(text: str) -> tuple[int, ...]:
    """Parse ``"-1 0 1"`` (whitespace tokens) or the compact ``"-0+"`` form."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty sign sequence", 0)
    offset = len(text) - len(text.lstrip())
    tokenised = any(ch.isspace() for ch in stripped) or "1" in stripped
    if not tokenised:
        out = []
        for k, ch in enumerate(stripped):
            if ch == "+":
                out.append(1)
            elif ch == "0":
                out.append(0)
            elif ch in _MINUS_SIGNS:
                out.append(-1)
            else:
                raise ParseError(f"unexpected character {ch!r} in compact sequence",
                                 offset + k)
        return tuple(out)
    out = []
    pos = 0
    for tok in text.split():
        pos = text.index(tok, pos)
        norm = tok.replace("−", "-")
        if norm in ("-1", "0", "1", "+1"):
            out.append(int(norm))
        else:
            raise ParseError(f"bad token {tok!r}; expected -1, 0 or 1", pos)
        pos += len(tok)
    return tuple(out)


def format_compact(s: Sequence[int]) -> str:
    return "".join("+" if a == 1 else "-" if a == -1 else "0" for a in s)


def format_numeric(s: Sequence[int]) -> str:
    return " ".join(str(a) for a in s)


# vertices -----------------------------------------------------------------

@dataclass(frozen=True, order=True, slots=True)
class Vertex:
    """A binary word ``a_1 ... a_n``; ``mask`` has ``a_1`` as its top bit.

    With that encoding integer order on masks is lexicographic order on the
    words, so sorting vertices of one order sorts them lexicographically.
    """

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 1:
            raise VertexError(f"vertex length must be >= 1, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise VertexError(f"mask {self.mask} out of range for n={self.n}")

    @classmethod
    def from_coords(cls, coords: Iterable[int]) -> "Vertex":
        coords = tuple(coords)
        mask = 0
        for i, a in enumerate(coords):
            if a not in (0, 1):
                raise VertexError(f"coordinate {i + 1} is {a!r}, not 0 or 1")
            mask = (mask << 1) | a
        return cls(len(coords), mask)

    @classmethod
    def parse(cls, text: str) -> "Vertex":
        s = text.strip()
        if not s:
            raise ParseError("empty vertex", 0)
        offset = len(text) - len(text.lstrip())
        for k, ch in enumerate(s):
            if ch not in "01":
                raise ParseError(f"unexpected character {ch!r} in vertex", offset + k)
        return cls(len(s), int(s, 2))

    @classmethod
    def zero(cls, n: int) -> "Vertex":
        return cls(n, 0)

    @classmethod
    def one(cls, n: int) -> "Vertex":
        return cls(n, (1 << n) - 1)

    @property
    def coords(self) -> tuple[int, ...]:
        n, m = self.n, self.mask
        return tuple((m >> (n - 1 - i)) & 1 for i in range(n))

    def __str__(self) -> str:
        return format(self.mask, f"0{self.n}b")

    def __repr__(self) -> str:
        return f"Vertex('{self}')"

    def __len__(self) -> int:
        return self.n


def as_vertex(v) -> Vertex:
    """Coerce a Vertex, bitstring or coordinate sequence to a Vertex."""
    if isinstance(v, Vertex):
        return v
    if isinstance(v, str):
        return Vertex.parse(v)
    return Vertex.from_coords(v)


def complement(v) -> Vertex:
    v = as_vertex(v)
    return Vertex(v.n, v.mask ^ ((1 << v.n) - 1))


def rank(v) -> int:
    return as_vertex(v).mask.bit_count()


def vertex_difference(x: Vertex, y: Vertex) -> tuple[int, ...]:
    """Coordinatewise ``y - x``."""
    if x.n != y.n:
        raise VertexError(f"length mismatch: {x.n} vs {y.n}")
    return tuple(b - a for a, b in zip(x.coords, y.coords))
