"""Alternating sign matrices: validation, text/JSON formats, and two
independent enumeration oracles.

Neither oracle touches the poset code.  ``enumerate_asms_exhaustive`` filters
every grid over {-1, 0, 1}; ``enumerate_asms_backtrack`` builds rows one at a
time and prunes on the running column sums.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import seqcore
from .errors import (
    BadEntry,
    ColumnNotAlternating,
    NonSquare,
    ParseError,
    RangeError,
    RowNotAlternating,
    SequenceError,
)

EXHAUSTIVE_MAX_N = 3
BACKTRACK_MAX_N = 6


@dataclass(frozen=True)
class Asm:
    """A validated alternating sign matrix; ``rows`` is row-major, top first."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def column(self, j: int) -> tuple[int, ...]:
        """Column ``j`` (0-based), top to bottom."""
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Asm":
        return Asm(self.n, tuple(zip(*self.rows)))

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    def __str__(self) -> str:
        return serialize_asm(self)


def validate_asm(matrix: Sequence[Sequence[int]]) -> Asm:
    """Check ``matrix`` and return it as an :class:`Asm`.

    Entries are checked first, then rows top to bottom, then columns left to
    right; the first failure raises with 1-based indices.
    """
    rows = [tuple(r) for r in matrix]
    n = len(rows)
    if n == 0:
        raise NonSquare("empty matrix")
    for i, r in enumerate(rows, 1):
        if len(r) != n:
            raise NonSquare(f"row {i} has {len(r)} entries, expected {n}")
    for i, r in enumerate(rows, 1):
        for j, a in enumerate(r, 1):
            if isinstance(a, bool) or a not in (-1, 0, 1):
                raise BadEntry(i, j, a)
    for i, r in enumerate(rows, 1):
        try:
            seqcore.check_alternating(r)
        except SequenceError as exc:
            raise RowNotAlternating(i, str(exc)) from None
    for j in range(n):
        try:
            seqcore.check_alternating([r[j] for r in rows])
        except SequenceError as exc:
            raise ColumnNotAlternating(j + 1, str(exc)) from None
    return Asm(n, tuple(rows))


def is_asm(matrix) -> bool:
    try:
        validate_asm(matrix)
    except (NonSquare, BadEntry, RowNotAlternating, ColumnNotAlternating):
        return False
    return True


def permutation_matrix(perm: Sequence[int]) -> Asm:
    """ASM of a permutation given as 0-based images of rows."""
    n = len(perm)
    return validate_asm([[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)])


def enumerate_asms_exhaustive(n: int) -> list[Asm]:
    """Filter all 3**(n*n) grids; row-major lexicographic with -1 < 0 < 1."""
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise RangeError("enumerate_asms_exhaustive", n, 1, EXHAUSTIVE_MAX_N)
    out = []
    for flat in itertools.product((-1, 0, 1), repeat=n * n):
        grid = [flat[i * n:(i + 1) * n] for i in range(n)]
        if is_asm(grid):
            out.append(Asm(n, tuple(grid)))
    return out


def _alternating_rows(n: int) -> list[tuple[int, ...]]:
    # independent of seqcore.enumerate_alternating: filter all sign rows
    return [r for r in itertools.product((-1, 0, 1), repeat=n) if seqcore.is_alternating(r)]


def enumerate_asms_backtrack(n: int) -> Iterator[Asm]:
    """Row-by-row search, lexicographic by row tuples.

    A candidate row is accepted only if every running column sum stays in
    {0, 1}; completed grids need all column sums equal to 1 and are passed
    through :func:`validate_asm` once more.
    """
    if not 1 <= n <= BACKTRACK_MAX_N:
        raise RangeError("enumerate_asms_backtrack", n, 1, BACKTRACK_MAX_N)
    candidates = _alternating_rows(n)
    chosen: list[tuple[int, ...]] = []
    colsum = [0] * n

    def rec(depth: int):
        if depth == n:
            if all(c == 1 for c in colsum):
                yield validate_asm(chosen)
            return
        for row in candidates:
            ok = True
            for j in range(n):
                c = colsum[j] + row[j]
                if c < 0 or c > 1:
                    ok = False
                    break
            if not ok:
                continue
            for j in range(n):
                colsum[j] += row[j]
            chosen.append(row)
            yield from rec(depth + 1)
            chosen.pop()
            for j in range(n):
                colsum[j] -= row[j]

    yield from rec(0)


# text formats -------------------------------------------------------------

def parse_asm(text: str) -> Asm:
    """Parse whitespace-separated rows, or the JSON form ``{"n":..,"rows":..}``."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty matrix text", 0)
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
        rows = obj.get("rows") if isinstance(obj, dict) else None
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ParseError("JSON matrix needs a 'rows' list of lists", 0)
        if "n" in obj and obj["n"] != len(rows):
            raise NonSquare(f"declared n={obj['n']} but {len(rows)} rows given")
        return validate_asm(rows)

    rows = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.rstrip("\r\n")
        row = []
        pos = 0
        for tok in body.split():
            pos = body.index(tok, pos)
            norm = tok.replace("−", "-")
            if norm not in ("-1", "0", "1", "+1"):
                raise ParseError(f"bad token {tok!r} in row {len(rows) + 1}", offset + pos)
            row.append(int(norm))
            pos += len(tok)
        if row:
            if rows and len(row) != len(rows[0]):
                raise ParseError(
                    f"ragged rows: row {len(rows) + 1} has {len(row)} entries, "
                    f"row 1 has {len(rows[0])}", offset)
            rows.append(row)
        offset += len(line)
    return validate_asm(rows)


def serialize_asm(a: Asm) -> str:
    return "\n".join(" ".join(str(x) for x in r) for r in a.rows)
