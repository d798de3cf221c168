import itertools
import json

import pytest

from asmposet import asm
from asmposet.errors import (
    BadEntry,
    ColumnNotAlternating,
    NonSquare,
    ParseError,
    RangeError,
    RowNotAlternating,
)

from conftest import brute_is_alternating

NONPERM3 = ((0, 1, 0), (1, -1, 1), (0, 1, 0))


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def oracle_asms(n):
    """Grids whose rows and columns pass the prefix-sum test; shares no code."""
    out = []
    for flat in itertools.product((-1, 0, 1), repeat=n * n):
        rows = [flat[i * n:(i + 1) * n] for i in range(n)]
        if all(brute_is_alternating(r) for r in rows) and \
                all(brute_is_alternating(c) for c in zip(*rows)):
            out.append(tuple(rows))
    return out


@pytest.mark.parametrize("n", range(1, 6))
def test_identity_is_valid(n):
    a = asm.validate_asm(identity(n))
    assert a.n == n


def test_validate_examples():
    assert asm.validate_asm(NONPERM3).rows == NONPERM3
    with pytest.raises(RowNotAlternating) as exc:
        asm.validate_asm([[1, 1], [0, 0]])
    assert exc.value.i == 1


@pytest.mark.parametrize("grid, err, attrs", [
    ([[1, 0], [0]], NonSquare, {}),
    ([], NonSquare, {}),
    ([[1, 0], [0, 2]], BadEntry, {"i": 2, "j": 2}),
    ([[1, 0], [1, 0]], ColumnNotAlternating, {"j": 1}),
    ([[0, 1, 0], [1, 0, 0], [0, 0, 0]], RowNotAlternating, {"i": 3}),
    ([[1, 0, 0], [0, 1, 0], [-1, 0, 1]], RowNotAlternating, {"i": 3}),
])
def test_validate_diagnostics(grid, err, attrs):
    with pytest.raises(err) as exc:
        asm.validate_asm(grid)
    for k, v in attrs.items():
        assert getattr(exc.value, k) == v


def test_exhaustive_examples():
    assert [a.rows for a in asm.enumerate_asms_exhaustive(1)] == [((1,),)]
    two = [a.rows for a in asm.enumerate_asms_exhaustive(2)]
    assert two == [((0, 1), (1, 0)), ((1, 0), (0, 1))]
    three = {a.rows for a in asm.enumerate_asms_exhaustive(3)}
    perms = {asm.permutation_matrix(p).rows for p in itertools.permutations(range(3))}
    assert three == perms | {NONPERM3}
    assert len(three) == 7


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exhaustive_matches_independent_filter(n):
    assert [a.rows for a in asm.enumerate_asms_exhaustive(n)] == oracle_asms(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_oracles_agree(n):
    assert list(asm.enumerate_asms_backtrack(n)) == asm.enumerate_asms_exhaustive(n)


def test_backtrack_counts_and_order():
    counts = [sum(1 for _ in asm.enumerate_asms_backtrack(n)) for n in range(1, 6)]
    assert counts == [1, 2, 7, 42, 429]
    rows = [a.rows for a in asm.enumerate_asms_backtrack(4)]
    assert rows == sorted(rows)
    assert len(set(rows)) == len(rows)


@pytest.mark.parametrize("fn, n", [
    (asm.enumerate_asms_exhaustive, 4),
    (asm.enumerate_asms_exhaustive, 0),
    (lambda n: list(asm.enumerate_asms_backtrack(n)), 7),
])
def test_enumeration_guards(fn, n):
    with pytest.raises(RangeError):
        fn(n)


def test_transpose_closed():
    for n in range(1, 5):
        for a in asm.enumerate_asms_backtrack(n):
            assert asm.is_asm(a.transpose().rows)


def test_parse_examples():
    assert asm.parse_asm("0 1 0\n1 -1 1\n0 1 0").rows == NONPERM3
    assert asm.parse_asm("1").rows == ((1,),)
    with pytest.raises(RowNotAlternating) as exc:
        asm.parse_asm("1 1\n0 0")
    assert exc.value.i == 1


def test_parse_json_form():
    a = asm.parse_asm(json.dumps({"n": 3, "rows": [list(r) for r in NONPERM3]}))
    assert a.rows == NONPERM3
    assert asm.parse_asm(json.dumps(a.to_json())) == a
    with pytest.raises(NonSquare):
        asm.parse_asm('{"n": 2, "rows": [[1]]}')


@pytest.mark.parametrize("text, position", [
    ("1 0\n0 x", 6),
    ("1 0\n0 1 0", 4),
    ("", 0),
])
def test_parse_errors(text, position):
    with pytest.raises(ParseError) as exc:
        asm.parse_asm(text)
    assert exc.value.position == position


def test_serialize_round_trip():
    for n in range(1, 5):
        for a in asm.enumerate_asms_backtrack(n):
            text = asm.serialize_asm(a)
            assert asm.parse_asm(text) == a
            assert asm.serialize_asm(asm.parse_asm(text)) == text
    messy = "  0  1 0 \n\n1 -1  1\n 0 1 0\n"
    assert asm.serialize_asm(asm.parse_asm(messy)) == "0 1 0\n1 -1 1\n0 1 0"
