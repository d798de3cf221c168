"""Both kernel backends against each other and against slow references."""

import itertools

import pytest

from asmposet import _kernels, _pykernels, poset

from conftest import brute_is_alternating


def test_selected_backend_is_known():
    assert _kernels.BACKEND in _kernels.backends()


@pytest.mark.parametrize("n", range(1, 8))
def test_cover_masks_against_scan(kernels, n):
    for x in range(1 << n):
        xs = [(x >> (n - 1 - i)) & 1 for i in range(n)]
        ups, downs = [], []
        for y in range(1 << n):
            ys = [(y >> (n - 1 - i)) & 1 for i in range(n)]
            if brute_is_alternating([b - a for a, b in zip(xs, ys)]):
                ups.append(y)
            if brute_is_alternating([a - b for a, b in zip(xs, ys)]):
                downs.append(y)
        assert kernels.up_cover_masks(x, n) == ups
        assert kernels.down_cover_masks(x, n) == downs


@pytest.mark.parametrize("n", range(1, 10))
def test_count_matches_layered_dp(kernels, n):
    assert kernels.count_chains(n) == poset.count_maximal_chains_layered(n)


def test_count_backends_agree_large(kernels):
    # exceeds 64 bits, so the compiled multi-word accumulator is exercised
    assert kernels.count_chains(13) == _pykernels.count_chains(13)
    assert kernels.count_chains(14) == _pykernels.count_chains(14)


@pytest.mark.parametrize("n", range(1, 7))
def test_chain_masks_agree(kernels, n):
    assert list(kernels.chain_masks(n)) == list(_pykernels.chain_masks(n))


def test_chain_masks_prefix(kernels):
    n = 4
    full = list(kernels.chain_masks(n))
    for first in kernels.up_cover_masks(0, n):
        sub = list(kernels.chain_masks(n, [0, first]))
        assert sub == [c for c in full if c[1] == first]
    assert list(kernels.chain_masks(n, [1])) == []
    assert list(kernels.chain_masks(1, [0, 1])) == [(0, 1)]


def test_chain_masks_are_chains(kernels):
    n = 5
    for c in kernels.chain_masks(n):
        assert len(c) == n + 1 and c[0] == 0 and c[-1] == 2 ** n - 1
        for a, b in itertools.pairwise(c):
            assert b in kernels.up_cover_masks(a, n)
