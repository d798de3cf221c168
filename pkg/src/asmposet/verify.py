"""Invariant suite shared by ``asmposet verify`` and the tests.

Every check runs for orders ``1..min(cap, n_max)`` where ``cap`` is the
size the invariant is meant to be exhausted at.  Checks fail fast and report
the first counterexample.
"""

from __future__ import annotations

import contextlib
import itertools
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from . import asm, poset, seqcore, symmetry
from .errors import AsmPosetError
from .seqcore import Vertex

MAX_VERIFY_N = 12


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


class _Fail(Exception):
    pass


def _expect(cond, msg):
    if not cond:
        raise _Fail(msg)


_CHECKS: list[tuple[str, int, Callable[[int], str]]] = []


def _check(name, cap):
    def deco(fn):
        _CHECKS.append((name, cap, fn))
        return fn
    return deco


def _prefix_ok(s):
    acc = 0
    for a in s:
        acc += a
        if acc not in (0, 1):
            return False
    return acc == 1


@_check("alternating-prefix-sums", 8)
def _alt_prefix(m):
    for n in range(1, m + 1):
        for s in itertools.product((-1, 0, 1), repeat=n):
            _expect(seqcore.is_alternating(s) == _prefix_ok(s),
                    f"is_alternating{s} disagrees with prefix-sum test")
    return f"all of {{-1,0,1}}^n, n<={m}"


@_check("alternating-count", 8)
def _alt_count(m):
    for n in range(1, m + 1):
        brute = sum(1 for s in itertools.product((-1, 0, 1), repeat=n)
                    if seqcore.is_alternating(s))
        got = len(seqcore.enumerate_alternating(n))
        _expect(brute == got == 2 ** (n - 1),
                f"n={n}: brute {brute}, enumerated {got}, law {2 ** (n - 1)}")
    return f"|Alt_n| = 2^(n-1), n<={m}"


@_check("alternating-enumeration-order", 8)
def _alt_order(m):
    for n in range(1, m + 1):
        seqs = seqcore.enumerate_alternating(n)
        for s in seqs:
            _expect(seqcore.is_alternating(s), f"enumerated {s} is not alternating")
        for a, b in zip(seqs, seqs[1:]):
            _expect(a < b, f"n={n}: {a} !< {b}")
    return f"n<={m}"


@_check("constrained-alternating-round-trip", 8)
def _round_trip(m):
    for n in range(1, m + 1):
        for mid in itertools.product((0, 1), repeat=n - 1):
            sigma = (0,) + mid + (1,)
            _expect(seqcore.partial_sums(seqcore.differences(sigma)) == sigma,
                    f"round trip fails on {sigma}")
        for a in seqcore.enumerate_alternating(n):
            _expect(seqcore.differences(seqcore.partial_sums(a)) == a,
                    f"round trip fails on {a}")
    return f"constrained length<={m + 1}, alternating length<={m}"


@_check("asm-oracles-agree", 3)
def _oracles(m):
    for n in range(1, m + 1):
        ex = asm.enumerate_asms_exhaustive(n)
        bt = list(asm.enumerate_asms_backtrack(n))
        _expect(ex == bt, f"n={n}: exhaustive {len(ex)} vs backtrack {len(bt)}")
    return f"n<={m}"


@_check("asm-transpose", 4)
def _transpose(m):
    for n in range(1, m + 1):
        for a in asm.enumerate_asms_backtrack(n):
            _expect(asm.is_asm(a.transpose().rows), f"transpose of {a.rows} rejected")
    return f"n<={m}"


@_check("count-equals-asm-oracle", 4)
def _count_oracle(m):
    parts = []
    for n in range(1, m + 1):
        oracle = (len(asm.enumerate_asms_exhaustive(n)) if n <= 3
                  else sum(1 for _ in asm.enumerate_asms_backtrack(n)))
        c = poset.count_maximal_chains(n)
        _expect(c == oracle, f"count({n})={c} but oracle has {oracle}")
        parts.append(f"count({n})={c} == oracle")
    return ", ".join(parts)


@_check("graded", 10)
def _graded(m):
    for n in range(1, m + 1):
        for e in poset.hasse_edges(n):
            _expect(seqcore.rank(e.upper) == seqcore.rank(e.lower) + 1,
                    f"edge {e} does not raise rank by one")
    return f"n<={m}"


@_check("covers-are-genuine", 6)
def _genuine(m):
    for n in range(1, m + 1):
        verts = list(poset.all_vertices(n))
        for e in poset.hasse_edges(n):
            for z in verts:
                if z in (e.lower, e.upper):
                    continue
                _expect(not (poset.leq(e.lower, z) and poset.leq(z, e.upper)),
                        f"{z} lies strictly between {e.lower} and {e.upper}")
    return f"n<={m}"


@_check("cube-containment", 10)
def _cube(m):
    for n in range(1, m + 1):
        edges = {(e.lower.mask, e.upper.mask) for e in poset.hasse_edges(n)}
        for x in range(1 << n):
            for b in range(n):
                if not x >> b & 1:
                    _expect((x, x | 1 << b) in edges,
                            f"cube edge {Vertex(n, x)}-{Vertex(n, x | 1 << b)} missing")
    return f"n*2^(n-1) unit flips present, n<={m}"


@_check("cover-generation-agrees", 8)
def _cover_gen(m):
    for n in range(1, m + 1):
        for v in poset.all_vertices(n):
            fast = poset.up_covers(v)
            brute = poset.up_covers_bruteforce(v)
            _expect(fast == brute, f"up_covers({v}) = {fast}, brute force {brute}")
    return f"kernel vs is_cover scan, n<={m}"


@_check("bijection-round-trip", 5)
def _bijection(m):
    total = 0
    for n in range(1, m + 1):
        mats = set()
        for c in poset.enumerate_maximal_chains(n):
            a = poset.chain_to_asm(c)
            _expect(asm.is_asm(a.rows), f"{c} gave invalid matrix")
            _expect(poset.asm_to_chain(a) == c, f"chain {c} does not round-trip")
            _expect(poset.chain_to_asm(poset.asm_to_chain(a)) == a,
                    f"matrix {a.rows} does not round-trip")
            mats.add(a.rows)
            total += 1
        if n <= 4:
            oracle = {a.rows for a in asm.enumerate_asms_backtrack(n)}
            _expect(mats == oracle, f"n={n}: chain matrices differ from oracle set")
    return f"{total} chains, n<={m}"


@_check("column-trajectories-constrained", 5)
def _columns(m):
    for n in range(1, m + 1):
        for c in poset.enumerate_maximal_chains(n):
            for j, traj in enumerate(poset.column_trajectories(c), 1):
                _expect(seqcore.is_constrained(traj),
                        f"column {j} of {c} gives {traj}")
    return f"n<={m}"


@_check("count-equals-enumeration", 6)
def _count_enum(m):
    for n in range(1, m + 1):
        c = poset.count_maximal_chains(n)
        e = sum(1 for _ in poset.enumerate_maximal_chains(n))
        layered = poset.count_maximal_chains_layered(n)
        _expect(c == e == layered, f"n={n}: kernel {c}, layered {layered}, enumerated {e}")
    return f"n<={m}"


@_check("complement-duality", 8)
def _duality(m):
    for n in range(1, m + 1):
        verts = list(poset.all_vertices(n))
        for x in verts:
            for y in verts:
                _expect(poset.is_cover(x, y) ==
                        poset.is_cover(seqcore.complement(y), seqcore.complement(x)),
                        f"duality fails at {x}, {y}")
    return f"n<={m}"


def _perm(name, n):
    return symmetry.as_permutation(name, n)


def _power(p, k):
    size = len(p)
    out = list(range(size))
    for _ in range(k):
        out = [p[i] for i in out]
    return tuple(out)


def _comp(p, q):
    # p after q
    return tuple(p[q[i]] for i in range(len(q)))


@_check("group-relations", 12)
def _relations(m):
    for n in range(1, m + 1):
        th, ti, ta = _perm("theta", n), _perm("theta_inv", n), _perm("tau", n)
        ident = tuple(range(1 << n))
        comp = tuple(seqcore.complement(Vertex(n, x)).mask for x in ident)
        _expect(_power(th, 2 * n) == ident, f"theta^(2n) != id at n={n}")
        _expect(_power(th, n) == comp, f"theta^n != complement at n={n}")
        _expect(_comp(ta, ta) == ident, f"tau^2 != id at n={n}")
        _expect(_comp(ti, th) == ident, f"theta_inv . theta != id at n={n}")
        _expect(_comp(_perm("xi", n), _perm("rho", n)) == th, f"xi . rho != theta at n={n}")
        _expect(_comp(th, ta) == _comp(ta, ti), f"theta.tau != tau.theta_inv at n={n}")
    return f"n<={m}"


@_check("automorphisms", 10)
def _auto(m):
    for n in range(1, m + 1):
        for name in ("theta", "tau"):
            _expect(symmetry.is_graph_automorphism(name, n), f"{name} not an automorphism at n={n}")
    return f"theta, tau, n<={m}"


@_check("compose-matches-action", 6)
def _compose(m):
    for n in range(1, m + 1):
        els = symmetry.all_elements(n)
        perms = {g: g.permutation() for g in els}
        for g in els:
            _expect(symmetry.compose(g, g.inverse()) == symmetry.DihedralElement.identity(n),
                    f"{g} . inverse != id")
            for h in els:
                gh = symmetry.compose(g, h)
                _expect(perms[gh] == _comp(perms[g], perms[h]),
                        f"compose({g}, {h}) acts wrongly")
                for k in els:
                    _expect(symmetry.compose(gh, k) ==
                            symmetry.compose(g, symmetry.compose(h, k)),
                            f"associativity fails at {g}, {h}, {k}")
    return f"n<={m}"


@_check("theta-orbit-sizes-divide-2n", 12)
def _orbits(m):
    for n in range(1, m + 1):
        for orb in symmetry.vertex_orbits(n, ["theta"]):
            _expect((2 * n) % len(orb) == 0, f"orbit of size {len(orb)} at n={n}")
    return f"n<={m}"


def check_names() -> list[str]:
    return [name for name, _, _ in _CHECKS]


def run(n_max: int) -> Iterator[CheckResult]:
    """Run every check, yielding results as they complete."""
    if not 1 <= n_max <= MAX_VERIFY_N:
        raise ValueError(f"n_max must be in 1..{MAX_VERIFY_N}")
    for name, cap, fn in _CHECKS:
        t0 = time.perf_counter()
        try:
            detail = fn(min(cap, n_max))
            ok = True
        except _Fail as exc:
            detail, ok = f"counterexample: {exc}", False
        except AsmPosetError as exc:
            detail, ok = f"counterexample: unexpected {type(exc).__name__}: {exc}", False
        yield CheckResult(name, ok, detail, time.perf_counter() - t0)


# fault injection for sensitivity testing ----------------------------------

def _alt_accepts_double_plus(s):
    # accepts (1, 1, -1, ...) style runs: only checks the total
    return sum(s) == 1 and all(a in (-1, 0, 1) for a in s)


def _alt_rejects_long(s):
    nz = [a for a in s if a]
    return bool(nz) and len(nz) <= 1 and nz[0] == 1


FAULTS = {
    "alt-total-only": _alt_accepts_double_plus,
    "alt-single-only": _alt_rejects_long,
}


@contextlib.contextmanager
def injected_fault(name: str):
    """Temporarily replace ``seqcore.is_alternating`` with a broken version."""
    original = seqcore.is_alternating
    seqcore.is_alternating = FAULTS[name]
    try:
        yield
    finally:
        seqcore.is_alternating = original
