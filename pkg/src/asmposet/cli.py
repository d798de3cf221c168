"""``asmposet`` command line.

Exit codes: 0 success, 1 domain or validation failure, 2 usage error.
Streams go to stdout one record per line; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import asm, poset, seqcore, symmetry, verify
from .errors import AsmPosetError

_FORMATS = {
    "alt": ("compact", ["compact", "numeric", "json"]),
    "chains-enumerate": ("json", ["json", "text"]),
    "asm-enumerate": ("json", ["json", "text"]),
    "asm-to-chain": ("json", ["json", "text"]),
    "chain-to-asm": ("text", ["text", "json"]),
    "hasse": ("edgelist", ["edgelist", "dot", "json"]),
    "theta-cycles": ("tuple", ["tuple", "bits"]),
    "orbits": ("text", ["text", "json"]),
}


class _Usage(Exception):
    pass


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def _n_in(n, lo, hi, what, force=False, forced_hi=None):
    top = forced_hi if force and forced_hi is not None else hi
    if not lo <= n <= top:
        hint = " (use --force to raise the limit)" if forced_hi and not force else ""
        raise _Usage(f"{what}: n must be in {lo}..{top}{hint}")


def _fmt(args, key):
    default, choices = _FORMATS[key]
    f = args.format or getattr(args, "global_format", None) or default
    if f not in choices:
        raise _Usage(f"--format must be one of {', '.join(choices)}")
    return f


def _out(line=""):
    sys.stdout.write(line + "\n")


def _diag(args, msg):
    if not args.quiet:
        sys.stderr.write(msg + "\n")


# commands -----------------------------------------------------------------

def cmd_alt_list(args):
    _n_in(args.n, 1, seqcore.MAX_ENUM_N, "alt list")
    fmt = _fmt(args, "alt")
    for s in seqcore.enumerate_alternating(args.n):
        if fmt == "compact":
            _out(seqcore.format_compact(s))
        elif fmt == "numeric":
            _out(seqcore.format_numeric(s))
        else:
            _out(json.dumps(list(s)))
    return 0


def cmd_chains(args):
    if args.action == "count":
        _n_in(args.n, 1, poset.COUNT_MAX_N, "chains count")
        _out(str(poset.count_maximal_chains(args.n)))
        return 0
    _n_in(args.n, 1, poset.ENUM_MAX_N, "chains enumerate", args.force, poset.COUNT_MAX_N)
    fmt = _fmt(args, "chains-enumerate")
    for c in poset.enumerate_maximal_chains(args.n, force=args.force, workers=args.workers):
        _out(poset.chain_json(c) if fmt == "json" else str(c))
    return 0


def _emit_asm(a, fmt):
    if fmt == "json":
        _out(json.dumps(a.to_json(), separators=(",", ":")))
    else:
        _out(asm.serialize_asm(a))
        _out()


def cmd_asm(args):
    if args.action == "validate":
        a = asm.parse_asm(_read(args.source))
        _diag(args, f"valid ASM of order {a.n}")
        return 0
    if args.action == "to-chain":
        a = asm.parse_asm(_read(args.source))
        c = poset.asm_to_chain(a)
        fmt = _fmt(args, "asm-to-chain")
        _out(poset.chain_json(c) if fmt == "json" else str(c))
        return 0
    fmt = _fmt(args, "asm-enumerate")
    method = args.method
    if method == "exhaustive":
        _n_in(args.n, 1, asm.EXHAUSTIVE_MAX_N, "asm enumerate --method exhaustive")
        it = asm.enumerate_asms_exhaustive(args.n)
    elif method == "backtrack":
        _n_in(args.n, 1, asm.BACKTRACK_MAX_N, "asm enumerate --method backtrack")
        it = asm.enumerate_asms_backtrack(args.n)
    else:
        _n_in(args.n, 1, poset.ENUM_MAX_N, "asm enumerate --method chains",
              args.force, poset.COUNT_MAX_N)
        it = (poset.chain_to_asm(c)
              for c in poset.enumerate_maximal_chains(args.n, force=args.force))
    for a in it:
        _emit_asm(a, fmt)
    return 0


def cmd_chain_to_asm(args):
    c = poset.parse_chain(_read(args.source))
    a = poset.chain_to_asm(c)
    fmt = _fmt(args, "chain-to-asm")
    if fmt == "json":
        _out(json.dumps(a.to_json(), separators=(",", ":")))
    else:
        _out(asm.serialize_asm(a))
    return 0


def cmd_hasse_export(args):
    _n_in(args.n, 1, 14, "hasse export", args.force, poset.HASSE_MAX_N)
    fmt = _fmt(args, "hasse")
    if fmt == "edgelist":
        for line in poset.export_edgelist(args.n):
            _out(line)
    elif fmt == "dot":
        for line in poset.export_dot(args.n):
            _out(line)
    else:
        _out(poset.export_json(args.n))
    return 0


def _generators(spec):
    names = [g.strip() for g in spec.split(",") if g.strip()]
    bad = [g for g in names if g not in symmetry.NAMED_MAPS]
    if not names or bad:
        raise _Usage(f"--gen takes a comma list from {', '.join(symmetry.NAMED_MAPS)}")
    return names


def cmd_sym(args):
    if args.action == "check":
        _n_in(args.n, 1, 10, "sym check")
        ok = True
        for name in ("theta", "tau"):
            res = symmetry.is_graph_automorphism(name, args.n)
            ok &= res
            _out(f"{name}: {'automorphism' if res else 'NOT an automorphism'}")
        _out(f"realized group order: {symmetry.group_order(args.n)}")
        return 0 if ok else 1
    _n_in(args.n, 1, symmetry.GROUP_MAX_N, f"sym {args.action}")
    if args.action == "theta-cycles":
        style = _fmt(args, "theta-cycles")
        if args.start:
            v = seqcore.Vertex.parse(args.start)
            if v.n != args.n:
                raise _Usage(f"--start has length {v.n}, expected {args.n}")
            cycles = [symmetry.theta_cycle(v)]
        else:
            cycles = symmetry.theta_cycles(args.n)
        for cyc in cycles:
            _out(symmetry.format_cycle(cyc, style))
        return 0
    fmt = _fmt(args, "orbits")
    orbits = symmetry.vertex_orbits(args.n, _generators(args.gen))
    if fmt == "json":
        _out(json.dumps({"orbits": [[str(v) for v in o] for o in orbits]},
                        separators=(",", ":")))
    else:
        for o in orbits:
            _out(" ".join(str(v) for v in o))
    return 0


def cmd_verify(args):
    _n_in(args.n_max, 1, verify.MAX_VERIFY_N, "verify")
    ctx = verify.injected_fault(args.inject_fault) if args.inject_fault else _nullctx()
    failed = 0
    with ctx:
        for r in verify.run(args.n_max):
            if not r.passed:
                failed += 1
            if not args.quiet or not r.passed:
                _out(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<36} {r.detail}")
            if not r.passed:
                break
    _out("all checks passed" if not failed else "verification FAILED")
    return 1 if failed else 0


class _nullctx:
    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


# parser -------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default=None, help="output format")
    common.add_argument("--force", action="store_true", help="lift enumeration guards")
    common.add_argument("--quiet", action="store_true", help="suppress diagnostics")

    p = argparse.ArgumentParser(prog="asmposet", description=__doc__.splitlines()[0])
    p.add_argument("--format", dest="global_format", default=None)
    p.add_argument("--force", dest="global_force", action="store_true")
    p.add_argument("--quiet", dest="global_quiet", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    alt = sub.add_parser("alt", help="alternating sequences")
    altsub = alt.add_subparsers(dest="action", required=True)
    a = altsub.add_parser("list", parents=[common], help="list Alt_n (compact|numeric|json)")
    a.add_argument("n", type=int)
    a.set_defaults(func=cmd_alt_list)

    ch = sub.add_parser("chains", help="maximal chains")
    chsub = ch.add_subparsers(dest="action", required=True)
    c = chsub.add_parser("count", parents=[common], help="count maximal chains")
    c.add_argument("n", type=int)
    c.set_defaults(func=cmd_chains)
    c = chsub.add_parser("enumerate", parents=[common], help="stream maximal chains")
    c.add_argument("n", type=int)
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=cmd_chains)

    am = sub.add_parser("asm", help="alternating sign matrices")
    amsub = am.add_subparsers(dest="action", required=True)
    v = amsub.add_parser("validate", parents=[common], help="validate a matrix")
    v.add_argument("source", help="file path or - for stdin")
    v.set_defaults(func=cmd_asm)
    e = amsub.add_parser("enumerate", parents=[common], help="stream all ASMs of order n")
    e.add_argument("n", type=int)
    e.add_argument("--method", choices=["chains", "backtrack", "exhaustive"], default="chains")
    e.set_defaults(func=cmd_asm)
    t = amsub.add_parser("to-chain", parents=[common], help="ASM to maximal chain")
    t.add_argument("source")
    t.set_defaults(func=cmd_asm)

    ca = sub.add_parser("chain-to-asm", parents=[common], help="maximal chain to ASM")
    ca.add_argument("source", help="chain JSON or bitstrings; file path or -")
    ca.set_defaults(func=cmd_chain_to_asm)

    h = sub.add_parser("hasse", help="Hasse diagram export")
    hsub = h.add_subparsers(dest="action", required=True)
    hx = hsub.add_parser("export", parents=[common], help="edgelist|dot|json")
    hx.add_argument("n", type=int)
    hx.set_defaults(func=cmd_hasse_export)

    sy = sub.add_parser("sym", help="dihedral symmetries")
    sysub = sy.add_subparsers(dest="action", required=True)
    tc = sysub.add_parser("theta-cycles", parents=[common], help="theta cycles")
    tc.add_argument("n", type=int)
    tc.add_argument("--start", help="print only the cycle through this bitstring")
    tc.set_defaults(func=cmd_sym)
    ob = sysub.add_parser("orbits", parents=[common], help="orbit partition")
    ob.add_argument("n", type=int)
    ob.add_argument("--gen", default="theta", help="comma list, e.g. theta,tau")
    ob.set_defaults(func=cmd_sym)
    ck = sysub.add_parser("check", parents=[common], help="automorphism check")
    ck.add_argument("n", type=int)
    ck.set_defaults(func=cmd_sym)

    vf = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    vf.add_argument("n_max", type=int)
    vf.add_argument("--inject-fault", choices=sorted(verify.FAULTS), help=argparse.SUPPRESS)
    vf.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    args.force = args.force or args.global_force
    args.quiet = args.quiet or args.global_quiet
    try:
        return args.func(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"asmposet: error: {exc}\n")
        return 2
    except AsmPosetError as exc:
        sys.stderr.write(f"asmposet: {exc}\n")
        return 1
    except OSError as exc:
        if isinstance(exc, BrokenPipeError):
            return 0
        sys.stderr.write(f"asmposet: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
