"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--max-n 16] [--repeat 3]
"""

import argparse
import time

from asmposet import _kernels


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=16)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _kernels.backends()
    if "cython" not in backends:
        print("compiled extension not built; only the fallback is timed")

    rows = []
    for n in range(10, args.max_n + 1, 2):
        rows.append((f"count_chains({n})", {name: (lambda k=k, n=n: k.count_chains(n))
                                             for name, k in backends.items()}))
    for n in (6, 7):
        rows.append((f"chain_masks({n})", {name: (lambda k=k, n=n: sum(1 for _ in k.chain_masks(n)))
                                            for name, k in backends.items()}))
    rows.append(("up_cover_masks(all, 12)",
                 {name: (lambda k=k: sum(len(k.up_cover_masks(x, 12)) for x in range(1 << 12)))
                  for name, k in backends.items()}))

    names = sorted(backends)
    print(f"{'kernel':<26}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for label, fns in rows:
        times = {}
        results = set()
        for name in names:
            t, out = best_of(fns[name], args.repeat)
            times[name] = t
            results.add(out)
        assert len(results) == 1, f"backends disagree on {label}"
        speed = times["python"] / times["cython"] if "cython" in times else 1.0
        print(f"{label:<26}" + "".join(f"{times[n]:>11.4f}s" for n in names) + f"{speed:>9.1f}x")


if __name__ == "__main__":
    main()
