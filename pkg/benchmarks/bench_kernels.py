"""Compare the compiled Henkin kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--size 3] [--repeat 3]

Each workload is run on both implementations; outputs are compared for
equality before timings are reported.
"""

from __future__ import annotations

import argparse
import time

from solnd import _kernels_py as py
from solnd.kernels import compiled_impl


def _time(fn, repeat: int):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def workloads(n: int):
    yield f"henkin_table(n={n}, functions)", lambda impl: impl.henkin_table(n, "functions")
    yield f"henkin_table(n={min(n, 2)}, relations)", lambda impl: impl.henkin_table(min(n, 2), "relations")
    yield f"separator_search(1..{n})", lambda impl: impl.separator_search(1, n)

    def linear(impl):
        return sum(
            impl.linear_first(n, T, B, K) + impl.linear_second(n, T, B, K)
            for T in range(1 << n)
            for B in range(1 << n)
            for K in range(1 << (n * n))
        )

    yield f"linear sweep (n={n})", linear


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if compiled_impl is None:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")
    print(f"{'workload':<36} {'python s':>10} {'cython s':>10} {'speedup':>9}")
    for name, fn in workloads(args.size):
        tp, op = _time(lambda: fn(py), 1)
        tc, oc = _time(lambda: fn(compiled_impl), args.repeat)
        if op != oc:
            raise SystemExit(f"{name}: implementations disagree")
        print(f"{name:<36} {tp:>10.4f} {tc:>10.4f} {tp / max(tc, 1e-9):>8.1f}x")


if __name__ == "__main__":
    main()
