"""Time the compiled and pure-Python kernels on the same random inputs.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--words 200] [--length 200]
"""

from __future__ import annotations

import argparse
import random
import timeit

from platmover import _kernels_py
from platmover.coloring import standard_coloring

try:
    from platmover import _kernels
except ImportError:
    _kernels = None


def make_inputs(words: int, length: int, seed: int = 0):
    rng = random.Random(seed)
    out = []
    for _ in range(words):
        d = rng.randint(3, 6)
        n = 2 * rng.randint(d + 1, d + 6)
        lo, hi = standard_coloring(d, n).arrays()
        idx = [rng.randrange(n - 1) for _ in range(length)]
        sgn = [rng.choice((1, -1)) for _ in range(length)]
        out.append((idx, sgn, lo, hi))
    return out


def run(backend, inputs, fn: str) -> None:
    f = getattr(backend, fn)
    for args in inputs:
        f(*args)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--words", type=int, default=200)
    ap.add_argument("--length", type=int, default=200)
    args = ap.parse_args()
    inputs = make_inputs(args.words, args.length)
    backends = [("python", _kernels_py)] + ([("cython", _kernels)] if _kernels else [])
    if _kernels is None:
        print("compiled kernels not built; timing the pure-Python backend only")
    for fn in ("transport", "chain_matrix"):
        times = {}
        for name, mod in backends:
            times[name] = min(timeit.repeat(lambda: run(mod, inputs, fn), number=1, repeat=args.repeat))
            print(f"{fn:13s} {name:7s} {times[name] * 1e3:9.2f} ms")
        if len(times) == 2:
            print(f"{fn:13s} speedup {times['python'] / times['cython']:8.1f}x")


if __name__ == "__main__":
    main()
