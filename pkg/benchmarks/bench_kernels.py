"""Time the compiled and pure-Python chain kernels on the same label words.

    python benchmarks/bench_kernels.py [--rows N] [--width W] [--repeat R]
"""

import argparse
import timeit

import numpy as np

from glbranch import _kernels_py as python_impl
from glbranch import kernels


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=200_000)
    ap.add_argument("--width", type=int, default=10)
    ap.add_argument("--chain", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    words = rng.integers(-1, args.chain + 1, size=(args.rows, args.width))
    single = words[0].tolist()

    impls = [("python", python_impl)]
    if kernels.compiled_impl is not None:
        impls.append(("compiled", kernels.compiled_impl))
        want = python_impl.chain_contains_batch(words, args.chain)
        assert np.array_equal(kernels.compiled_impl.chain_contains_batch(words, args.chain), want)
    else:
        print("compiled extension not available; timing the Python kernels only")

    print(f"{args.rows} words of width {args.width}, chain length {args.chain}")
    best = {}
    for name, impl in impls:
        batch = min(timeit.repeat(lambda impl=impl: impl.chain_contains_batch(words, args.chain), number=1, repeat=args.repeat))
        loops = 20_000
        one = min(timeit.repeat(lambda impl=impl: impl.chain_contains(single, args.chain), number=loops, repeat=args.repeat)) / loops
        best[name] = (batch, one)
        print(f"{name:>9}: batch {batch * 1e3:9.2f} ms   single word {one * 1e6:7.2f} us")
    if len(best) == 2:
        print(f"batch speedup {best['python'][0] / best['compiled'][0]:.1f}x, "
              f"single-word ratio {best['python'][1] / best['compiled'][1]:.2f}x")


if __name__ == "__main__":
    main()
