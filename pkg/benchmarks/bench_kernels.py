"""Compare the compiled and pure-Python kernels on identical random inputs.

    python3 benchmarks/bench_kernels.py [--words 300] [--repeat 3] [--seed 0]
"""

import argparse
import random
import timeit

from mixedbraids import kernels

CASES = [(4, 20), (6, 40), (8, 64), (10, 128)]


def make_inputs(rng, n, length, count):
    return [[rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)] for _ in range(count)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--words", type=int, default=300)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    names = sorted(kernels.BACKENDS)
    if "cython" not in names:
        print("compiled kernels not built; timing the Python fallback only")
    print(f"{'kernel':<14}{'n':>4}{'len':>6}" + "".join(f"{name:>12}" for name in names)
          + ("   speedup" if len(names) == 2 else ""))
    for n, length in CASES:
        batch = make_inputs(rng, n, length, args.words)
        for kernel in ("normal_form", "crossing_sums"):
            times = {}
            for name in names:
                fn = getattr(kernels.BACKENDS[name], kernel)
                call = (lambda: [fn(n, w, 10**7) for w in batch]) if kernel == "normal_form" \
                    else (lambda: [fn(n, w) for w in batch])
                times[name] = min(timeit.repeat(call, number=1, repeat=args.repeat))
            row = f"{kernel:<14}{n:>4}{length:>6}" + "".join(f"{times[x] * 1e3:>10.1f}ms" for x in names)
            if len(names) == 2:
                row += f"{times['python'] / times['cython']:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
