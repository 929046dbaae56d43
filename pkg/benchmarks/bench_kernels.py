"""Time the compiled shuffle kernels against the pure-Python ones.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import timeit

from klrcluster import _pykernels, kernels
from klrcluster.words import dominant_words

CASES = [
    ((1, 2, 3, 1, 2), (2, 3, 1, 2)),
    ((2, 3, 4, 1, 2, 3), (3, 4, 1, 2, 3)),
    ((1, 2, 3, 4, 5, 1, 2), (4, 5, 2, 3, 4, 1, 2)),
]


def oracle_sweep(max_shuffle, n: int = 3, max_total: int = 7) -> int:
    words = [w.letters for w in dominant_words(n, max_total)]
    count = 0
    for a in words:
        for b in words:
            if len(a) + len(b) <= max_total:
                max_shuffle(a, b)
                count += 1
    return count


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled kernels are not built; only the Python timings are meaningful")
    backends = {"python": _pykernels, "compiled": kernels}
    print(f"{'case':<34}{'python ms':>12}{'compiled ms':>14}{'speedup':>10}")
    for a, b in CASES:
        for name in ("max_shuffle", "shuffle_terms"):
            times = {}
            for label, mod in backends.items():
                fn = getattr(mod, name)
                times[label] = min(timeit.repeat(lambda: fn(a, b), number=1, repeat=args.repeat)) * 1e3
            tag = f"{name} {len(a)}+{len(b)}"
            print(f"{tag:<34}{times['python']:>12.3f}{times['compiled']:>14.3f}"
                  f"{times['python'] / times['compiled']:>9.1f}x")
    sweep = {}
    for label, mod in backends.items():
        sweep[label] = min(timeit.repeat(lambda: oracle_sweep(mod.max_shuffle), number=1, repeat=3)) * 1e3
    print(f"{'oracle sweep rank 3 length<=7':<34}{sweep['python']:>12.1f}{sweep['compiled']:>14.1f}"
          f"{sweep['python'] / sweep['compiled']:>9.1f}x")


if __name__ == "__main__":
    main()
