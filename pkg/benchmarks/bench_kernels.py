"""Compare the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import time

from ugig import _kernels_py
from ugig.graph import _csr, cycle, k33_all_paths, random_tree, t_family

try:
    from ugig import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def girth_cases():
    rng = random.Random(1)
    return {
        "C200": cycle(200),
        "t_family(3)": t_family(3),
        "k33_all_paths": k33_all_paths(),
        "tree(2000)": random_tree(2000, rng),
    }


def cross_cases():
    rng = random.Random(2)
    cases = {}
    for n in (6, 7, 8):
        masks = [rng.getrandbits(n) | (1 << rng.randrange(n)) for _ in range(n)]
        cases[f"random {n}x{n}"] = (masks, n)
    cases["cross 3x3 pad 8"] = ([0b010, 0b101, 0b010] + [0b11111111] * 5, 8)
    return cases


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    impls = [("python", _kernels_py)] + ([("cython", _kernels_c)] if _kernels_c else [])
    if _kernels_c is None:
        print("compiled kernels not built; only the fallback is timed")
    print(f"{'kernel':<12}{'case':<20}" + "".join(f"{name:>12}" for name, _ in impls) + f"{'speedup':>10}")
    for label, g in girth_cases().items():
        n, indptr, indices = _csr(g)
        row = [best_of(lambda m=m: m.girth_csr(n, indptr, indices), args.repeat) for _, m in impls]
        assert len({r[1] for r in row}) == 1, "implementations disagree"
        _report("girth", label, row)
    for label, (masks, ncols) in cross_cases().items():
        row = [best_of(lambda m=m: m.cross_free_search(masks, ncols), args.repeat) for _, m in impls]
        assert len({r[1] is None for r in row}) == 1, "implementations disagree"
        _report("cross-free", label, row)


def _report(kernel, label, row):
    cells = "".join(f"{t * 1e3:>10.2f}ms" for t, _ in row)
    speed = f"{row[0][0] / row[-1][0]:>9.1f}x" if len(row) > 1 else ""
    print(f"{kernel:<12}{label:<20}{cells}{speed}")


if __name__ == "__main__":
    main()
