"""Time the compiled and pure-Python kernels on the same instances.

    python benchmarks/compare_backends.py --m-list 2000,8000 --k-list 2,4,6

Prints one row per (algorithm, m, k) with both timings and the speedup.
Baseline rows are skipped above --baseline-max-m (the pure-Python scan is slow).
"""

import argparse

from paulizeta import bench
from paulizeta.cli import _int_list
from paulizeta.table import available_backends


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--m-list", type=_int_list, default=[2000, 8000])
    parser.add_argument("--k-list", type=_int_list, default=[2, 4, 6])
    parser.add_argument("--n", type=int, default=256)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--baseline-max-m", type=int, default=2000)
    args = parser.parse_args()

    if available_backends() != ["ext", "python"]:
        raise SystemExit("compiled kernels are not built; nothing to compare")

    cells = {}
    for row in bench.sweep(args.m_list, args.k_list, args.n, args.seed, "fixed",
                           ("ext", "python"), args.repeats, args.baseline_max_m):
        cells.setdefault((row.algorithm, row.m, row.k), {})[row.backend] = row

    print(f"{'algorithm':9s} {'m':>7s} {'k':>2s} {'ext s':>9s} {'python s':>9s} {'speedup':>8s}")
    for (algo, m, k), by in sorted(cells.items()):
        ext, py = by["ext"], by["python"]
        assert ext.T == py.T
        print(f"{algo:9s} {m:7d} {k:2d} {ext.elapsed_s:9.4f} {py.elapsed_s:9.4f} "
              f"{py.elapsed_s / ext.elapsed_s:7.1f}x")


if __name__ == "__main__":
    main()
