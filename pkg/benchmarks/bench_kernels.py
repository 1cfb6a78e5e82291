"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Prints the best wall time per case for each backend and the speedup.
"""

import argparse
import timeit

from parity_complexes import _kernels, cube, glob, simplex
from parity_complexes._kernels import _pykernels
from parity_complexes.cells import _conflict_table

CASES = [("simplex", 3), ("cube", 3), ("simplex", 4), ("glob", 5)]
FAMILIES = {"simplex": simplex, "cube": cube, "glob": glob}


def jobs(C):
    enum_args = (list(C.minus), list(C.plus), _conflict_table(C))
    yield "enumerate", "enumerate_cells", enum_args
    yield "closure", "closure", (C.lt_succ, C.full)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels._compiled is None:
        print("compiled kernels not built; nothing to compare")
        return 1
    print(f"{'case':<12}{'kernel':<11}{'cython s':>11}{'python s':>11}{'speedup':>10}")
    for family, n in CASES:
        C = FAMILIES[family](n)
        for label, name, fn_args in jobs(C):
            fast = getattr(_kernels._compiled, name)
            slow = getattr(_pykernels, name)
            assert fast(*fn_args) == slow(*fn_args)
            t_fast = min(timeit.repeat(lambda: fast(*fn_args), number=1, repeat=args.repeat))
            t_slow = min(timeit.repeat(lambda: slow(*fn_args), number=1, repeat=args.repeat))
            print(f"{family + str(n):<12}{label:<11}{t_fast:>11.5f}{t_slow:>11.5f}{t_slow / t_fast:>9.0f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
