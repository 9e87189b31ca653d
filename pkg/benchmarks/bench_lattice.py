"""Time the compiled and pure-Python face-lattice kernels on the same inputs.

    python3 benchmarks/bench_lattice.py [--repeat N]
"""
import argparse
import time

from polygap import _kernel_py, lattice
from polygap.constructions import cyclic, delta_sum, pentasm, prism, stacked, triplex

CASES = [
    ("prism(8)", prism(8)),
    ("pentasm(9)", pentasm(9)),
    ("triplex(6,4)", triplex(6, 4)),
    ("delta_sum(4,4)", delta_sum(4, 4)),
    ("cyclic(6,16)", cyclic(6, 16)),
    ("stacked(7,20)", stacked(7, 20)),
]


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
    if lattice._kernel_c is None:
        print("compiled kernel not built; only the Python kernel is available")
    print(f"{'input':16} {'faces':>8} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, P in CASES:
        py_t, py = best_of(lambda: _kernel_py.lattice_kernel(P.facet_masks, P.nverts, lattice.MAX_FACES), args.repeat)
        if lattice._kernel_c is not None:
            c_t, c = best_of(lambda: lattice._kernel_c.lattice_kernel(P.facet_masks, P.nverts, lattice.MAX_FACES),
                             args.repeat)
            assert list(c[0]) == list(py[0]) and list(c[1]) == list(py[1]) and c[2] == py[2]
            print(f"{name:16} {len(py[0]):8d} {py_t:10.4f} {c_t:10.4f} {py_t / c_t:7.1f}x")
        else:
            print(f"{name:16} {len(py[0]):8d} {py_t:10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
