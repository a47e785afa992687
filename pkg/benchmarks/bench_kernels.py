"""Compare the compiled and pure-Python branch-and-bound kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both backends explore the same search tree, so node counts must agree; the
table reports wall time per instance and the speed-up.
"""

import argparse
import statistics
import sys
import time

from romanmyc import kernel
from romanmyc.graph import cartesian_product, complete_graph, complete_multipartite_graph, mycielskian, path_graph, petersen_graph
from romanmyc.solver import SolverConfig, gamma, gamma_r

CASES = {
    "petersen": lambda: petersen_graph(),
    "mu_1(petersen)": lambda: mycielskian(petersen_graph(), 1)[0],
    "mu_3(K_3,3)": lambda: mycielskian(complete_multipartite_graph([3, 3]), 3)[0],
    "P_10 x K_3": lambda: cartesian_product(path_graph(10), complete_graph(3)),
    "P_12 x K_3": lambda: cartesian_product(path_graph(12), complete_graph(3)),
    "P_3 x K_4,4": lambda: cartesian_product(path_graph(3), complete_multipartite_graph([4, 4])),
}


def timed(fn, repeat):
    times, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if "compiled" not in kernel.BACKENDS:
        print("compiled kernel not built; reinstall without ROMANMYC_NO_EXT", file=sys.stderr)
        return 1
    print(f"{'instance':<16} {'n':>3} {'what':<7} {'value':>5} {'nodes':>8} {'python s':>9} {'compiled s':>10} {'speed-up':>8}")
    for name, make in CASES.items():
        g = make()
        for what, solve in (("gamma_R", gamma_r), ("gamma", gamma)):
            tp, rp = timed(lambda: solve(g, SolverConfig(backend="python")), args.repeat)
            tc, rc = timed(lambda: solve(g, SolverConfig(backend="compiled")), args.repeat)
            assert (rp.value, rp.nodes) == (rc.value, rc.nodes), name
            print(f"{name:<16} {g.n:>3} {what:<7} {rp.value:>5} {rp.nodes:>8} {tp:>9.4f} {tc:>10.5f} {tp / tc:>7.0f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
