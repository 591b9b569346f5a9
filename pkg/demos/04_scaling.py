"""
Fast versus naive on complete lists
===================================

Complete coherent lists have N = 2**m members.  The fast test is quadratic
in N, the naive one cubic.  Plot the medians if matplotlib is around.
"""

import numpy as np

from subcheck.bench import loglog_slope, medians, run_bench

sizes = [6, 7, 8, 9]
rows = run_bench(sizes, ["fast", "naive"], reps=3, seed=0)
med = medians(rows)

ns = np.array([1 << m for m in sizes])
for alg in ("fast", "naive"):
    times = np.array([med[(m, alg)] for m in sizes])
    print(f"{alg:5s} ms:", np.round(times / 1e6, 2), f" slope {loglog_slope(ns, times):.2f}")
print("speedup:", np.round([med[(m, 'naive')] / med[(m, 'fast')] for m in sizes], 1))

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    pass
else:
    for alg in ("fast", "naive"):
        plt.loglog(ns, [med[(m, alg)] / 1e6 for m in sizes], "o-", label=alg)
    plt.xlabel("N (list length)")
    plt.ylabel("median time (ms)")
    plt.legend()
    plt.savefig("scaling.png")
    print("wrote scaling.png")
