"""Cut norms, their witnesses, and quasirandomness traces.

For step functions the cut-norm supremum is attained on unions of parts, so
the exact mode enumerates part subsets and returns the optimal rectangle.
A graph sequence is p-quasirandom exactly when the centered cut norm of its
edge indicators tends to zero.
"""

import random
from fractions import Fraction

from digraphon import (
    OrientedGraph,
    StepGraphon,
    cut_distance_upper,
    cut_norm_centered,
    from_oriented,
    oriented_knn,
    quasirandom_trace,
    random_graphon,
    rectangle_integral,
)

p = Fraction(1, 4)
w = from_oriented(OrientedGraph(2, [(0, 1)]))
res = cut_norm_centered(w, p)
print("Centering the single-edge indicator at its mean 1/4:")
print("  cut norm:", res.value, " witness rectangle:", res.witness_s, "x", res.witness_t)
check = rectangle_integral(w, res.witness_s, res.witness_t, p)
print("  recomputed from the witness:", abs(check))
assert abs(check) == res.value

print("\nThe heuristic never exceeds the exact value:")
g = random_graphon(8, seed=3)
exact = cut_norm_centered(g, g.integral())
heur = cut_norm_centered(g, g.integral(), heuristic=True, seed=0)
print("  exact:", exact.value, " heuristic:", heur.value,
      " equal:", exact.value == heur.value)

print("\nA permutation upper bound on the cut distance:")
a = OrientedGraph(4, [(0, 1), (1, 2), (3, 1)])
b = a.relabel([2, 0, 3, 1])
print("  relabeled copies are at distance",
      cut_distance_upper(from_oriented(a), from_oriented(b)))
print("  constants at |p - q|:",
      cut_distance_upper(StepGraphon.constant(Fraction(1, 3)),
                         StepGraphon.constant(Fraction(3, 4))))

print("\nQuasirandomness trace at p = 1/4:")
print("  the constant K_{2,2}-orientation sequence stays put:",
      quasirandom_trace([oriented_knn(2)] * 3, p))


def random_oriented(n, rng):
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return OrientedGraph(n, edges)


rng = random.Random(0)
graphs = [random_oriented(n, rng) for n in (4, 8, 12, 16)]
trace = quasirandom_trace(graphs, p)
print("  random orientations of growing size drift toward 0:")
for g_, val in zip(graphs, trace):
    print(f"    n={g_.vertex_count:2d}: {val}  (~{float(val):.4f})")
