"""Step graphons: embedding graphs, the switching identity, and scaling.

A step graphon is a rational-valued matrix on an interval partition of
[0,1].  Graphs embed as 0/1 indicators; bipartite graphs land on the common
refinement of their two equipartitions.  The key identity: directing the
edges of a bipartite pattern from part 1 to part 2 leaves its density in
any graphon unchanged.
"""

from fractions import Fraction

from digraphon import (
    BipartiteGraph,
    OrientedGraph,
    from_bipartite,
    from_oriented,
    random_graphon,
    t_bip_step,
    t_directed,
    t_step,
    to_part_oriented,
)

edge = OrientedGraph(2, [(0, 1)])
w_edge = from_oriented(edge)
print("The single directed edge as a step graphon:")
print("  part lengths:", w_edge.part_lengths)
print("  values:      ", w_edge.values)
print("  mean:", w_edge.integral())

matching = BipartiteGraph(2, 2, [(0, 0), (1, 1)])
w_matching = from_bipartite(matching)
print("\nA perfect matching on parts (2,2) embeds with mean",
      w_matching.integral())

print("\nGraph and graphon densities agree exactly:")
cyclic = OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])
host = OrientedGraph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1)])
print("  t(triangle, host)        =", t_directed(cyclic, host))
print("  t(triangle, W_host)      =", t_step(cyclic, from_oriented(host)))

print("\nThe switching identity on a random rational graphon:")
w = random_graphon(4, seed=42)
c6 = BipartiteGraph(3, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)])
bip_side = t_bip_step(c6, w)
dir_side = t_step(to_part_oriented(c6), w)
print("  bipartite 6-cycle density:     ", bip_side)
print("  part-oriented 6-cycle density: ", dir_side)
assert bip_side == dir_side

print("\nScaling multiplies densities by c^e:")
half = Fraction(1, 2)
for pattern in (edge, cyclic):
    lhs = t_step(pattern, w.scale(half))
    rhs = half ** pattern.edge_count * t_step(pattern, w)
    assert lhs == rhs
    print(f"  e(B)={pattern.edge_count}:  t(B, W/2) = {lhs} = (1/2)^e t(B, W)")
