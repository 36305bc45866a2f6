"""Counting homomorphisms and densities, exactly.

Patterns and hosts are plain immutable graph objects; counts are integers
and densities are fractions, so everything printed here is exact.
"""

from digraphon import (
    BipartiteGraph,
    OrientedGraph,
    hom_count_bip,
    hom_count_directed,
    labeled_copies,
    oriented_knn,
    t_bip,
    t_directed,
)

edge = OrientedGraph(2, [(0, 1)])
path3 = OrientedGraph(3, [(0, 1), (1, 2)])
cyclic = OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])
transitive = OrientedGraph(3, [(0, 1), (0, 2), (1, 2)])

print("Patterns: a single directed edge, the directed 2-edge path, and both")
print("orientations of the triangle.\n")

print("Homomorphisms of the edge into the cyclic triangle:",
      hom_count_directed(edge, cyclic))
print("  ... so its density is", t_directed(edge, cyclic))

print("\nThe directed path has", hom_count_directed(path3, cyclic),
      "homomorphisms into the cyclic triangle but only",
      hom_count_directed(path3, transitive), "into the transitive one;")
print("densities:", t_directed(path3, cyclic), "vs", t_directed(path3, transitive))

print("\nLabeled copies are injective maps: the cyclic triangle has",
      labeled_copies(cyclic, cyclic), "labeled copies of itself (its rotations).")

print("\nThe oriented K_{n,n} directs all edges across the bipartition:")
for n in (1, 2, 3):
    g = oriented_knn(n)
    print(f"  n={n}: {g.edge_count} edges on {g.vertex_count} vertices,",
          "edge density", t_directed(edge, g))

print("\nBipartite densities fix both parts.  For the 4-cycle (= K_{2,2})")
host = BipartiteGraph(2, 3, [(0, 0), (0, 1), (1, 1), (1, 2)])
c4 = BipartiteGraph(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
print("in a bipartite host with parts (2,3) and 4 edges:")
print("  part-respecting homs:", hom_count_bip(c4, host),
      " density:", t_bip(c4, host))
print("  host bipartite edge density:",
      t_bip(BipartiteGraph(1, 1, [(0, 0)]), host))
assert t_bip(c4, host) >= t_bip(BipartiteGraph(1, 1, [(0, 0)]), host) ** 4
print("  ... and K_{2,2} beats the fourth power of it, as expected.")
