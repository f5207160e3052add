"""
Window choices as a t-partite graph
===================================

Each sequence becomes a part whose vertices are its windows. An edge between
windows of different sequences weighs their Hamming distance. Choosing one
window per sequence is a clique, and its weight is the sum of pairwise
distances between the chosen windows.
"""

from cspreopt import Instance, build_graph, clique_weight, dump_edges, min_weight_clique

inst = Instance(("AAAABBBB", "BBBBAAAA", "AAAABBBA", "BBBBAAAA"), 4)
g = build_graph(inst)
print(g.num_parts, "parts of", g.part_size, "vertices,", g.num_edges, "edges")

# %%
# The edge list is plain text, one edge per line.
print("\n".join(dump_edges(g).splitlines()[:5]))

# %%
# Picking AAAA everywhere costs nothing; picking the first window everywhere
# puts two AAAA against two BBBB, four cross pairs at distance 4.
print(clique_weight(g, [(0, 0), (1, 4), (2, 0), (3, 4)]))
print(clique_weight(g, [(0, 0), (1, 0), (2, 0), (3, 0)]))

# %%
# The lightest clique is found by exhaustive search.
sel, weight = min_weight_clique(g)
print(sel, weight)
