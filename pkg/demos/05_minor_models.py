"""Exact minor testing by branch sets.

A model of H in G is a family of disjoint connected vertex sets, one per
vertex of H, with a G-edge between the sets of adjacent H-vertices.
"""

from k2tspread import complete_bipartite, extremal_graph, find_minor, join, make_complete, make_cycle, make_path

k23 = complete_bipartite(2, 3)
wheel = join(make_complete(1), make_cycle(5))
model = find_minor(wheel, k23)
print("wheel W_5 contains K_{2,3}; branch sets:", [sorted(x) for x in model.branch_sets])

fan = join(make_complete(1), make_path(9))
print("fan on 10 vertices (outerplanar) has K_{2,3}:", find_minor(fan, k23) is not None)

g = extremal_graph(13, 3, 4)
print("K_1 v 4K_3 has K_{2,3}:", find_minor(g, k23) is not None)
print("adding one edge between two triangles:", find_minor(g.add_edge(1, 4), k23) is not None)
