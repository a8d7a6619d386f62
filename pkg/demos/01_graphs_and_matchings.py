#!/usr/bin/env python3
"""Tour of the graph core and the matching checkers.

Builds a few small graphs, shows the graph6 codec, and walks through the
two routes for deciding matching extension and exclusion: direct search
versus the odd-component criteria.
"""

from matchspec import (are_isomorphic, berge_tutte_deficiency, complete_graph,
                       cycle_graph, disjoint_union, empty_graph,
                       find_odd_bridges, from_edge_list, is_1_excludable,
                       is_1_excludable_criterion, is_k_extendable,
                       is_k_extendable_chen, join, matching_number,
                       max_matching, parse_graph6, to_graph6)

print("== graph6 codec ==")
k4 = complete_graph(4)
print(f"K4 encodes as {to_graph6(k4)!r}; decoding it back gives m={parse_graph6('C~').m}")

print("\n== joins and unions ==")
g = join(complete_graph(2), disjoint_union(complete_graph(3), empty_graph(1)))
print(f"K(2) v (K(3) u K1): n={g.n}, m={g.m}  (1 + 3 + 2*4 = 12 edges)")

print("\n== maximum matching ==")
petersen = from_edge_list(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                               (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                               (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)])
m = max_matching(petersen)
print(f"Petersen graph: matching number {m.size}, e.g. {m.edges}")
d, witness = berge_tutte_deficiency(petersen)
print(f"deficiency scan agrees: max_S (odd(G-S) - |S|) = {d},"
      f" so nu = (10 - {d})/2 = {matching_number(petersen)}")

print("\n== matching extension, two routes ==")
for name, graph in [("C6", cycle_graph(6)), ("K(2) v (K(3) u K1)", g)]:
    direct = is_k_extendable(graph, 1)
    crit = is_k_extendable_chen(graph, 1)
    print(f"{name}: 1-extendable? direct={direct.holds}, criterion={crit.holds}")
    if not direct.holds:
        print(f"   non-extendable matching: {direct.witness}")
    if not crit.holds:
        print(f"   violating vertex set: {sorted(crit.witness)}")

print("\n== matching exclusion ==")
f1 = join(complete_graph(2), disjoint_union(complete_graph(2), empty_graph(2)))
direct = is_1_excludable(f1)
crit = is_1_excludable_criterion(f1)
print(f"K(2) v (K(2) u 2K1): 1-excludable? direct={direct.holds} "
      f"(forced edge {direct.witness}), criterion={crit.holds} "
      f"({crit.reason} at S={sorted(crit.witness)})")

print("\n== odd bridges ==")
bridged = from_edge_list(8, [(i, j) for i in range(3) for j in range(i + 1, 3)]
                         + [(3 + i, 3 + j) for i in range(5) for j in range(i + 1, 5)]
                         + [(2, 3)])
print(f"two cliques linked by an edge: odd bridges = {sorted(find_odd_bridges(bridged))}")
print(f"C4 has none: {find_odd_bridges(cycle_graph(4)) == frozenset()}")
