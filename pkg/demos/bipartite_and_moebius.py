"""Complete bipartite graphs, Moebius ladders, and a graph with no leveled embedding."""

from levelgraph import Graph, generate, hamiltonian_level_number, has_leveled_embedding, level_number, parse_family
from levelgraph.graph import complete_bipartite, disjoint_union

for name in ("K3,3", "K4,4", "K4,3", "K5,2"):
    g = generate(parse_family(name))
    hl = hamiltonian_level_number(g).value
    print(f"{name:5s}  l={level_number(g).value}  hl={hl}")

# Each ladder is nonplanar, so three levels is the best a hamiltonian spine can do.
for size in (8, 12, 16):
    print(f"M{size}: hl={hamiltonian_level_number(generate(parse_family(f'M{size}'))).value}")

# Two K3,3 blocks joined by one edge: any spine lives inside one block,
# and the other block hangs off it as a single nonplanar fragment.
twin = disjoint_union(complete_bipartite(3, 3), complete_bipartite(3, 3), [(0, 6)])
print("two joined K3,3: leveled?", has_leveled_embedding(twin)[0], " l =", level_number(twin).value)

# Adding edges can lower hl: K4,4 needs 4 levels, this supergraph needs 3.
extra = [(0, 1), (0, 2), (4, 5), (6, 7)]
bigger = Graph(8, complete_bipartite(4, 4).edges + tuple(extra))
print("K4,4 + 4 edges: hl =", hamiltonian_level_number(bigger).value)
