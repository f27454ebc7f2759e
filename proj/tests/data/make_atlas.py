"""Writes every graph with 1..7 vertices (up to isomorphism) in graph6, one file per order."""
import networkx as nx

by_order = {}
for g in nx.graph_atlas_g():
    n = g.number_of_nodes()
    if n == 0:
        continue
    by_order.setdefault(n, []).append(nx.to_graph6_bytes(g, header=False).decode().strip())

for n, lines in by_order.items():
    with open(f"atlas{n}.g6", "w") as f:
        f.write("\n".join(lines) + "\n")
    print(n, len(lines))

# Edge lists in the same order as the graph6 lines, decoded by networkx, so
# the parser can be checked against an independent implementation.
with open("atlas_edges.txt", "w") as f:
    for n in sorted(by_order):
        for line in by_order[n]:
            h = nx.from_graph6_bytes(line.encode())
            edges = " ".join(f"{min(a, b)}-{max(a, b)}" for a, b in sorted(h.edges(), key=lambda e: (min(e), max(e))))
            f.write(f"{n} {edges}\n")
