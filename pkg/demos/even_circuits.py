"""Which edge sets of an undirected incidence matrix are dependent?

Over the rationals a set of columns of the unsigned incidence matrix is
dependent exactly when it holds an even cycle, or two odd cycles joined
at a vertex or by a path.
"""

from circalg.graphs import cycle_graph
from circalg.enumeration import classify_subgraph, format_subset
from circalg.graphs import figure_eight, handcuff, undirected_incidence
from circalg.linalg import kernel_basis

for name, G in [("C4", cycle_graph(4)), ("C5", cycle_graph(5)),
                ("figure eight", figure_eight(3, 3)), ("handcuff", handcuff(3, 3, 1))]:
    full = (1 << G.num_edges) - 1
    c = classify_subgraph(G, full)
    print(f"{name:13s} {c.kind.name:26s}", end=" ")
    if c.has_even_circuit:
        print("witness", format_subset(c.witness))
    else:
        print()

# the kernel vector tells the coefficients of the dependence
for name, G in [("C4", cycle_graph(4)), ("handcuff(7,5,2)", handcuff(7, 5, 2))]:
    (k,) = kernel_basis(undirected_incidence(G))
    print(name, "kernel:", " ".join(str(int(c)) for c in k))
