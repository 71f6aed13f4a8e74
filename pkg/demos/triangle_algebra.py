"""Circulation algebra of a triangle, worked by hand and by the library."""

from circalg.graphs import cycle_graph
from circalg.algebra import generators_from_matrix, hilbert_function
from circalg.enumeration import enumerate_spanning_forests, forest_activity_profile
from circalg.graphs import directed_incidence

G = cycle_graph(3)
A = directed_incidence(G)
print("directed incidence matrix")
print(A)

# one generator per vertex
for v, y in enumerate(generators_from_matrix(A)):
    print(f"y{v + 1} = {y}")

hf = hilbert_function(A)
print("Hilbert function:", hf)

# forests of the triangle, graded by |E| - |F| - external activity
forests = list(enumerate_spanning_forests(G))
print(len(forests), "forests")
print("forest profile:", forest_activity_profile(G).graded)
