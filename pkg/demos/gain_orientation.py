"""Reversing one edge of a gain graph can change the algebra."""

from fractions import Fraction

from circalg.graphs import cycle_graph
from circalg.algebra import hilbert_function
from circalg.graphs import GainAssignment, Orientation, gain_incidence
from circalg.matroid import orientation_independent_bruteforce, orientation_independent_criterion

G = cycle_graph(3)
gamma = GainAssignment((1, 2, 2))

for flips in [(False, False, False), (False, False, True)]:
    A = gain_incidence(G, Orientation(flips), gamma)
    print(flips, hilbert_function(A))

print("criterion:  ", orientation_independent_criterion(G, gamma).describe())
print("brute force:", orientation_independent_bruteforce(G, gamma).describe())

# gains +-1 never depend on the orientation
signs = GainAssignment((1, -1, Fraction(-1)))
print("signed:     ", orientation_independent_criterion(G, signs).describe())
