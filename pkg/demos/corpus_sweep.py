"""Sweep the small-graph corpus and tally the dimension checks."""

import collections
import time

from circalg.corpus import builtin_corpus
from circalg.matroid import distinct_prime_gains
from circalg.verify import verify_1, verify_2, verify_A

corpus = builtin_corpus()
print(len(corpus), "graphs")

tally = collections.Counter()
t0 = time.time()
for entry in corpus:
    G = entry.graph
    tally["A", verify_A(G).status] += 1
    tally["1", verify_1(G).status] += 1
    if G.num_edges <= 5:
        tally["2", verify_2(G, distinct_prime_gains(G.num_edges)).status] += 1

for key in sorted(tally):
    print(key, tally[key])
print(f"{time.time() - t0:.1f}s")
