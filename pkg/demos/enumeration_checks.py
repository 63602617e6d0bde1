"""
Counting trees and graphs two ways
==================================

The exhaustive sweeps rest on the enumerators, so here they are checked
against independent counts.
"""

import random

from treedeg.graph import relabel
from treedeg.io import to_graph6
from treedeg.oracle import canonical_form, count_graphs_burnside, enumerate_graphs, enumerate_trees_prufer, nauty_form
from treedeg.trees import enumerate_trees

# Trees: leaf augmentation with canonical dedupe against all labelled
# Pruefer sequences collapsed by isomorphism.
for n in range(1, 9):
    print(n, len(enumerate_trees(n)), len(enumerate_trees_prufer(n)))

# Graphs: orderly enumeration against Burnside's lemma over S_n.
for n in range(1, 8):
    print(n, sum(1 for _ in enumerate_graphs(n)), count_graphs_burnside(n))

# %%
# Canonical forms do not move under relabelling; the in-house refinement
# form and the nauty form separate the same classes.
g = next(enumerate_graphs(7, 3, True))
print("graph6:", to_graph6(g), "canonical:", canonical_form(g))
rng = random.Random(0)
perm = list(range(7))
rng.shuffle(perm)
h = relabel(g, perm)
print("relabelled:", to_graph6(h), "canonical:", canonical_form(h))
print("nauty agrees:", nauty_form(g) == nauty_form(h))
