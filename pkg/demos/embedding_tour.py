"""
Embedding trees into dense hosts
================================

A walk through ``decide_and_embed``: the usual positive case, the two
exceptional host families, and what the strategy tags look like across a
small exhaustive sweep.
"""

from collections import Counter

from treedeg import decide_and_embed, verdict_to_json
from treedeg.graph import complete_bipartite, complete_graph, complete_multipartite, cycle_graph
from treedeg.oracle import enumerate_graphs, subgraph_embed
from treedeg.trees import enumerate_trees, make_tpq

# T(1,2): a 3-vertex spine whose ends carry one and two extra leaves.
t = make_tpq(1, 2)
print("tree edges:", t.graph.edges())

# Any host with minimum degree n-3 = 3 should take it, K_6 trivially so.
v = decide_and_embed(t, complete_graph(6))
print("K6     ->", verdict_to_json(v))

# K_{3,3} also has minimum degree 3, but the bipartition blocks this tree.
v = decide_and_embed(t, complete_bipartite(3, 3))
print("K3,3   ->", verdict_to_json(v))
print("oracle agrees:", subgraph_embed(t.graph, complete_bipartite(3, 3)) is None)

# The second family needs n=9: T(1,5) against K_{3,3,3}.
print("K3,3,3 ->", verdict_to_json(decide_and_embed(make_tpq(1, 5), complete_multipartite([3, 3, 3]))))
# ...while T(2,4) fits in the same host
print("K3,3,3 ->", verdict_to_json(decide_and_embed(make_tpq(2, 4), complete_multipartite([3, 3, 3])), witness=False))

# Hosts outside the hypotheses are reported rather than guessed at.
print("C6     ->", verdict_to_json(decide_and_embed(t, cycle_graph(6))))

# %%
# Strategy mix over every in-scope pair with n = 6 on 6 and 7 host vertices.
# Most pairs fall to plain greedy completion; the rest need a repair or a
# different seed.
tally = Counter()
for N in (6, 7):
    for g in enumerate_graphs(N, 3, True):
        for tree in enumerate_trees(6, 3):
            verdict = decide_and_embed(tree, g)
            tally[getattr(verdict, "strategy", verdict.status)] += 1
print(dict(sorted(tally.items())))
