"""
Tree versus star Ramsey numbers
===============================

Predicted values next to exact ones for small trees, followed by the
extremal colorings that show the values cannot be lowered.
"""

from treedeg import exact_ramsey, predict_ramsey
from treedeg.io import to_graph6
from treedeg.ramsey import CompleteK, build_partition_coloring, lower_bound_blocks, verify_coloring
from treedeg.trees import enumerate_trees, recognize_tpq


def name(t):
    shape = recognize_tpq(t)
    return f"T({shape.p},{shape.q})" if shape else to_graph6(t.graph)


# m = 3 means a blue K_{1,3}; for n = 6 and 7 the search is tiny because
# blue-star-free colorings have red complements of maximum degree 2.
m = 3
print(f"{'n':>2} {'tree':>8} {'rule':>14} {'pred':>4} {'exact':>5} {'classes':>7}")
for n in (6, 7):
    for t in enumerate_trees(n, n - 3):
        p = predict_ramsey(t, m)
        r = exact_ramsey(t, m)
        print(f"{n:>2} {name(t):>8} {p.rule:>14} {p.value:>4} {r.value:>5} {r.certificate.class_count:>7}")

# %%
# Lower bounds. With m = k(n-1)+3, k+1 disjoint red K_{n-1} cover m+n-4
# vertices and leave every blue degree at m-1.
n, k = 9, 0
m = k * (n - 1) + 3
base = build_partition_coloring([(CompleteK(n - 1), k + 1)])
print(f"n={n} m={m}: base coloring on {base.N} vertices")
for t in enumerate_trees(n, n - 3):
    p = predict_ramsey(t, m)
    assert verify_coloring(base, t, m).is_valid_lower_witness
    if p.value == m + n - 2:
        # one more vertex: a block construction that avoids this particular tree
        blocks = lower_bound_blocks(p.rule, n, m + n - 3)
        report = verify_coloring(build_partition_coloring(blocks), t, m)
        print(f"  {name(t)}: {p.rule} value {p.value}, blocks {blocks}, witness ok={report.is_valid_lower_witness}")
