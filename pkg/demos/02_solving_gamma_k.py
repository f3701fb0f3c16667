"""Computing gamma_k exactly with brute force and with branch and bound.

Run: python3 demos/02_solving_gamma_k.py
"""

from intdom import graph as gr
from intdom.partition import build_k_partition, validate_k_partition
from intdom.solver import gamma_bnb, gamma_brute, greedy_upper, lower_bound

g = gr.disjoint_union(gr.path(4), gr.complete(1))
print("P4 + K1, edges:", g.edges())
for k in (1, 2, 3):
    brute, bnb = gamma_brute(g, k), gamma_bnb(g, k)
    print(f"k={k}: brute {brute.gamma} via {brute.witness}, bnb {bnb.gamma} via {bnb.witness} "
          f"({bnb.nodes_explored} nodes)")

# any optimal multiset splits V into blocks around its elements
res = gamma_bnb(g, 2)
p = build_k_partition(g, 2, res.witness.elements())
print()
print("2-partition anchored at", res.witness)
for i, (u, block) in enumerate(zip(p.anchors, p.blocks)):
    print(f"  P_{i}: anchor {u}, block {list(block)}")
print("violations:", validate_k_partition(g, p) or "none")

print()
h = gr.grid(3, 4)
for k in (1, 2):
    res = gamma_bnb(h, k)
    print(f"3x4 grid, k={k}: bounds [{lower_bound(h, k)}, {len(greedy_upper(h, k))}], "
          f"gamma={res.gamma}, {res.elapsed:.3f}s")
