"""Multisets, closed-neighborhood counts and the two projections of a product multiset.

Run: python3 demos/01_multisets_and_projections.py
"""

from intdom import graph as gr
from intdom.multiset import Multiset
from intdom.product import ONTO_G, ONTO_H, cartesian_product, phi_projection, psi_projection

a = Multiset([1, 2, 2])
b = Multiset([1, 2, 3])
print("A =", a, " |A| =", len(a), " m_A(2) =", a.count(2))
print("A + B =", a + b)
print("2A =", a * 2)
print("A & B =", a & b)
print("A <= A + B:", a <= a + b)

# K3 x K3, vertex (g, h) has id 3*g + h
pg = cartesian_product(gr.complete(3), gr.complete(3))
v = pg.index
x = Multiset([v(0, 1), v(0, 2), v(0, 2), v(1, 0), v(1, 0), v(1, 0), v(1, 1)])
print()
print("product multiset:", " ".join(pg.format_vertex(u) for u in x.elements()))
# max keeps the busiest fiber, sum adds them all up
print("phi onto G:", phi_projection(pg, x, ONTO_G))
print("psi onto G:", psi_projection(pg, x, ONTO_G))
print("phi onto H:", phi_projection(pg, x, ONTO_H))
print("psi onto H:", psi_projection(pg, x, ONTO_H))
