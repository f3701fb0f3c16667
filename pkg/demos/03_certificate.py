"""Building a certificate for one product, checking it, and breaking it on purpose.

Run: python3 demos/03_certificate.py
"""

import dataclasses

from intdom import graph as gr
from intdom.certificate import build_certificate, parse_certificate, serialize_certificate, verify_certificate
from intdom.product import cartesian_product
from intdom.solver import gamma_bnb

g, h, k = gr.path(3), gr.cycle(4), 2
pg = cartesian_product(g, h)
cert = build_certificate(g, h, k, gamma_bnb(g, k), gamma_bnb(h, k), gamma_bnb(pg.graph, k))
print(f"gamma_G={cert.gamma_g} gamma_H={cert.gamma_h} gamma_GxH={cert.gamma_gh}")
for line in verify_certificate(cert).lines():
    print(line)
ch = cert.chain
print(f"chain: {ch.lhs} <= {ch.sum_n} <= {ch.sum_s} = {ch.rhs}")

blk = cert.blocks[0]
print()
print(f"F_{blk.i},{blk.j}:", ["".join(map(str, r)) for r in blk.entries], "class", sorted(blk.classification))

text = serialize_certificate(cert)
print(f"JSON certificate: {len(text)} bytes; round trip verifies:", verify_certificate(parse_certificate(text)).ok)

# flip one matrix entry and see which check notices
rows = [list(r) for r in blk.entries]
rows[0][0] ^= 1
bad = dataclasses.replace(cert, blocks=(dataclasses.replace(blk, entries=tuple(map(tuple, rows))),) + cert.blocks[1:])
report = verify_certificate(bad)
print("after flipping one bit, failing checks:", report.failed())
print(next(c.line() for c in report.checks if not c.passed))
