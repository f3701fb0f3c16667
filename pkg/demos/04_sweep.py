"""A small family sweep, reporting the tightest instances.

Run: python3 demos/04_sweep.py
"""

from intdom.sweep import family_graphs, instances, iter_rows

graphs = family_graphs(["path", "cycle", "complete", "star"], 4)
rows = list(iter_rows(instances(graphs, 2)))
print(f"{len(rows)} instances, all certificates valid: {all(r.cert_ok for r in rows)}")
print("largest ratio gamma(G)gamma(H) / (2k gamma(GxH)):", max(r.ratio for r in rows))
print()
for r in sorted(rows, key=lambda r: -r.ratio)[:8]:
    print(f"  {r.family_g}({r.params_g}) x {r.family_h}({r.params_h}) k={r.k}: "
          f"{r.lhs} <= {r.rhs}  ratio {float(r.ratio):.3f}")
