"""Bounds for the Hurwitz curve X^4 Y^3 + X^3 + Y^4 over F_17.

The curve has degree 7 and two non-ordinary singular points, so the conic
system used for the sharper bounds is unavailable.  Instead we apply the
general bound with three linear systems: conics through the singular points,
lines, and all conics.  The system adapted to the singularities wins.

Run: python demos/hurwitz_table.py
"""
from fqcurves import GF, analyze, bounds_report, hurwitz

K = GF(17)
c = hurwitz(4, 3, K)
info = analyze(c)
print(f"curve: {c}  (degree {c.d})")
for s in info.singular_points:
    print(f"  singular point {s.point}: multiplicity {s.multiplicity}, ordinary = {s.ordinary}")
print(f"genus <= {info.genus_bound}")

rep = bounds_report(c, m=1, analysis=info)
print("\nbound        value  provenance")
for row in rep.rows:
    print(f"{row.name:<12} {row.value:>5}  {row.provenance}")

best = min(rep.rows, key=lambda r: r.value)
print(f"\nbest bound: {best.name} = {best.value}  ({best.detail})")
