"""The sextic X^6 Y^6 + X^6 + Y^6 - 3 over F_13, counted over F_169.

The projective closure has degree 12 and two ordinary 6-fold points at
(1:0:0) and (0:1:0).  Conics through these points give a linear system with
r1 + r2 = d, and the bounds built on it improve on Hasse-Weil.  With the
exact count N_1 the two-Frobenius bound is sharper than the one-Frobenius one.

Run: python demos/sextic_table.py
"""
from fqcurves import analyze, bounds_report, count_branches, product_sextic

c = product_sextic()
info = analyze(c)
N1, N2 = count_branches(c, 1), count_branches(c, 2)
print(f"curve: {c}  (degree {c.d}, genus <= {info.genus_bound})")
print(f"rational branches: N_1 = {N1}, N_2 = {N2}")

rep = bounds_report(c, m=2, counts={1: N1}, analysis=info)
print("\nbounds on N_2")
for row in sorted(rep.rows, key=lambda r: r.value):
    mark = "  <- actual count is below" if row.value >= N2 else ""
    print(f"  {row.name:<10} {row.value:>5}{mark}")
for w in rep.warnings:
    print("warning:", w)
