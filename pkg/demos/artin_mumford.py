"""The Artin-Mumford curve (X^q - X)(Y^q - Y) = 1 attains a two-Frobenius bound.

Over F_q it has no affine points: its 2q rational branches all sit at the two
points at infinity.  Over F_(q^2) it picks up q^2(q - 1) affine points.  The
conic system through the points at infinity is Frobenius classical for
m = 1 and non-classical for m = 2, and the bound obtained from the pair of
Frobenius maps holds with equality.

Run: python demos/artin_mumford.py [q ...]
"""
import sys

from fqcurves import am_verify

for q in [int(a) for a in sys.argv[1:]] or [5, 7, 11]:
    rep = am_verify(q)
    v = rep.values
    print(f"q = {q}: N_1 = {v['N_1']}, N_2 = {v['N_2']}, kappa = {v['kappa']}, c_1 = {v['c_1']}")
    print(f"  c_1 N_1 + 2 (N_2 - N_1) = {v['bam_lhs']}, bound = {v['bam_rhs']}")
    for check in rep.checks:
        print(f"  [{'ok' if check.passed else 'FAIL'}] {check.name}: {check.detail}")
