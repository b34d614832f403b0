"""Making a smooth curve satisfy the two-point condition by a quadratic transform.

The Fermat cubic X^3 + Y^3 + Z^3 over F_7 is smooth.  Move two of its rational
points to (1:0:0) and (0:1:0), then apply (X:Y:Z) -> (YZ:XZ:XY).  The image
is a quartic whose multiplicities at the two points add up to its degree,
so the conic-based bounds apply to it.  The transform is birational, so the
branch count over F_7 is unchanged.

Run: python demos/cremona.py
"""
from itertools import combinations

from fqcurves import (GF, Curve, analyze, bounds_report, count_branches, cremona_transform, frame_matrix,
                      parse_poly, projective_change)

K = GF(7)
c = Curve(parse_poly("X^3 + Y^3 + 1", K))
pts = [P for P, _ in c.points_over(K)]
print(f"curve: {c}, {len(pts)} rational points")

# The off-curve point sent to (0:0:1) is (0:0:1) itself.  For a point P at
# infinity the line through P and (0:0:1) is the flex tangent at P, so the
# transform turns its triple contact into a non-ordinary double point.  Skip
# such pairs and take the first one whose image is nodal.
for P1, P2 in combinations(pts, 2):
    moved = projective_change(c, frame_matrix(c, P1, P2))
    image = Curve(cremona_transform(moved.F), check=False)
    info = analyze(image)
    if info.h_status and all(s.ordinary for s in info.singular_points):
        break
    print(f"  {P1}, {P2}: image has a non-ordinary singular point, skipped")
print(f"using {P1} and {P2}")
print(f"image: {image.F}  (degree {image.d})")
h = info.h_status
print(f"two-point condition: {h.P1} and {h.P2} with multiplicities {h.r1} + {h.r2} = {image.d}")
print(f"N_1 before = {count_branches(c, 1)}, after = {count_branches(image, 1)}")

rep = bounds_report(image, m=1, analysis=info)
for row in rep.rows:
    print(f"  {row.name:<10} {row.value:>4}  {row.provenance}")
