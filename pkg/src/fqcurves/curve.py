"""Plane curves: points, singularities, tangent cones, (H), genus bound, Cremona maps."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import gcd

from .errors import BudgetExceeded, PreconditionError
from .gf import Field, FieldElement, format_code, subfield_degree
from .linalg import det, inverse, rank
from .poly.bivariate import BivarPoly, HomogPoly, homogenize
from .poly.univariate import UPoly, count_rational_roots, is_squarefree

DEFAULT_BUDGET = 10 ** 7


def _lcm(a, b):
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class ProjPoint:
    """(x:y:z) with coordinate codes in ``field``; the last nonzero coordinate is 1."""

    field: Field
    coords: tuple

    @classmethod
    def make(cls, field: Field, x, y, z) -> ProjPoint:
        c = [v.code if isinstance(v, FieldElement) else (v if isinstance(v, int) else field(v).code)
             for v in (x, y, z)]
        last = next((i for i in (2, 1, 0) if c[i]), None)
        if last is None:
            raise PreconditionError("(0:0:0) is not a projective point")
        s = field.inv(c[last])
        return cls(field, tuple(field.mul(v, s) for v in c))

    @classmethod
    def from_ints(cls, field: Field, x, y, z) -> ProjPoint:
        return cls.make(field, field.from_int(x), field.from_int(y), field.from_int(z))

    @property
    def chart(self) -> str:
        """Coordinate set to 1 in the canonical affine chart containing the point."""
        return "Z" if self.coords[2] else ("Y" if self.coords[1] else "X")

    def affine(self, chart: str | None = None):
        """Affine coordinates (codes) in ``chart`` (default: canonical chart)."""
        chart = chart or self.chart
        k = "XYZ".index(chart)
        if self.coords[k] == 0:
            raise PreconditionError(f"{self} is not in the chart {chart} = 1")
        s = self.field.inv(self.coords[k])
        return tuple(self.field.mul(v, s) for i, v in enumerate(self.coords) if i != k)

    def key(self):
        x, y, z = self.coords
        return (z, y, x)

    def embed(self, target: Field) -> ProjPoint:
        if target == self.field:
            return self
        return ProjPoint(target, tuple(target.embed_code(v, self.field) for v in self.coords))

    def conjugate(self, q: int) -> ProjPoint:
        return ProjPoint(self.field, tuple(self.field.pow(v, q) for v in self.coords))

    def degree(self, q: int) -> int:
        """Degree over F_q of the smallest field containing the coordinates."""
        e = 1
        for v in self.coords:
            e = _lcm(e, subfield_degree(self.field, v, q))
        return e

    def is_rational(self, q: int) -> bool:
        return self.degree(q) == 1

    def __str__(self):
        return "(" + ":".join(format_code(self.field, v) for v in self.coords) + ")"

    __repr__ = __str__


@dataclass
class SingularPoint:
    """Local data of a point of multiplicity r at P.

    The tangent cone is stored as the slope polynomial S(T) = L(1, T) of the
    lowest form L(u, v) in the affine chart of the point, plus the multiplicity
    of the "vertical" tangent u = 0, which S cannot see.
    """

    point: ProjPoint
    multiplicity: int
    tangent_cone: UPoly
    vertical_multiplicity: int
    ordinary: bool
    rational_tangent_count: int
    orbit_size: int = 1

    def tangent_directions(self, target: Field | None = None) -> list:
        """Distinct tangent directions defined over ``target``: slope codes, plus 'vertical'."""
        target = target or self.point.field
        out = []
        if self.tangent_cone.degree > 0:
            _, roots = count_rational_roots(self.tangent_cone, target)
            out.extend(r.code for r in roots)
        if self.vertical_multiplicity:
            out.append("vertical")
        return out

    def as_dict(self):
        return {
            "point": str(self.point),
            "multiplicity": self.multiplicity,
            "ordinary": self.ordinary,
            "rational_tangents": self.rational_tangent_count,
            "orbit_size": self.orbit_size,
        }


@dataclass(frozen=True)
class HStatus:
    P1: ProjPoint
    P2: ProjPoint
    r1: int
    r2: int


@dataclass
class CurveAnalysis:
    curve: Curve
    singular_points: list
    h_status: HStatus | None
    genus_bound: int
    genus_exact: bool
    ext_bound: int
    assumptions: list = dc_field(default_factory=list)


class Curve:
    """A plane curve F(X, Y, Z) = 0 of degree d over ``base_field``.

    Geometric irreducibility is assumed; construction only rejects inputs that
    are visibly p-th powers or have a repeated factor on generic vertical lines.
    """

    def __init__(self, f: BivarPoly | HomogPoly, check: bool = True):
        if isinstance(f, HomogPoly):
            F = f
            if all(m[2] > 0 for m in F.terms):
                raise PreconditionError("Z divides the form; the line at infinity is a component")
            f = F.dehomogenize("Z")
        else:
            if f.is_zero() or f.degree < 1:
                raise PreconditionError("the curve equation must be nonconstant")
            F = homogenize(f)
        self.f = f.rename(("X", "Y"))
        self.F = F
        self.d = F.degree
        self.base_field = f.field
        self.q = f.field.q
        self._points = {}
        self._charts = {}
        if check:
            self._check_reduced()

    def __repr__(self):
        return f"Curve({self.f} over {self.base_field!r})"

    def __eq__(self, other):
        return isinstance(other, Curve) and self.F == other.F

    def __hash__(self):
        return hash(self.F)

    def _check_reduced(self):
        f = self.f
        if f.diff_x().is_zero() and f.diff_y().is_zero():
            raise PreconditionError("the equation is a p-th power (all partials vanish)")
        g = f if f.deg_y >= f.deg_x else f.swap()
        if g.diff_y().is_zero():
            g = g.swap()
        D = g.deg_y
        if D < 2:
            return
        K = self.base_field.extension(2) if self.base_field.q < 64 else self.base_field
        gk = g.change_field(K)
        rows = gk.coeffs_in_y()
        tried = 0
        for x in range(K.q):
            cs = [r.eval_code(x) for r in rows]
            if cs[-1] == 0:
                continue
            tried += 1
            if is_squarefree(UPoly(K, cs)):
                return
            if tried >= 60:
                break
        if tried:
            raise PreconditionError("the equation appears to have a repeated factor")

    def chart_poly(self, chart: str = "Z", target: Field | None = None) -> BivarPoly:
        key = (chart, target)
        if key not in self._charts:
            g = self.F.dehomogenize(chart)
            self._charts[key] = g.change_field(target) if target is not None else g
        return self._charts[key]

    def contains(self, P: ProjPoint) -> bool:
        F = self.F.change_field(P.field)
        return F.eval_code(*P.coords) == 0

    # -- point scans -------------------------------------------------------------
    def points_over(self, K: Field, budget: int = DEFAULT_BUDGET):
        """All K-rational points as (ProjPoint, singular) pairs, sorted by (z, y, x)."""
        if K in self._points:
            return self._points[K]
        if K.q * K.q > budget:
            raise BudgetExceeded(f"scanning P^2(F_{K.q}) needs about {K.q ** 2} evaluations (budget {budget})")
        out = []
        g = self.chart_poly("Z", K)
        gx, gy = g.diff_x(), g.diff_y()
        for x, y in _affine_zeros(g):
            sing = gx.eval_code(x, y) == 0 and gy.eval_code(x, y) == 0
            out.append((ProjPoint(K, (x, y, 1)), sing))
        h = self.chart_poly("Y", K)  # coordinates (X, Z)
        hx, hz = h.diff_x(), h.diff_y()
        for x in range(K.q):
            if h.eval_code(x, 0) == 0:
                sing = hx.eval_code(x, 0) == 0 and hz.eval_code(x, 0) == 0
                out.append((ProjPoint(K, (x, 1, 0)), sing))
        k = self.chart_poly("X", K)  # coordinates (Y, Z)
        if k.eval_code(0, 0) == 0:
            sing = k.diff_x().eval_code(0, 0) == 0 and k.diff_y().eval_code(0, 0) == 0
            out.append((ProjPoint(K, (1, 0, 0)), sing))
        out.sort(key=lambda t: t[0].key())
        self._points[K] = out
        return out


def _affine_zeros(g: BivarPoly):
    """All (x, y) in K^2 with g(x, y) = 0, by Horner in Y for each x."""
    K = g.field
    Q = K.q
    rows = g.coeffs_in_y()
    out = []
    if K.k == 1:
        p = K.p
        for x in range(Q):
            cs = [r.eval_code(x) for r in rows]
            while cs and cs[-1] == 0:
                cs.pop()
            if not cs:
                out.extend((x, y) for y in range(Q))
                continue
            rc = cs[::-1]
            for y in range(Q):
                acc = 0
                for c in rc:
                    acc = (acc * y + c) % p
                if acc == 0:
                    out.append((x, y))
        return out
    add, mul = K.add, K.mul
    for x in range(Q):
        cs = [r.eval_code(x) for r in rows]
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            out.extend((x, y) for y in range(Q))
            continue
        if len(cs) == 1:
            continue
        rc = cs[::-1]
        for y in range(Q):
            acc = 0
            for c in rc:
                acc = add(mul(acc, y), c)
            if acc == 0:
                out.append((x, y))
    return out


# -- local analysis -------------------------------------------------------------

def _local_poly(c: Curve, P: ProjPoint, chart: str | None = None) -> BivarPoly:
    chart = chart or P.chart
    g = c.chart_poly(chart, P.field)
    a, b = P.affine(chart)
    return g.translate(a, b)


def multiplicity(c: Curve, P: ProjPoint, chart: str | None = None) -> int:
    """Multiplicity of the curve at P (0 when P is off the curve)."""
    h = _local_poly(c, P, chart)
    if h.coeff(0, 0):
        return 0
    return h.lowest_degree()


def tangent_cone(c: Curve, P: ProjPoint) -> SingularPoint:
    """Tangent-cone record of P; works for smooth points too (r = 1)."""
    h = _local_poly(c, P)
    if h.coeff(0, 0):
        raise PreconditionError(f"{P} is not on the curve")
    r = h.lowest_degree()
    L = h.homogeneous_part(r)
    S = L.binary_form_to_upoly()
    vert = r - S.degree
    ordinary = vert <= 1 and is_squarefree(S)
    sp = SingularPoint(P, r, S, vert, ordinary, 0)
    sp.rational_tangent_count = len(sp.tangent_directions())
    return sp


def find_singular_points(c: Curve, ext_bound: int = 1, budget: int = DEFAULT_BUDGET) -> list:
    """Singular points over F_{q^s}, s <= ext_bound, one representative per Frobenius orbit."""
    if ext_bound < 1:
        raise PreconditionError("extension bound must be >= 1")
    cost = sum(c.q ** (2 * s) + c.q ** s + 1 for s in range(1, ext_bound + 1))
    if cost > budget:
        raise BudgetExceeded(f"singular-point scan up to s = {ext_bound} needs about {cost} "
                             f"evaluations (budget {budget})")
    found = []
    for s in range(1, ext_bound + 1):
        K = c.base_field.extension(s)
        for P, sing in c.points_over(K, budget):
            if not sing:
                continue
            if s > 1:
                if P.degree(c.q) != s:
                    continue
                orbit = [P]
                for _ in range(s - 1):
                    orbit.append(orbit[-1].conjugate(c.q))
                if min(o.key() for o in orbit) != P.key():
                    continue
            sp = tangent_cone(c, P)
            sp.orbit_size = s
            found.append(sp)
    return found


def check_hypothesis_H(c: Curve, sing: list) -> HStatus | None:
    """First pair (in point order) of F_q-rational singular points with r1 + r2 = d."""
    rational = sorted((sp for sp in sing if sp.orbit_size == 1 and sp.point.is_rational(c.q)),
                      key=lambda sp: sp.point.key())
    for a, b in itertools.combinations(rational, 2):
        if a.multiplicity + b.multiplicity == c.d:
            return HStatus(a.point, b.point, a.multiplicity, b.multiplicity)
    return None


def genus_bound(c: Curve, sing: list, certified: bool = False) -> tuple[int, bool]:
    """(d-1)(d-2)/2 - sum r(r-1)/2 over the listed points (orbits counted with their size).

    The bound is exact only when every listed point is ordinary and the caller
    certifies that the list contains all singular points.
    """
    g = (c.d - 1) * (c.d - 2) // 2
    g -= sum(sp.orbit_size * sp.multiplicity * (sp.multiplicity - 1) // 2 for sp in sing)
    if g < 0:
        raise PreconditionError("negative genus bound: the curve is reducible or the singular data is wrong")
    return g, bool(certified and all(sp.ordinary for sp in sing))


def analyze(c: Curve, ext_bound: int = 1, ack_exhaustive: bool = False,
            budget: int = DEFAULT_BUDGET) -> CurveAnalysis:
    sing = find_singular_points(c, ext_bound, budget)
    g, exact = genus_bound(c, sing, certified=ack_exhaustive)
    assumptions = ["the curve is geometrically irreducible (not verified)"]
    if not ack_exhaustive:
        assumptions.append(f"singular points searched over F_(q^s), s <= {ext_bound} only")
    return CurveAnalysis(c, sing, check_hypothesis_H(c, sing), g, exact, ext_bound, assumptions)


def carac_form_check(f: BivarPoly) -> tuple[bool, int, int]:
    """Is f = c X^m Y^l + g with m, l >= 1, deg g < m + l, deg_X g <= m, deg_Y g <= l?"""
    if f.is_zero() or f.degree < 1:
        raise PreconditionError("nonconstant polynomial required")
    top = f.top_form()
    if len(top.terms) != 1:
        return False, 0, 0
    (m, l), _ = next(iter(top.terms.items()))
    if m < 1 or l < 1:
        return False, m, l
    rest = BivarPoly(f.field, {k: v for k, v in f.terms.items() if k != (m, l)})
    ok = rest.degree < m + l and rest.deg_x <= m and rest.deg_y <= l
    return ok, m, l


def cremona_transform(F: HomogPoly) -> HomogPoly:
    """Image under (X:Y:Z) -> (YZ:XZ:XY) with the monomial factor removed, scaled to be monic."""
    if F.is_zero():
        raise PreconditionError("zero form")
    if F.terms.get((0, 0, F.degree), 0) == 0:
        raise PreconditionError("(0:0:1) lies on the curve; apply projective_change to move it first")
    img = {(j + l, i + l, i + j): c for (i, j, l), c in F.terms.items()}
    a = min(m[0] for m in img)
    b = min(m[1] for m in img)
    g = min(m[2] for m in img)
    out = {(x - a, y - b, z - g): c for (x, y, z), c in img.items()}
    return HomogPoly(F.field, out, 2 * F.degree - a - b - g).monic()


def _matrix_codes(field: Field, M):
    return [[v.code if isinstance(v, FieldElement) else field.from_int(v) for v in row] for row in M]


def projective_change(c: Curve, M) -> Curve:
    """The curve M(C), i.e. with equation F(M^-1 (X, Y, Z))."""
    K = c.base_field
    Mc = _matrix_codes(K, M)
    if len(Mc) != 3 or any(len(r) != 3 for r in Mc) or det(K, Mc) == 0:
        raise PreconditionError("a 3x3 invertible matrix is required")
    Minv = inverse(K, Mc)
    return Curve(c.F.linear_substitute(Minv))


def frame_matrix(c: Curve, P1: ProjPoint, P2: ProjPoint):
    """A projective change sending P1, P2 to (1:0:0), (0:1:0) and some point off the curve to (0:0:1)."""
    K = c.base_field
    for R in (ProjPoint.from_ints(K, x, y, 1) for y in range(K.q) for x in range(K.q)):
        if c.contains(R):
            continue
        cols = [list(P1.coords), list(P2.coords), list(R.coords)]
        A = [[cols[j][i] for j in range(3)] for i in range(3)]  # columns P1, P2, R
        if rank(K, A) == 3:
            return inverse(K, A)
    raise PreconditionError("no rational point off the curve in general position")


def transform_point(M, P: ProjPoint) -> ProjPoint:
    K = P.field
    Mc = [[K.embed_code(v.code, v.field) if isinstance(v, FieldElement) else K.from_int(v) for v in row]
          for row in M]
    add, mul = K.add, K.mul
    img = []
    for row in Mc:
        acc = 0
        for a, b in zip(row, P.coords):
            acc = add(acc, mul(a, b))
        img.append(acc)
    return ProjPoint.make(K, *img)
