"""Branches, intersection multiplicities, rational-branch counts and linear systems."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from math import comb

from .curve import Curve, ProjPoint, multiplicity, tangent_cone, DEFAULT_BUDGET
from .errors import PreconditionError, PrecisionExhausted, UnsupportedError
from .gf import Field, FieldElement
from .linalg import nullspace, rref
from .poly.bivariate import BivarPoly, HomogPoly, homogenize
from .poly.series import PowerSeries, hensel_lift, series_eval
from .poly.univariate import UPoly, is_squarefree

MAX_PRECISION = 1024


def default_precision(c: Curve) -> int:
    return 2 * c.d + 4


@dataclass
class Branch:
    """A smooth local arm (x(t), y(t)) of the curve in the affine chart ``chart`` of its center.

    ``tangent`` is None at a smooth center, otherwise the slope code v = s*u of
    the tangent in local coordinates, or 'vertical'.
    """

    curve: Curve
    center: ProjPoint
    chart: str
    x: PowerSeries
    y: PowerSeries
    tangent: object = None

    @property
    def field(self) -> Field:
        return self.center.field

    @property
    def precision(self) -> int:
        return min(self.x.prec, self.y.prec)

    def with_precision(self, N: int) -> Branch:
        return _expand(self.curve, self.center, self.tangent, N)

    def __repr__(self):
        return f"Branch(center={self.center}, chart={self.chart}, tangent={self.tangent}, N={self.precision})"


@dataclass
class OrderSeq:
    values: tuple
    kind: str
    empirical: bool = False

    def __post_init__(self):
        self.values = tuple(self.values)
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise PreconditionError(f"order sequence {self.values} is not strictly increasing")
        if self.kind in ("branch_j", "generic_eps") and self.values and self.values[0] != 0:
            raise PreconditionError(f"{self.kind} sequence must start at 0")

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __eq__(self, other):
        if isinstance(other, OrderSeq):
            return self.values == other.values and self.kind == other.kind
        if isinstance(other, (tuple, list)):
            return self.values == tuple(other)
        return NotImplemented


@dataclass
class LinearSystem:
    """Plane curves of degree t through base points P_i with multiplicity >= s_i.

    ``basis`` holds affine representatives (chart Z = 1) and ``forms`` the
    corresponding degree-t forms.
    """

    curve: Curve
    t: int
    base_points: list
    basis: list
    forms: list
    r: int
    h: int
    B_degree: int | None = None
    n: int | None = None
    notes: list = dc_field(default_factory=list)


# -- expansions -------------------------------------------------------------------

def _blowup(h: BivarPoly, r: int, direction) -> BivarPoly:
    """h(T, T(s + W)) / T^r, or h(T W, T) / T^r for the vertical direction."""
    K = h.field
    add, mul, pw = K.add, K.mul, K.pow
    out = {}
    for (i, j), c in h.terms.items():
        e = i + j - r
        if e < 0:
            raise PreconditionError("polynomial has terms below the stated multiplicity")
        if direction == "vertical":
            key = (e, i)
            out[key] = add(out.get(key, 0), c)
            continue
        s = direction
        for k in range(j + 1):
            coef = mul(c, mul(K.from_int(comb(j, k)), pw(s, j - k)))
            if coef:
                key = (e, k)
                out[key] = add(out.get(key, 0), coef)
    return BivarPoly(K, out, ("T", "W"))


def _expand(c: Curve, P: ProjPoint, direction, N: int) -> Branch:
    K = P.field
    a, b = P.affine()
    h = c.chart_poly(P.chart, K).translate(a, b)
    if h.coeff(0, 0):
        raise PreconditionError(f"{P} is not on the curve")
    r = h.lowest_degree()
    t = PowerSeries.variable(K, N)
    if r == 1:
        if h.coeff(0, 1):
            u, v = t, hensel_lift(h, t, 0, N)
        else:
            u, v = hensel_lift(h.swap(), t, 0, N), t
    else:
        H = _blowup(h, r, direction)
        W = hensel_lift(H, t, 0, N)
        if direction == "vertical":
            u, v = (t * W).truncate(N), t
        else:
            v = (t * (W + PowerSeries.constant(K, direction, N))).truncate(N)
            u = t
    x = u + PowerSeries.constant(K, a, N)
    y = v + PowerSeries.constant(K, b, N)
    return Branch(c, P, P.chart, x, y, None if r == 1 else direction)


def branches_at(c: Curve, P: ProjPoint, field: Field | None = None, precision: int | None = None) -> list:
    """The branches centered at P that are defined over ``field`` (default: P's field)."""
    K = field or P.field
    P = P.embed(K)
    N = precision or default_precision(c)
    sp = tangent_cone(c, P)
    if sp.multiplicity == 1:
        return [_expand(c, P, None, N)]
    if not sp.ordinary:
        raise UnsupportedError(f"{P} is a non-ordinary singular point: branch order > 1 possible")
    return [_expand(c, P, d, N) for d in sp.tangent_directions(K)]


def _in_chart(h, chart: str, degree: int | None = None) -> BivarPoly:
    if isinstance(h, HomogPoly):
        return h.dehomogenize(chart)
    if chart == "Z":
        return h
    return homogenize(h, degree).dehomogenize(chart)


def _series_on(br: Branch, h, degree=None) -> PowerSeries:
    return series_eval(_in_chart(h, br.chart, degree), br.x, br.y)


def intersection_multiplicity(br: Branch, h, degree: int | None = None,
                              max_precision: int = MAX_PRECISION) -> int:
    """Valuation of h along the branch.

    ``h`` is a form, or an affine polynomial in (X, Y) read as a curve of the
    given degree (default: its own degree).  Precision is doubled while the
    series vanishes, up to ``max_precision``.
    """
    while True:
        s = _series_on(br, h, degree)
        v = s.valuation()
        if v is not None:
            return v
        if br.precision >= max_precision:
            raise PrecisionExhausted(f"h vanishes on the branch to precision {br.precision}")
        br = br.with_precision(2 * br.precision)


def intersection_number(c: Curve, P: ProjPoint, h, degree: int | None = None) -> int:
    """I_P(C, h), summed over the branches of C at P (smooth or ordinary P)."""
    r = multiplicity(c, P)
    if r == 0:
        return 0
    K = _splitting_extension(c, P, r) if r > 1 else P.field
    return sum(intersection_multiplicity(br, h, degree) for br in branches_at(c, P, K))


# -- counting -----------------------------------------------------------------------

def count_branches(c: Curve, m: int, budget: int = DEFAULT_BUDGET) -> int:
    """N_m: smooth F_{q^m}-points plus F_{q^m}-rational tangent directions at singular ones."""
    if m < 1:
        raise PreconditionError("m must be >= 1")
    K = c.base_field.extension(m)
    total = 0
    for P, sing in c.points_over(K, budget):
        if not sing:
            total += 1
            continue
        sp = tangent_cone(c, P)
        if not sp.ordinary:
            raise UnsupportedError(f"singular point {P} is not ordinary; rational branches cannot be read off tangents")
        total += len(sp.tangent_directions(K))
    return total


# -- linear systems ------------------------------------------------------------------

def _monomials(t: int):
    return [(i, k - i) for k in range(t + 1) for i in range(k, -1, -1)]


def _to_base(c: Curve, P: ProjPoint) -> ProjPoint:
    base = c.base_field
    if P.field == base:
        return P
    if not P.is_rational(c.q):
        raise PreconditionError(f"base point {P} is not rational over {base!r}")
    back = {P.field.embed_code(v, base): v for v in range(base.q)}
    return ProjPoint(base, tuple(back[v] for v in P.coords))


def linear_system(c: Curve, t: int, base_points=(), compute_base_locus: bool = True) -> LinearSystem:
    """Degree-t curves through the rational base points (P, s) with multiplicity >= s."""
    if t < 1:
        raise PreconditionError("system degree must be >= 1")
    K = c.base_field
    pts = [(_to_base(c, P), s) for P, s in base_points]
    if len({P for P, _ in pts}) != len(pts):
        raise PreconditionError("base points must be distinct")
    mons = _monomials(t)
    rows = []
    for P, s in pts:
        a, b = P.affine()
        chart = P.chart
        cols = []
        for i, j in mons:
            form = HomogPoly(K, {(i, j, t - i - j): 1}, t)
            cols.append(form.dehomogenize(chart).translate(a, b))
        for deg in range(s):
            for e in range(deg + 1):
                rows.append([col.coeff(e, deg - e) for col in cols])
    vecs = nullspace(K, rows, len(mons))
    basis, forms = [], []
    for v in vecs:
        terms = {m: cv for m, cv in zip(mons, v) if cv}
        basis.append(BivarPoly(K, terms))
        forms.append(HomogPoly(K, {(i, j, t - i - j): cv for (i, j), cv in terms.items()}, t))
    h = t * (t + 3) // 2 - sum(s * (s + 1) // 2 for _, s in pts)
    L = LinearSystem(c, t, pts, basis, forms, len(basis) - 1, h)
    if compute_base_locus:
        L.B_degree, L.n = base_locus_degree(c, L)
    return L


def conic_system_through(c: Curve, P1: ProjPoint, P2: ProjPoint) -> LinearSystem:
    """Conics through two distinct rational points."""
    if _to_base(c, P1) == _to_base(c, P2):
        raise PreconditionError("P1 and P2 must be distinct")
    L = linear_system(c, 2, [(P1, 1), (P2, 1)])
    if L.r != 3:
        raise PreconditionError(f"degenerate configuration: conic system has dimension {L.r}")
    if not (c.q > (c.d - 2) / 2):
        L.notes.append("q > (d-2)/2 fails; n computed from the base locus")
    return L


def _splitting_extension(c: Curve, P: ProjPoint, r: int, limit: int = 12):
    sp = tangent_cone(c, P)
    for m in range(1, limit + 1):
        K = P.field.extension(m) if P.field == c.base_field else P.field
        if len(sp.tangent_directions(K)) == r:
            return K
        if P.field != c.base_field:
            break
    raise UnsupportedError(f"tangents at {P} do not split in a small extension")


def _cone_member(c: Curve, L: LinearSystem, P: ProjPoint, s: int, limit: int = 4096):
    """A member of exact multiplicity s at P whose tangent cone shares no line with the curve's."""
    K = c.base_field
    a, b = P.affine()
    local = c.chart_poly(P.chart).translate(a, b)
    Lc = local.homogeneous_part(local.lowest_degree())
    locals_ = [f.dehomogenize(P.chart).translate(a, b) for f in L.forms]
    n = len(locals_)
    for count, coeffs in enumerate(itertools.product(range(K.q), repeat=n)):
        if count >= limit:
            break
        if not any(coeffs):
            continue
        m = BivarPoly(K, {})
        for cf, g in zip(coeffs, locals_):
            if cf:
                m = m + g.scale(cf)
        if m.is_zero() or m.lowest_degree() != s:
            continue
        if _forms_coprime(Lc, m.homogeneous_part(s)):
            return m
    return None


def _forms_coprime(A: BivarPoly, B: BivarPoly) -> bool:
    """Binary forms without a common linear factor over the algebraic closure."""
    ua, ub = A.binary_form_to_upoly(), B.binary_form_to_upoly()
    va = A.degree - ua.degree  # multiplicity of the factor u (slope at infinity)
    vb = B.degree - ub.degree
    if va > 0 and vb > 0:
        return False
    return ua.gcd(ub).degree == 0


def base_locus_degree(c: Curve, L: LinearSystem) -> tuple[int, int]:
    """(deg B, n = t d - deg B) with B the base locus cut on the curve at the base points."""
    total = 0
    for P, s in L.base_points:
        sp = tangent_cone(c, P)
        r = sp.multiplicity
        if r == 0:
            raise PreconditionError(f"base point {P} is not on the curve")
        if r == 1 or sp.ordinary:
            K = _splitting_extension(c, P, r) if r > 1 else P.field
            v = 0
            for br in branches_at(c, P, K):
                v += min(intersection_multiplicity(br, f) for f in L.forms)
        else:
            if _cone_member(c, L, P, s) is None:
                raise UnsupportedError(f"cannot determine the base locus at the non-ordinary point {P}")
            v = r * s
        if v < r * s:
            raise AssertionError(f"base locus at {P} below r*s = {r * s}")
        if v > r * s:
            L.notes.append(f"a tangent at {P} is shared by every member")
        total += v
    return total, L.t * c.d - total


def order_sequence_at(br: Branch, L: LinearSystem, max_precision: int = MAX_PRECISION) -> OrderSeq:
    """Achievable contact orders (j_0, ..., j_r) of system members with the branch."""
    while True:
        series = [_series_on(br, f) for f in L.forms]
        vals = [s.valuation() for s in series]
        v = min((x for x in vals if x is not None), default=None)
        if v is not None:
            rows = [s.shift_down(v).coeffs if s.valuation() is not None else [0] * (s.prec - v)
                    for s in series]
            width = min(len(r) for r in rows)
            _, piv = rref(br.field, [r[:width] for r in rows])
            if len(piv) == L.r + 1:
                return OrderSeq(piv, "branch_j")
        if br.precision >= max_precision:
            raise PrecisionExhausted("basis series dependent to full precision")
        br = br.with_precision(2 * br.precision)


def _random_smooth_points(c: Curve, K: Field, count: int, rng: random.Random, exclude=(), tries: int = 20000):
    """Distinct smooth affine K-points, not F_q-rational, found from random vertical lines."""
    g = c.chart_poly("Z", K)
    gx, gy = g.diff_x(), g.diff_y()
    rows = g.coeffs_in_y()
    T = UPoly(K, [0, 1])
    found, seen = [], set(exclude)
    for _ in range(tries):
        if len(found) >= count:
            break
        x = rng.randrange(K.q)
        u = UPoly(K, [r.eval_code(x) for r in rows])
        if u.degree < 1 or u.gcd(T.powmod(K.q, u) - T).degree < 1:
            continue
        for y in u.roots():
            P = ProjPoint(K, (x, y, 1))
            if P in seen or (gx.eval_code(x, y) == 0 and gy.eval_code(x, y) == 0):
                continue
            if P.is_rational(c.q):
                continue
            seen.add(P)
            found.append(P)
    return found[:count]


def default_sampling_field(c: Curve) -> Field:
    """F_(q^4) when it fits, else F_(q^2).

    Points over F_(q^2) are special on curves that are Frobenius non-classical
    for q^2 (the Artin-Mumford curve is one), so a larger field is preferred.
    """
    return c.base_field.extension(4 if c.q ** 4 <= 1 << 20 else 2)


def generic_order_sequence(c: Curve, L: LinearSystem, samples: int = 10, seed: int = 0,
                           field: Field | None = None) -> OrderSeq:
    """Smallest order sequence seen at random non-rational smooth points (empirical)."""
    if samples < 1:
        raise PreconditionError("samples must be >= 1")
    K = field or default_sampling_field(c)
    rng = random.Random(seed)
    base = {P.embed(K) for P, _ in L.base_points}
    pts = _random_smooth_points(c, K, samples, rng, exclude=base)
    if len(pts) < samples:
        raise PreconditionError(f"only {len(pts)} suitable points found over {K!r}")
    best = None
    for P in pts:
        j = order_sequence_at(branches_at(c, P, K)[0], L)
        if best is None or j.values < best:
            best = j.values
    return OrderSeq(best, "generic_eps", empirical=True)


def am_osculating_conic(a: FieldElement, b: FieldElement, q: int) -> BivarPoly:
    """(ab - 1)^q - a^q Y - b^q X + XY for a point (a, b) of (X^q - X)(Y^q - Y) = 1."""
    if a.field != b.field:
        raise PreconditionError("a and b must lie in the same field")
    K = a.field
    if (a ** q - a) * (b ** q - b) != K.one:
        raise PreconditionError(f"({a}, {b}) is not on the Artin-Mumford curve for q = {q}")
    g = BivarPoly(K, {(0, 0): ((a * b - 1) ** q).code, (0, 1): (-(a ** q)).code,
                      (1, 0): (-(b ** q)).code, (1, 1): 1})
    alpha, beta, gamma = g.coeff(1, 0), g.coeff(0, 1), g.coeff(0, 0)
    # XY + alpha X + beta Y + gamma = (X + beta)(Y + alpha) + gamma - alpha beta
    assert gamma != K.mul(alpha, beta), "osculating conic degenerated into two lines"
    return g
