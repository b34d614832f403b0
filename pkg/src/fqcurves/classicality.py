"""Function-field arithmetic, Hasse derivatives and Frobenius order sequences.

Elements of F_q(x)[y]/(f) are stored as N(x, y) / den(x) with N of Y-degree
below D = deg_Y f and den monic.  Reduction modulo f is pseudo-division by
the Y-leading coefficient, so only polynomial arithmetic in x is needed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .errors import BudgetExceeded, PreconditionError, UnsupportedError
from .gf import Field
from .linalg import rank
from .poly.bivariate import BivarPoly, poly_divides
from .poly.univariate import UPoly

# ---------------------------------------------------------------------------
# polynomials in y with UPoly coefficients: lists, index = power of y


def _yp_trim(a):
    while a and a[-1].is_zero():
        a.pop()
    return a


def _yp_add(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        if i < len(a) and i < len(b):
            out.append(a[i] + b[i])
        else:
            out.append(a[i] if i < len(a) else b[i])
    return _yp_trim(out)


def _yp_scale(a, u: UPoly):
    if u.is_zero():
        return []
    return _yp_trim([c * u for c in a])


def _yp_mul(a, b, zero):
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return _yp_trim(out)


def _yp_content(polys, zero):
    g = zero
    for p in polys:
        if not p.is_zero():
            g = g.gcd(p)
            if g.degree == 0:
                break
    return g


class FunctionField:
    """F_q(x, y) with f(x, y) = 0, for f of positive degree in Y."""

    def __init__(self, f: BivarPoly):
        self.f = f
        self.field = f.field
        self.D = f.deg_y
        if self.D < 1:
            raise PreconditionError("f must involve Y")
        self.a = f.coeffs_in_y()
        self.lc = self.a[-1]
        self._zero = UPoly(self.field, [])
        self._one = UPoly(self.field, [1])
        self._ypow = {}
        self._ypow_powers = {}

    # -- construction ----------------------------------------------------------------
    def element(self, num, den=None) -> FFElement:
        num = _yp_trim([c if isinstance(c, UPoly) else UPoly(self.field, c) for c in num])
        den = den if den is not None else self._one
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        return self._reduce(num, den)

    def zero(self) -> FFElement:
        return FFElement(self, (), self._one)

    def one(self) -> FFElement:
        return FFElement(self, (self._one,), self._one)

    def x(self) -> FFElement:
        return self.from_poly(BivarPoly.x(self.field))

    def y(self) -> FFElement:
        return self.from_poly(BivarPoly.y(self.field))

    def from_upoly(self, u: UPoly) -> FFElement:
        return self.element([u])

    def from_poly(self, g: BivarPoly, den: BivarPoly | UPoly | None = None) -> FFElement:
        """Class of g (divided by ``den``) in the function field."""
        if g.field != self.field:
            g = g.change_field(self.field)
        e = self.element(g.coeffs_in_y()) if not g.is_zero() else self.zero()
        if den is None:
            return e
        if isinstance(den, UPoly):
            return e.div_upoly(den)
        d = self.from_poly(den)
        if d.is_zero():
            raise ZeroDivisionError("denominator vanishes modulo f")
        return e * d.inverse()

    # -- internals -----------------------------------------------------------------------
    def _reduce(self, num, den) -> FFElement:
        D, a, lc = self.D, self.a, self.lc
        num = list(num)
        while len(num) > D:
            e = len(num) - 1
            c = num[e]
            shift = e - D
            num = [x * lc for x in num]
            for j in range(D + 1):
                if not a[j].is_zero():
                    num[shift + j] = num[shift + j] - c * a[j]
            num.pop()
            _yp_trim(num)
            den = den * lc
        return self._normalize(num, den)

    def _normalize(self, num, den) -> FFElement:
        num = _yp_trim(list(num))
        if not num:
            return FFElement(self, (), self._one)
        g = den
        for c in num:
            if g.degree == 0:
                break
            if not c.is_zero():
                g = g.gcd(c)
        if g.degree > 0:
            num = [c.exact_div(g) if not c.is_zero() else c for c in num]
            den = den.exact_div(g)
        if den.lc != 1:
            s = self.field.inv(den.lc)
            num = [c.scale(s) for c in num]
            den = den.scale(s)
        return FFElement(self, tuple(num), den)

    # -- Frobenius -------------------------------------------------------------------
    def _sigma(self, u: UPoly, s: int) -> UPoly:
        """Apply c -> c^(p^s) to coefficients and substitute x -> x^(p^s)."""
        K = self.field
        if K.k == 1 or s % K.k == 0:
            coeffs = u.c
        else:
            e = K.p ** (s % K.k)
            coeffs = [K.pow(c, e) for c in u.c]
        return UPoly(K, coeffs).compose_power(K.p ** s)

    def y_power(self, s: int) -> FFElement:
        """y^(p^s), by iterating the p-th power map."""
        if s in self._ypow:
            return self._ypow[s]
        if s == 0:
            self._ypow[0] = self.y()
        elif s == 1:
            self._ypow[1] = self.y() ** self.field.p
        else:
            self._ypow[s] = self._frob_with(self.y_power(s - 1), 1)
        return self._ypow[s]

    def _y_power_list(self, s: int, n: int):
        lst = self._ypow_powers.setdefault(s, [self.one()])
        while len(lst) < n:
            lst.append(lst[-1] * self.y_power(s))
        return lst

    def _frob_with(self, e: FFElement, s: int) -> FFElement:
        """e^(p^s) = sum sigma^s(n_j)(x^(p^s)) (y^(p^s))^j / sigma^s(den)(x^(p^s))."""
        if e.is_zero():
            return e
        powers = self._y_power_list(s, len(e.num))
        acc = self.zero()
        for j, c in enumerate(e.num):
            if not c.is_zero():
                acc = acc + powers[j].mul_upoly(self._sigma(c, s))
        return acc.div_upoly(self._sigma(e.den, s))

    def frobenius(self, e: FFElement, Q: int) -> FFElement:
        """e^Q for Q a power of p."""
        p = self.field.p
        s, t = 0, 1
        while t < Q:
            t *= p
            s += 1
        if t != Q:
            raise PreconditionError(f"{Q} is not a power of the characteristic")
        if s == 0:
            return e
        return self._frob_with(e, s)


class FFElement:
    """num(x, y) / den(x) in a FunctionField; always stored normalized."""

    __slots__ = ("ff", "num", "den")

    def __init__(self, ff: FunctionField, num, den: UPoly):
        self.ff = ff
        self.num = tuple(num)
        self.den = den

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other):
        if isinstance(other, FFElement):
            return self.ff is other.ff and self.num == other.num and self.den == other.den
        if isinstance(other, int):
            return self == self.ff.one().scale(self.ff.field.from_int(other)) if other else self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        parts = []
        for j, c in enumerate(self.num):
            if c.is_zero():
                continue
            ys = "" if j == 0 else ("*y" if j == 1 else f"*y^{j}")
            parts.append(f"({c!r}){ys}".replace("T", "x"))
        body = " + ".join(parts) if parts else "0"
        return body if self.den.degree == 0 else f"[{body}] / ({self.den!r})".replace("T", "x")

    def _lift(self, other):
        if isinstance(other, FFElement):
            return other
        if isinstance(other, int):
            return self.ff.one().scale(self.ff.field.from_int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        d1, d2 = self.den, other.den
        if d1 == d2:
            return self.ff._normalize(_yp_add(list(self.num), list(other.num)), d1)
        g = d1.gcd(d2)
        m1, m2 = d2.exact_div(g), d1.exact_div(g)
        num = _yp_add(_yp_scale(list(self.num), m1), _yp_scale(list(other.num), m2))
        return self.ff._normalize(num, d1 * m1)

    __radd__ = __add__

    def __neg__(self):
        return FFElement(self.ff, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return self.ff.zero()
        num = _yp_mul(list(self.num), list(other.num), self.ff._zero)
        return self.ff._reduce(num, self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> FFElement:
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ff.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, code: int) -> FFElement:
        if code == 0:
            return self.ff.zero()
        return FFElement(self.ff, tuple(c.scale(code) for c in self.num), self.den)

    def mul_upoly(self, u: UPoly) -> FFElement:
        if u.is_zero() or self.is_zero():
            return self.ff.zero()
        return self.ff._normalize([c * u for c in self.num], self.den)

    def div_upoly(self, u: UPoly) -> FFElement:
        if u.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        return self.ff._normalize(list(self.num), self.den * u)

    def inverse(self) -> FFElement:
        """Inverse via the extended pseudo-Euclidean algorithm in F_q[x][y]."""
        ff = self.ff
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in the function field")
        zero, one = ff._zero, ff._one
        if len(self.num) == 1:
            return ff._normalize([self.den], self.num[0])
        r0, s0 = list(ff.a), []
        r1, s1 = list(self.num), [one]
        while len(r1) > 1:
            R, S = r0, s0
            n = len(r1) - 1
            l = r1[-1]
            while len(R) - 1 >= n:
                e = len(R) - 1
                c = R[e]
                shift = [zero] * (e - n)
                R = _yp_add(_yp_scale(R, l), _yp_scale(shift + r1, -c))
                S = _yp_add(_yp_scale(S, l), _yp_scale(shift + s1, -c) if s1 else [])
                g = _yp_content(R + S, zero)
                if g.degree > 0:
                    R = [x.exact_div(g) if not x.is_zero() else x for x in R]
                    S = [x.exact_div(g) if not x.is_zero() else x for x in S]
            if not R:
                raise ArithmeticError("element is a zero divisor: f is reducible over F_q(x)")
            r0, s0, r1, s1 = r1, s1, R, S
        # r1 is a nonzero polynomial in x alone and r1 = s1 * self (mod f)
        inv = ff.element(s1, r1[0])
        return inv.mul_upoly(self.den)


def ff_reduce(ff: FunctionField, num: BivarPoly, den: BivarPoly | UPoly | None = None) -> FFElement:
    """Canonical representative of num/den in the function field of f."""
    if den is not None:
        d = ff.from_poly(den) if isinstance(den, BivarPoly) else ff.from_upoly(den)
        if d.is_zero():
            raise PreconditionError("denominator is divisible by f")
        return ff.from_poly(num) * d.inverse()
    return ff.from_poly(num)


class DerivationContext:
    """d/dx on the function field, with y' = -f_X / f_Y, and Hasse derivatives of order < p."""

    def __init__(self, f: BivarPoly):
        self.ff = FunctionField(f)
        self.p = f.field.p
        fy = self.ff.from_poly(f.diff_y())
        if fy.is_zero():
            raise UnsupportedError("f_Y vanishes on the curve: x is not a separating variable")
        self.inv_fy = fy.inverse()
        self.dy = -(self.ff.from_poly(f.diff_x()) * self.inv_fy)
        self._cache = {}

    def derivative(self, e: FFElement) -> FFElement:
        ff = self.ff
        if e.is_zero():
            return e
        nx = [c.derivative() for c in e.num]
        ny = [(c.scale(ff.field.from_int(j))) for j, c in enumerate(e.num)][1:]
        part = ff.element(nx)
        if ny:
            part = part + ff.element(ny) * self.dy
        out = part.div_upoly(e.den)
        dd = e.den.derivative()
        if not dd.is_zero():
            out = out - FFElement(ff, e.num, e.den).mul_upoly(dd).div_upoly(e.den)
        return out

    def derivatives(self, e: FFElement, kmax: int) -> list:
        """[e, d e, d^2 e, ..., d^kmax e]."""
        key = (e.num, e.den)
        lst = self._cache.setdefault(key, [e])
        while len(lst) <= kmax:
            lst.append(self.derivative(lst[-1]))
        return lst[:kmax + 1]

    def hasse(self, e: FFElement, k: int) -> FFElement:
        if k < 0:
            raise PreconditionError("negative order")
        if k >= self.p:
            raise UnsupportedError(f"Hasse derivative of order {k} in characteristic {self.p}")
        d = self.derivatives(e, k)[k]
        return d.scale(self.ff.field.inv(self.ff.field.from_int(factorial(k))))


def hasse_derivative(ctx: DerivationContext, e: FFElement, k: int) -> FFElement:
    return ctx.hasse(e, k)


# ---------------------------------------------------------------------------
# Wronskian-type determinants


@dataclass
class FrobeniusResult:
    """Minimal order sequence with nonzero determinant.

    ``sequence`` is None when every candidate within the supported orders gives
    a vanishing determinant; ``complete`` then is False.
    """

    sequence: object
    classical: bool
    complete: bool
    kind: str

    def __iter__(self):
        return iter((self.sequence, self.classical))


class _Determinant:
    """Laplace expansion with minors memoized over (rows, columns)."""

    def __init__(self, entries):
        self.entries = entries  # row id -> list of FFElement
        self.memo = {}

    def det(self, rows: tuple, cols: tuple) -> FFElement:
        key = (rows, cols)
        if key in self.memo:
            return self.memo[key]
        row = self.entries[rows[0]]
        if len(rows) == 1:
            res = row[cols[0]]
        else:
            res = None
            for idx, c in enumerate(cols):
                a = row[c]
                if a.is_zero():
                    continue
                minor = self.det(rows[1:], cols[:idx] + cols[idx + 1:])
                if minor.is_zero():
                    continue
                term = a * minor
                if idx % 2:
                    term = -term
                res = term if res is None else res + term
            if res is None:
                res = row[cols[0]].ff.zero()
        self.memo[key] = res
        return res


def _basis_elements(ctx: DerivationContext, basis):
    out = []
    for b in basis:
        out.append(b if isinstance(b, FFElement) else ctx.ff.from_poly(b))
    return out


def _check_independent(ctx, elems):
    # reduced representatives N/den: independence over F_q of the polynomial numerators
    # after clearing a common denominator
    den = ctx.ff._one
    for e in elems:
        den = den * e.den.exact_div(den.gcd(e.den))
    vecs = []
    for e in elems:
        m = den.exact_div(e.den)
        vec = {}
        for j, c in enumerate(e.num):
            for i, v in enumerate((c * m).c):
                if v:
                    vec[(i, j)] = v
        vecs.append(vec)
    keys = sorted(set().union(*vecs))
    rows = [[v.get(k, 0) for k in keys] for v in vecs]
    if rank(ctx.ff.field, rows) != len(elems):
        raise PreconditionError("basis elements are linearly dependent")


def _search(ctx, elems, frob_rows, nrows, cap, kind):
    r1 = len(elems)
    kmax = cap
    ders = {}
    for k in range(kmax + 1):
        ders[("D", k)] = [ctx.hasse(e, k) for e in elems]
    entries = dict(ders)
    frob_ids = []
    for Q in frob_rows:
        entries[("F", Q)] = [ctx.ff.frobenius(e, Q) for e in elems]
        frob_ids.append(("F", Q))
    det = _Determinant(entries)
    cols = tuple(range(r1))
    classical_seq = tuple(range(nrows))
    for combo in itertools.combinations(range(kmax + 1), nrows):
        rows = tuple(frob_ids) + tuple(("D", k) for k in combo)
        if not det.det(rows, cols).is_zero():
            return FrobeniusResult(combo, combo == classical_seq, True, kind)
    return FrobeniusResult(None, False, False, kind)


def frobenius_order_sequence(ctx: DerivationContext, basis, m: int, q: int | None = None,
                             cap: int | None = None) -> FrobeniusResult:
    """(nu_0, ..., nu_{r-1}) for the q^m-Frobenius, searched lexicographically over orders <= cap."""
    if m < 1:
        raise PreconditionError("m must be >= 1")
    elems = _basis_elements(ctx, basis)
    if len(elems) < 2:
        raise PreconditionError("basis needs at least two elements")
    _check_independent(ctx, elems)
    q = q or ctx.ff.field.q
    r = len(elems) - 1
    cap = min(ctx.p - 1, cap if cap is not None else ctx.p - 1)
    if cap < r - 1:
        raise UnsupportedError(f"orders up to {r - 1} are needed but only {cap} are supported")
    return _search(ctx, elems, [q ** m], r, cap, "frobenius_nu")


def double_frobenius_order_sequence(ctx: DerivationContext, basis, u: int, m: int,
                                    q: int | None = None, cap: int | None = None) -> FrobeniusResult:
    """(kappa_0, ..., kappa_{r-2}) with Frobenius rows for q^m and q^u."""
    from math import gcd
    if not (1 <= u < m) or gcd(u, m) != 1:
        raise PreconditionError("need 1 <= u < m with gcd(u, m) = 1")
    elems = _basis_elements(ctx, basis)
    if len(elems) < 3:
        raise PreconditionError("basis needs at least three elements")
    _check_independent(ctx, elems)
    q = q or ctx.ff.field.q
    r = len(elems) - 1
    cap = min(ctx.p - 1, cap if cap is not None else ctx.p - 1)
    if cap < r - 2:
        raise UnsupportedError(f"orders up to {r - 2} are needed but only {cap} are supported")
    return _search(ctx, elems, [q ** m, q ** u], r - 1, cap, "double_frobenius_kappa")


def am_polynomial(field: Field, Q: int) -> BivarPoly:
    """(X^Q - X)(Y^Q - Y) - 1 over ``field``."""
    xq = BivarPoly(field, {(Q, 0): 1}) - BivarPoly.x(field) if Q != 1 else BivarPoly(field, {})
    yq = BivarPoly(field, {(0, Q): 1}) - BivarPoly.y(field) if Q != 1 else BivarPoly(field, {})
    return xq * yq - BivarPoly.const(field, 1)


def am_divisibility_criterion(q: int, r: int, budget: int = 400, field: Field | None = None) -> bool:
    """Does (X^q - X)(Y^q - Y) - 1 divide (X^Q - X)(Y^Q - Y) - 1 with Q = q^(r-1)?"""
    from .gf import field_of_size
    if r < 1:
        raise PreconditionError("r must be >= 1")
    Q = q ** (r - 1)
    if Q > budget:
        raise BudgetExceeded(f"degree q^(r-1) = {Q} exceeds the budget {budget}")
    K = field or field_of_size(q)
    return poly_divides(am_polynomial(K, q), am_polynomial(K, Q))
