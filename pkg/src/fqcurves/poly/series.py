"""Truncated power series in t and Newton-Hensel lifting of curve branches."""
from __future__ import annotations

from ..errors import PreconditionError, PrecisionExhausted
from ..gf import Field, FieldElement
from .bivariate import BivarPoly
from .univariate import mul_codes


class PowerSeries:
    """c_0 + c_1 t + ... + c_{N-1} t^{N-1} + O(t^N) over ``field``.

    ``prec`` is the exclusive truncation order N.  Results of arithmetic never
    claim more precision than their inputs justify.
    """

    __slots__ = ("field", "coeffs", "prec")

    def __init__(self, field: Field, coeffs, prec: int):
        if prec < 0:
            raise PreconditionError("negative precision")
        c = list(coeffs[:prec])
        c.extend([0] * (prec - len(c)))
        self.field = field
        self.coeffs = c
        self.prec = prec

    @classmethod
    def constant(cls, field, code, prec):
        return cls(field, [code], prec)

    @classmethod
    def variable(cls, field, prec, shift=0):
        """shift + t as a series."""
        return cls(field, [shift, 1], prec)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if zero to full precision."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def valuation_or_raise(self) -> int:
        v = self.valuation()
        if v is None:
            raise PrecisionExhausted(f"series vanishes to precision {self.prec}")
        return v

    def is_zero(self) -> bool:
        return self.valuation() is None

    def __getitem__(self, i):
        return self.coeffs[i]

    def __eq__(self, other):
        return (isinstance(other, PowerSeries) and self.field == other.field
                and self.prec == other.prec and self.coeffs == other.coeffs)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                e = FieldElement(self.field, c)
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                terms.append(f"{e!r}" if not mono else (mono if c == 1 else f"({e!r})*{mono}"))
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(t^{self.prec})"

    def truncate(self, n: int) -> PowerSeries:
        return PowerSeries(self.field, self.coeffs, min(n, self.prec))

    def _check(self, other):
        if other.field != self.field:
            raise PreconditionError("series over different fields")

    def __add__(self, other):
        if isinstance(other, int):
            other = PowerSeries.constant(self.field, other, self.prec)
        self._check(other)
        n = min(self.prec, other.prec)
        add = self.field.add
        return PowerSeries(self.field, [add(a, b) for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)

    def __neg__(self):
        neg = self.field.neg
        return PowerSeries(self.field, [neg(a) for a in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        # a factor with positive valuation v lets the product keep v more terms
        va = self.valuation()
        vb = other.valuation()
        va = self.prec if va is None else va
        vb = other.prec if vb is None else vb
        n = min(self.prec + vb, other.prec + va)
        n = min(n, max(self.prec, other.prec))
        a = self.coeffs[:n]
        b = other.coeffs[:n]
        while a and a[-1] == 0:
            a.pop()
        while b and b[-1] == 0:
            b.pop()
        return PowerSeries(self.field, mul_codes(self.field, a, b)[:n], n)

    def scale(self, code: int) -> PowerSeries:
        mul = self.field.mul
        return PowerSeries(self.field, [mul(a, code) for a in self.coeffs], self.prec)

    def shift_down(self, v: int) -> PowerSeries:
        """Divide by t^v; the first v coefficients must vanish."""
        if any(self.coeffs[:v]):
            raise PreconditionError(f"series is not divisible by t^{v}")
        return PowerSeries(self.field, self.coeffs[v:], self.prec - v)

    def inverse(self) -> PowerSeries:
        """1/s for a unit s (c_0 != 0), by Newton iteration."""
        f = self.field
        if not self.coeffs or self.coeffs[0] == 0:
            raise PreconditionError("series is not a unit")
        n = self.prec
        inv = PowerSeries(f, [f.inv(self.coeffs[0])], 1)
        k = 1
        while k < n:
            k = min(2 * k, n)
            s = self.truncate(k)
            e = s * PowerSeries(f, inv.coeffs, k)
            two_minus = PowerSeries.constant(f, f.from_int(2), k) - e
            inv = PowerSeries(f, inv.coeffs, k) * two_minus
        return inv.truncate(n)

    def change_field(self, target: Field) -> PowerSeries:
        if target == self.field:
            return self
        return PowerSeries(target, [target.embed_code(c, self.field) for c in self.coeffs], self.prec)


def _eval_upoly_codes(field, coeffs_by_power, x: PowerSeries) -> PowerSeries:
    """sum c_i x^i by Horner, where coeffs_by_power maps i -> code."""
    n = x.prec
    if not coeffs_by_power:
        return PowerSeries(field, [], n)
    top = max(coeffs_by_power)
    acc = PowerSeries(field, [], n)
    for i in range(top, -1, -1):
        acc = acc * x if i < top else acc
        c = coeffs_by_power.get(i, 0)
        if c:
            acc = acc + PowerSeries.constant(field, c, n)
    return acc.truncate(n)


def series_eval(g: BivarPoly, x: PowerSeries, y: PowerSeries) -> PowerSeries:
    """g(x(t), y(t)) truncated to the common precision."""
    if x.prec == 0 or y.prec == 0:
        raise PreconditionError("precision must be positive")
    if x.field != y.field:
        raise PreconditionError("x and y series over different fields")
    field = x.field
    g = g.change_field(field) if g.field != field else g
    n = min(x.prec, y.prec)
    x, y = x.truncate(n), y.truncate(n)
    rows = {}
    for (i, j), c in g.terms.items():
        rows.setdefault(j, {})[i] = c
    if not rows:
        return PowerSeries(field, [], n)
    top = max(rows)
    acc = PowerSeries(field, [], n)
    for j in range(top, -1, -1):
        if j < top:
            acc = (acc * y).truncate(n)
        if j in rows:
            acc = acc + _eval_upoly_codes(field, rows[j], x)
    return acc.truncate(n)


def hensel_lift(g: BivarPoly, x: PowerSeries, y0: int, N: int) -> PowerSeries:
    """The unique y(t) with y(0) = y0 and g(x(t), y(t)) = O(t^N).

    Requires g(x(0), y0) = 0 and g_Y(x(0), y0) != 0; Newton iteration doubles
    the number of correct coefficients each pass.
    """
    field = x.field
    g = g.change_field(field) if g.field != field else g
    gy = g.diff_y()
    x0 = x.coeffs[0]
    if g.eval_code(x0, y0) != 0:
        raise PreconditionError("initial point is not on the curve")
    if gy.eval_code(x0, y0) == 0:
        raise PreconditionError("the Y-partial vanishes at the point; the branch needs splitting first")
    if x.prec < N:
        raise PreconditionError("x series has insufficient precision")
    y = PowerSeries(field, [y0], 1)
    k = 1
    while k < N:
        k = min(2 * k, N)
        xs = x.truncate(k)
        yk = PowerSeries(field, y.coeffs, k)
        val = series_eval(g, xs, yk)
        der = series_eval(gy, xs, yk)
        y = yk - val * der.inverse()
    return y


def hensel_expand(f: BivarPoly, a, b, N: int) -> PowerSeries:
    """Branch y(t) of f at the smooth affine point (a, b), parametrized by x = a + t."""
    field = a.field if isinstance(a, FieldElement) else f.field
    ac = a.code if isinstance(a, FieldElement) else field.from_int(a)
    bc = b.code if isinstance(b, FieldElement) else field.from_int(b)
    if N < 1:
        raise PreconditionError("precision must be positive")
    x = PowerSeries.variable(field, N, ac)
    return hensel_lift(f, x, bc, N)
