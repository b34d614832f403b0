"""Sparse bivariate and homogeneous trivariate polynomials over a finite field."""
from __future__ import annotations

import heapq
from math import comb

from ..errors import PreconditionError
from ..gf import Field, FieldElement, format_code
from .univariate import UPoly


def _fmt_coeff(field, code):
    s = format_code(field, code)
    return f"({s})" if field.k > 1 and (" + " in s or "*" in s or "^" in s or s == "w") else s


def _monomial_str(names, exps):
    parts = []
    for n, e in zip(names, exps):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


class BivarPoly:
    """Sparse polynomial sum c_ij X^i Y^j; ``terms`` maps (i, j) to a nonzero code.

    Instances are treated as immutable.  The variable names are only used for
    printing (chart polynomials print as (X, Z) or (Y, Z)).
    """

    __slots__ = ("field", "terms", "names")

    def __init__(self, field: Field, terms=None, names=("X", "Y")):
        self.field = field
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self.names = names

    # -- constructors ---------------------------------------------------------
    @classmethod
    def const(cls, field, value) -> BivarPoly:
        code = field(value).code if not isinstance(value, int) else field.from_int(value)
        return cls(field, {(0, 0): code})

    @classmethod
    def x(cls, field) -> BivarPoly:
        return cls(field, {(1, 0): 1})

    @classmethod
    def y(cls, field) -> BivarPoly:
        return cls(field, {(0, 1): 1})

    @classmethod
    def monomial(cls, field, i, j, code=1) -> BivarPoly:
        return cls(field, {(i, j): code})

    # -- properties -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    @property
    def deg_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def coeff(self, i, j) -> int:
        return self.terms.get((i, j), 0)

    def __eq__(self, other):
        if isinstance(other, BivarPoly):
            return self.field == other.field and self.terms == other.terms
        if isinstance(other, int):
            return self == BivarPoly.const(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        """Terms in printing order: total degree descending, then X-power descending."""
        return sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0]))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (i, j), c in self.sorted_terms():
            mono = _monomial_str(self.names, (i, j))
            if not mono:
                out.append(_fmt_coeff(self.field, c))
            elif c == 1:
                out.append(mono)
            else:
                out.append(f"{_fmt_coeff(self.field, c)}*{mono}")
        return " + ".join(out)

    def __repr__(self):
        return f"BivarPoly({self}, {self.field!r})"

    # -- arithmetic -------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, BivarPoly):
            if other.field != self.field:
                raise PreconditionError("mixed fields in polynomial arithmetic")
            return other
        if isinstance(other, (int, FieldElement)):
            return BivarPoly.const(self.field, other)
        return NotImplemented

    def _new(self, terms):
        return BivarPoly(self.field, terms, self.names)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        add = self.field.add
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = add(out.get(m, 0), c)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return self._new({m: neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        add, mul = f.add, f.mul
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = add(out.get(m, 0), mul(c1, c2))
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BivarPoly:
        if e < 0:
            raise PreconditionError("negative exponent")
        result = BivarPoly.const(self.field, 1)
        result.names = self.names
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, code: int) -> BivarPoly:
        mul = self.field.mul
        return self._new({m: mul(c, code) for m, c in self.terms.items()})

    def shift(self, di: int, dj: int) -> BivarPoly:
        return self._new({(i + di, j + dj): c for (i, j), c in self.terms.items()})

    # -- evaluation and calculus ---------------------------------------------------
    def eval_code(self, a: int, b: int) -> int:
        f = self.field
        add, mul, pw = f.add, f.mul, f.pow
        acc = 0
        for (i, j), c in self.terms.items():
            acc = add(acc, mul(c, mul(pw(a, i), pw(b, j))))
        return acc

    def __call__(self, a, b):
        f = self.field
        return FieldElement(f, self.eval_code(f(a).code if not isinstance(a, int) else f.from_int(a),
                                              f(b).code if not isinstance(b, int) else f.from_int(b)))

    def diff_x(self) -> BivarPoly:
        f = self.field
        return self._new({(i - 1, j): f.mul(f.from_int(i), c) for (i, j), c in self.terms.items() if i})

    def diff_y(self) -> BivarPoly:
        f = self.field
        return self._new({(i, j - 1): f.mul(f.from_int(j), c) for (i, j), c in self.terms.items() if j})

    def translate(self, a: int, b: int) -> BivarPoly:
        """f(X + a, Y + b) for codes a, b."""
        f = self.field
        add, mul, pw = f.add, f.mul, f.pow
        out = {}
        for (i, j), c in self.terms.items():
            xs = [mul(f.from_int(comb(i, s)), pw(a, i - s)) for s in range(i + 1)]
            ys = [mul(f.from_int(comb(j, s)), pw(b, j - s)) for s in range(j + 1)]
            for s, xc in enumerate(xs):
                if not xc:
                    continue
                cx = mul(c, xc)
                for t, yc in enumerate(ys):
                    if yc:
                        m = (s, t)
                        out[m] = add(out.get(m, 0), mul(cx, yc))
        return self._new(out)

    def homogeneous_part(self, k: int) -> BivarPoly:
        return self._new({m: c for m, c in self.terms.items() if m[0] + m[1] == k})

    def lowest_degree(self) -> int:
        return min((i + j for i, j in self.terms), default=-1)

    def lowest_form(self) -> BivarPoly:
        return self.homogeneous_part(self.lowest_degree())

    def top_form(self) -> BivarPoly:
        return self.homogeneous_part(self.degree)

    def swap(self) -> BivarPoly:
        return BivarPoly(self.field, {(j, i): c for (i, j), c in self.terms.items()},
                         (self.names[1], self.names[0]))

    def change_field(self, target: Field) -> BivarPoly:
        if target == self.field:
            return self
        return BivarPoly(target, {m: target.embed_code(c, self.field) for m, c in self.terms.items()},
                         self.names)

    def rename(self, names) -> BivarPoly:
        return BivarPoly(self.field, self.terms, tuple(names))

    def coeffs_in_y(self) -> list[UPoly]:
        """[a_0(X), ..., a_D(X)] with f = sum a_j(X) Y^j."""
        D = self.deg_y
        rows = [dict() for _ in range(D + 1)]
        for (i, j), c in self.terms.items():
            rows[j][i] = c
        out = []
        for r in rows:
            n = max(r, default=-1)
            out.append(UPoly(self.field, [r.get(i, 0) for i in range(n + 1)]))
        return out

    def binary_form_to_upoly(self) -> UPoly:
        """For a form L(X, Y) return L(1, T)."""
        r = {}
        for (i, j), c in self.terms.items():
            r[j] = self.field.add(r.get(j, 0), c)
        n = max(r, default=-1)
        return UPoly(self.field, [r.get(j, 0) for j in range(n + 1)])

    def leading_term_lex(self):
        """Largest monomial under lex order with X > Y, and its coefficient."""
        m = max(self.terms)
        return m, self.terms[m]


def poly_divides(f: BivarPoly, g: BivarPoly) -> bool:
    """Divide g by the single divisor f under lex order (X > Y); True iff the remainder is 0."""
    return lex_remainder(g, f).is_zero()


def lex_remainder(g: BivarPoly, f: BivarPoly) -> BivarPoly:
    if f.is_zero():
        raise PreconditionError("division by the zero polynomial")
    fld = f.field
    add, mul, neg = fld.add, fld.mul, fld.neg
    (li, lj), lc = f.leading_term_lex()
    inv_lc = fld.inv(lc)
    tail = [((i, j), neg(mul(c, inv_lc))) for (i, j), c in f.terms.items() if (i, j) != (li, lj)]
    work = dict(g.terms)
    heap = [(-i, -j) for i, j in work]
    heapq.heapify(heap)
    rem = {}
    while heap:
        ni, nj = heapq.heappop(heap)
        m = (-ni, -nj)
        c = work.pop(m, 0)
        if not c:
            continue
        i, j = m
        if i >= li and j >= lj:
            di, dj = i - li, j - lj
            for (ti, tj), tc in tail:
                mm = (ti + di, tj + dj)
                old = work.get(mm)
                new = add(old or 0, mul(c, tc))
                if old is None:
                    heapq.heappush(heap, (-mm[0], -mm[1]))
                if new:
                    work[mm] = new
                else:
                    work[mm] = 0
        else:
            rem[m] = c
    return BivarPoly(fld, rem, g.names)


CHARTS = ("Z", "Y", "X")
_CHART_NAMES = {"Z": ("X", "Y"), "Y": ("X", "Z"), "X": ("Y", "Z")}


class HomogPoly:
    """Homogeneous polynomial in X, Y, Z; ``terms`` maps (i, j, l) to a nonzero code."""

    __slots__ = ("field", "terms", "degree")

    def __init__(self, field: Field, terms, degree: int):
        self.field = field
        self.terms = {m: c for m, c in terms.items() if c}
        self.degree = degree
        for m in self.terms:
            if sum(m) != degree:
                raise PreconditionError(f"monomial {m} is not of degree {degree}")

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, HomogPoly) and self.field == other.field
                and self.degree == other.degree and self.terms == other.terms)

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            mono = _monomial_str("XYZ", m)
            if not mono:
                out.append(_fmt_coeff(self.field, c))
            elif c == 1:
                out.append(mono)
            else:
                out.append(f"{_fmt_coeff(self.field, c)}*{mono}")
        return " + ".join(out)

    def __repr__(self):
        return f"HomogPoly({self}, {self.field!r})"

    def __add__(self, other: HomogPoly) -> HomogPoly:
        if other.degree != self.degree and self.terms and other.terms:
            raise PreconditionError("adding forms of different degrees")
        add = self.field.add
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = add(out.get(m, 0), c)
        return HomogPoly(self.field, out, self.degree if self.terms else other.degree)

    def __neg__(self):
        neg = self.field.neg
        return HomogPoly(self.field, {m: neg(c) for m, c in self.terms.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(self.field.from_int(other))
        f = self.field
        add, mul = f.add, f.mul
        out = {}
        for (a, b, c), x in self.terms.items():
            for (d, e, g), y in other.terms.items():
                m = (a + d, b + e, c + g)
                out[m] = add(out.get(m, 0), mul(x, y))
        return HomogPoly(f, out, self.degree + other.degree)

    def scale(self, code: int) -> HomogPoly:
        mul = self.field.mul
        return HomogPoly(self.field, {m: mul(c, code) for m, c in self.terms.items()}, self.degree)

    def eval_code(self, x: int, y: int, z: int) -> int:
        f = self.field
        add, mul, pw = f.add, f.mul, f.pow
        acc = 0
        for (i, j, l), c in self.terms.items():
            acc = add(acc, mul(c, mul(pw(x, i), mul(pw(y, j), pw(z, l)))))
        return acc

    def dehomogenize(self, chart: str = "Z") -> BivarPoly:
        """Set the chart coordinate to 1; remaining coordinates keep their XYZ order."""
        if chart not in _CHART_NAMES:
            raise PreconditionError(f"unknown chart {chart!r}")
        drop = "XYZ".index(chart)
        add = self.field.add
        out = {}
        for m, c in self.terms.items():
            key = tuple(e for k, e in enumerate(m) if k != drop)
            out[key] = add(out.get(key, 0), c)
        return BivarPoly(self.field, out, _CHART_NAMES[chart])

    def change_field(self, target: Field) -> HomogPoly:
        if target == self.field:
            return self
        return HomogPoly(target, {m: target.embed_code(c, self.field) for m, c in self.terms.items()},
                         self.degree)

    def monic(self) -> HomogPoly:
        """Scale so the coefficient of the largest monomial (lex, X > Y > Z) is 1."""
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.terms[max(self.terms)]))

    def linear_substitute(self, rows) -> HomogPoly:
        """F(L_0, L_1, L_2) where L_k = rows[k][0] X + rows[k][1] Y + rows[k][2] Z (codes)."""
        f = self.field
        lin = [HomogPoly(f, {(1, 0, 0): r[0], (0, 1, 0): r[1], (0, 0, 1): r[2]}, 1) for r in rows]
        one = HomogPoly(f, {(0, 0, 0): 1}, 0)
        cache = [[one] for _ in range(3)]

        def power(k, e):
            while len(cache[k]) <= e:
                cache[k].append(cache[k][-1] * lin[k])
            return cache[k][e]

        out = HomogPoly(f, {}, self.degree)
        for (i, j, l), c in self.terms.items():
            term = power(0, i) * power(1, j) * power(2, l)
            out = out + term.scale(c)
        return HomogPoly(f, out.terms, self.degree)


def homogenize(f: BivarPoly, degree: int | None = None) -> HomogPoly:
    """F(X, Y, Z) = Z^d f(X/Z, Y/Z) with d = deg f unless a larger degree is requested."""
    if f.is_zero():
        raise PreconditionError("cannot homogenize the zero polynomial")
    d = f.degree if degree is None else degree
    if d < f.degree:
        raise PreconditionError("requested degree below the polynomial degree")
    return HomogPoly(f.field, {(i, j, d - i - j): c for (i, j), c in f.terms.items()}, d)


def dehomogenize(F: HomogPoly, chart: str = "Z") -> BivarPoly:
    return F.dehomogenize(chart)
