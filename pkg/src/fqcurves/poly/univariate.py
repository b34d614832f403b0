"""Dense univariate polynomials over a finite field.

Coefficients are field codes (see :mod:`fqcurves.gf`), constant term first.
Prime-field products go through Kronecker substitution so that long products
run inside CPython's big-integer multiplication.
"""
from __future__ import annotations

from ..errors import PreconditionError
from ..gf import Field, FieldElement, format_code

_KRONECKER_MIN = 24


def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _kronecker(a, b, p):
    n = min(len(a), len(b))
    bits = (n * (p - 1) ** 2).bit_length() + 1
    shift = bits
    A = 0
    for x in reversed(a):
        A = (A << shift) | x
    B = 0
    for x in reversed(b):
        B = (B << shift) | x
    C = A * B
    mask = (1 << shift) - 1
    out = []
    for _ in range(len(a) + len(b) - 1):
        out.append((C & mask) % p)
        C >>= shift
    return out


def mul_codes(field: Field, a, b):
    """Product of two coefficient lists (codes)."""
    if not a or not b:
        return []
    if field.k == 1:
        p = field.p
        if min(len(a), len(b)) >= _KRONECKER_MIN:
            return _trim(_kronecker(a, b, p))
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return _trim([c % p for c in out])
    add, mul = field.add, field.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return _trim(out)


class UPoly:
    """Immutable dense polynomial in one variable over ``field``."""

    __slots__ = ("field", "c")

    def __init__(self, field: Field, coeffs=()):
        self.field = field
        self.c = tuple(_trim(list(coeffs)))

    # -- constructors ---------------------------------------------------------
    @classmethod
    def from_elements(cls, field: Field, elems) -> UPoly:
        return cls(field, [field(e).code for e in elems])

    @classmethod
    def from_ints(cls, field: Field, ints) -> UPoly:
        return cls(field, [field.from_int(n) for n in ints])

    @classmethod
    def monomial(cls, field: Field, n: int, code: int = 1) -> UPoly:
        return cls(field, [0] * n + [code])

    @classmethod
    def constant(cls, field: Field, code: int) -> UPoly:
        return cls(field, [code])

    # -- basic properties -----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    @property
    def lc(self) -> int:
        return self.c[-1] if self.c else 0

    def coeff(self, i: int) -> int:
        return self.c[i] if 0 <= i < len(self.c) else 0

    def valuation(self) -> int | None:
        for i, x in enumerate(self.c):
            if x:
                return i
        return None

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.field == other.field and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for i in range(len(self.c) - 1, -1, -1):
            x = self.c[i]
            if not x:
                continue
            cs = format_code(self.field, x)
            if self.field.k > 1 and " + " in cs:
                cs = f"({cs})"
            mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
            if not mono:
                parts.append(cs)
            elif x == 1:
                parts.append(mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)

    # -- ring operations --------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, UPoly):
            if other.field != self.field:
                raise PreconditionError("mixed fields in polynomial arithmetic")
            return other
        if isinstance(other, FieldElement):
            return UPoly(self.field, [self.field(other).code])
        if isinstance(other, int):
            return UPoly(self.field, [self.field.from_int(other)])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        add = self.field.add
        out = list(a)
        for i, y in enumerate(b):
            out[i] = add(out[i], y)
        return UPoly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return UPoly(self.field, [neg(x) for x in self.c])

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
        return UPoly(self.field, mul_codes(self.field, list(self.c), list(other.c)))

    __rmul__ = __mul__

    def scale(self, code: int) -> UPoly:
        mul = self.field.mul
        return UPoly(self.field, [mul(x, code) for x in self.c])

    def shift(self, n: int) -> UPoly:
        """Multiply by T^n."""
        if not self.c:
            return self
        return UPoly(self.field, [0] * n + list(self.c))

    def __pow__(self, e: int) -> UPoly:
        if e < 0:
            raise PreconditionError("negative exponent")
        result = UPoly(self.field, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divmod(self, other: UPoly) -> tuple[UPoly, UPoly]:
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        r = list(self.c)
        d = len(other.c) - 1
        if len(r) - 1 < d:
            return UPoly(f, []), self
        inv_lc = f.inv(other.c[-1])
        quo = [0] * (len(r) - d)
        b = other.c
        if f.k == 1:
            p = f.p
            for s in range(len(r) - 1 - d, -1, -1):
                c = r[s + d] * inv_lc % p
                if c:
                    quo[s] = c
                    for i in range(d + 1):
                        r[s + i] = (r[s + i] - c * b[i]) % p
        else:
            sub, mul = f.sub, f.mul
            for s in range(len(r) - 1 - d, -1, -1):
                c = mul(r[s + d], inv_lc)
                if c:
                    quo[s] = c
                    for i in range(d + 1):
                        r[s + i] = sub(r[s + i], mul(c, b[i]))
        return UPoly(f, quo), UPoly(f, r[:d])

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other: UPoly) -> UPoly:
        q, r = self.divmod(other)
        if r.c:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> UPoly:
        if not self.c or self.c[-1] == 1:
            return self
        return self.scale(self.field.inv(self.c[-1]))

    def gcd(self, other: UPoly) -> UPoly:
        """Monic gcd (zero if both are zero)."""
        a, b = self, other
        while b.c:
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> UPoly:
        f = self.field
        return UPoly(f, [f.mul(f.from_int(i), x) for i, x in enumerate(self.c)][1:])

    def __call__(self, x):
        """Evaluate at a code (int) or a FieldElement (returned in kind)."""
        f = self.field
        if isinstance(x, FieldElement):
            return FieldElement(f, self.eval_code(f(x).code))
        return self.eval_code(x)

    def eval_code(self, x: int) -> int:
        f = self.field
        acc = 0
        if f.k == 1:
            p = f.p
            for c in reversed(self.c):
                acc = (acc * x + c) % p
            return acc
        add, mul = f.add, f.mul
        for c in reversed(self.c):
            acc = add(mul(acc, x), c)
        return acc

    def compose_power(self, n: int) -> UPoly:
        """u(T^n)."""
        if n == 1 or len(self.c) <= 1:
            return self
        out = [0] * ((len(self.c) - 1) * n + 1)
        for i, x in enumerate(self.c):
            out[i * n] = x
        return UPoly(self.field, out)

    def powmod(self, e: int, m: UPoly) -> UPoly:
        result = UPoly(self.field, [1]) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            e >>= 1
            if e:
                base = (base * base) % m
        return result

    def change_field(self, target: Field) -> UPoly:
        if target == self.field:
            return self
        return UPoly(target, [target.embed_code(x, self.field) for x in self.c])

    def roots(self, field: Field | None = None) -> list[int]:
        """Distinct roots (codes) lying in ``field`` (default: own field), by exhaustive evaluation."""
        u = self if field is None else self.change_field(field)
        return [x for x in range(u.field.q) if u.eval_code(x) == 0]


def count_rational_roots(u: UPoly, field: Field | None = None) -> tuple[int, list[FieldElement]]:
    """Number of distinct roots of u in ``field`` together with the roots.

    The count is cross-checked against deg gcd(u, T^Q - T).
    """
    if u.is_zero():
        raise PreconditionError("zero polynomial has every element as a root")
    target = u.field if field is None else field
    v = u.change_field(target)
    roots = v.roots()
    t = UPoly(target, [0, 1])
    frob = t.powmod(target.q, v) - t if v.degree > 0 else UPoly(target, [])
    g = v.gcd(frob) if v.degree > 0 else UPoly(target, [1])
    assert g.degree == len(roots), "root count disagrees with gcd(u, T^q - T)"
    return len(roots), [FieldElement(target, r) for r in roots]


def is_squarefree(u: UPoly) -> bool:
    """True iff gcd(u, u') is constant; a non-constant u with u' = 0 is not squarefree."""
    if u.is_zero():
        raise PreconditionError("zero polynomial")
    if u.degree == 0:
        return True
    du = u.derivative()
    if du.is_zero():
        return False
    return u.gcd(du).degree == 0
