"""Slow, independent reference implementations used to cross-check the library.

Nothing here imports fqcurves arithmetic: field elements are coefficient
lists, polynomials are dicts or lists of ints, and all algorithms are the
textbook ones.
"""
from __future__ import annotations

import itertools


# -- finite fields as coefficient lists -----------------------------------------------

class NaiveField:
    """F_p[T]/(modulus); elements are ints coded little-endian base p, like the library."""

    def __init__(self, p, modulus):
        self.p = p
        self.modulus = list(modulus)
        self.k = len(modulus) - 1
        self.q = p ** self.k

    def vec(self, code):
        out = []
        for _ in range(self.k):
            out.append(code % self.p)
            code //= self.p
        return out

    def code(self, vec):
        return sum(c * self.p ** i for i, c in enumerate(vec))

    def add(self, a, b):
        return self.code([(x + y) % self.p for x, y in zip(self.vec(a), self.vec(b))])

    def neg(self, a):
        return self.code([(-x) % self.p for x in self.vec(a)])

    def mul(self, a, b):
        p, k = self.p, self.k
        va, vb = self.vec(a), self.vec(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(va):
            for j, y in enumerate(vb):
                prod[i + j] = (prod[i + j] + x * y) % p
        # reduce by the monic modulus, top degree first
        for d in range(len(prod) - 1, k - 1, -1):
            c = prod[d]
            if c:
                for i, m in enumerate(self.modulus):
                    prod[d - k + i] = (prod[d - k + i] - c * m) % p
        return self.code(prod[:k])

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def inv(self, a):
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise ZeroDivisionError(a)


def am_affine_points_oracle(F: NaiveField, q: int) -> int:
    """#{(x, y) in F^2 : (x^q - x)(y^q - y) = 1}, by tabulating x -> x^q - x."""
    from collections import Counter
    phi = Counter(F.add(F.pow(x, q), F.neg(x)) for x in range(F.q))
    total = 0
    for u, cu in phi.items():
        if u == 0:
            continue
        total += cu * phi.get(F.inv(u), 0)
    return total


# -- dense univariate polynomials over F_p (lists, low degree first) ---------------------

def ptrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(a, b, p):
    n = max(len(a), len(b))
    return ptrim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def pneg(a, p):
    return [(-x) % p for x in a]


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return ptrim(out)


def pdivexact(a, b, p):
    """a / b, asserting the division is exact."""
    a, b = ptrim(a), ptrim(b)
    inv = pow(b[-1], p - 2, p)
    out = [0] * max(len(a) - len(b) + 1, 0)
    a = list(a)
    for d in range(len(a) - len(b), -1, -1):
        c = a[d + len(b) - 1] * inv % p
        out[d] = c
        for i, y in enumerate(b):
            a[d + i] = (a[d + i] - c * y) % p
    assert not ptrim(a), "inexact division"
    return ptrim(out)


def peval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def order_at(a, x0, p):
    """Multiplicity of x0 as a root of a (None for the zero polynomial)."""
    a = ptrim(a)
    if not a:
        return None
    k = 0
    while peval(a, x0, p) == 0:
        a = pdivexact(a, [(-x0) % p, 1], p)
        k += 1
    return k


# -- bivariate polynomials as {(i, j): int} over F_p ------------------------------------

def bi_shear(f, c, p):
    """f(X - cY, Y)."""
    from math import comb
    out = {}
    for (i, j), a in f.items():
        for k in range(i + 1):
            coef = a * comb(i, k) * pow(-c, i - k, p) % p
            key = (k, j + i - k)
            out[key] = (out.get(key, 0) + coef) % p
    return {k: v for k, v in out.items() if v}


def y_coeffs(f, p):
    """Coefficients of f in Y as dense polynomials in X."""
    dy = max(j for _, j in f)
    cols = [[] for _ in range(dy + 1)]
    for (i, j), a in f.items():
        col = cols[j]
        while len(col) <= i:
            col.append(0)
        col[i] = (col[i] + a) % p
    return [ptrim(c) for c in cols]


def bareiss_det(M, p):
    """Determinant of a matrix with entries in F_p[X], fraction free."""
    n = len(M)
    M = [[list(e) for e in row] for row in M]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not M[k][k]:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return []
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = padd(pmul(M[i][j], M[k][k], p), pneg(pmul(M[i][k], M[k][j], p), p), p)
                M[i][j] = pdivexact(num, prev, p)
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign == 1 else pneg(d, p)


def resultant_y(f, g, p):
    """Res_Y(f, g) in F_p[X] via the Sylvester matrix."""
    A, B = y_coeffs(f, p), y_coeffs(g, p)
    m, n = len(A) - 1, len(B) - 1
    size = m + n
    if size == 0:
        return [1]
    rows = []
    for i in range(n):
        row = [[] for _ in range(size)]
        for j, c in enumerate(reversed(A)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [[] for _ in range(size)]
        for j, c in enumerate(reversed(B)):
            row[i + j] = c
        rows.append(row)
    return bareiss_det(rows, p)


def intersection_oracle(f, g, a, b, p):
    """I_(a,b)(f, g) for affine curves over F_p at a rational point.

    Shear X -> X + cY so that the point is alone on its vertical line and both
    leading Y-coefficients are constants; then read the order of the
    resultant at the sheared x-coordinate.  Returns the minimum over all
    admissible shears, which equals the true value once one shear separates
    the intersection points.
    """
    best = None
    for c in range(p):
        fs, gs = bi_shear(f, c, p), bi_shear(g, c, p)
        if len(y_coeffs(fs, p)[-1]) != 1 or len(y_coeffs(gs, p)[-1]) != 1:
            continue
        res = resultant_y(fs, gs, p)
        if not res:
            return None  # common component
        v = order_at(res, (a + c * b) % p, p)
        best = v if best is None else min(best, v)
    return best


# -- divisibility by pseudo-division in F_p[X][Y] ----------------------------------------

def divides_oracle(f, g, p):
    """Does f divide g in F_p[X, Y]?  f must be primitive as a polynomial in Y."""
    F, G = y_coeffs(f, p), y_coeffs(g, p)
    lc = F[-1]
    n = len(F) - 1
    R = [list(c) for c in G]
    while len(R) - 1 >= n and any(R):
        top = R[-1]
        if not top:
            R.pop()
            continue
        s = len(R) - 1 - n
        R = [pmul(c, lc, p) for c in R]
        for i, c in enumerate(F):
            R[s + i] = padd(R[s + i], pneg(pmul(top, c, p), p), p)
        while R and not R[-1]:
            R.pop()
    return not any(R)


# -- singular points over F_p by direct evaluation ---------------------------------------

def singular_points_oracle(F, p):
    """Rational singular points of the form F = {(i, j, l): c} as normalized tuples."""
    def ev(poly, x, y, z):
        return sum(c * pow(x, i, p) * pow(y, j, p) * pow(z, l, p) for (i, j, l), c in poly.items()) % p

    def partial(poly, k):
        out = {}
        for e, c in poly.items():
            if e[k]:
                e2 = list(e)
                e2[k] -= 1
                out[tuple(e2)] = (out.get(tuple(e2), 0) + c * e[k]) % p
        return out

    parts = [partial(F, k) for k in range(3)]
    pts = [(x, y, 1) for x in range(p) for y in range(p)] + [(x, 1, 0) for x in range(p)] + [(1, 0, 0)]
    return sorted(P for P in pts if ev(F, *P) == 0 and all(ev(D, *P) == 0 for D in parts))


def naive_points(f, p):
    """Affine zeros of {(i, j): c} over F_p."""
    return [(x, y) for x, y in itertools.product(range(p), repeat=2)
            if sum(c * pow(x, i, p) * pow(y, j, p) for (i, j), c in f.items()) % p == 0]
