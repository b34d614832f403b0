"""Finite fields GF(p^k) with exact arithmetic.

Elements of GF(p^k) = F_p[T]/(M) are handled internally as integer *codes*:
the coefficient vector (c_0, ..., c_{k-1}) of the residue class, constant
term first, is stored as ``c_0 + c_1*p + ... + c_{k-1}*p^(k-1)``.  Counting
0, 1, ..., q-1 therefore walks the coefficient vectors in odometer order.

Polynomial and curve code works on codes through the ``Field`` methods
(``add``, ``mul``, ...) for speed; ``FieldElement`` wraps a code for the
public, operator-based API.
"""
from __future__ import annotations

import functools
import itertools

from .errors import PreconditionError

MAX_FIELD_SIZE = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p^k, or raise if q is not a prime power."""
    if q < 2:
        raise PreconditionError(f"{q} is not a prime power")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise PreconditionError(f"{q} is not a prime power")
    p, k = fs[0], 0
    while q > 1:
        q //= p
        k += 1
    return p, k


# -- dense polynomials over F_p as little-endian int lists --------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _pmulmod(a, b, m, p):
    return _pmod(_pmul(a, b, p), m, p)


def _ppowmod(a, e, m, p):
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        e >>= 1
        if e:
            base = _pmulmod(base, base, m, p)
    return result


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(modulus, p: int) -> bool:
    """Ben-Or test: gcd(M, T^(p^j) - T mod M) = 1 for j = 1 .. k//2."""
    m = _trim([c % p for c in modulus])
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    t = [0, 1]
    h = t
    for _ in range(k // 2):
        h = _ppowmod(h, p, m, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(m, _trim(diff), p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k, lower coefficients in odometer order.

    Candidates T^k + c_{k-1}T^{k-1} + ... + c_0 are tried in increasing order
    of the code c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
    """
    if k == 1:
        return (0, 1)
    for code in range(p ** k):
        low = [(code // p ** i) % p for i in range(k)]
        if low[0] == 0:
            continue
        cand = low + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class Field:
    """The finite field F_p[T]/(modulus) of size q = p^k.

    Use :func:`GF` to obtain cached instances.  ``extension(m)`` builds
    GF(q^m) as a single-level field of degree k*m over F_p together with an
    explicit embedding of this field.
    """

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not is_prime(p):
            raise PreconditionError(f"characteristic {p} is not prime")
        if k < 1:
            raise PreconditionError("extension degree must be >= 1")
        if p ** k > MAX_FIELD_SIZE:
            raise PreconditionError(f"field size {p}^{k} exceeds {MAX_FIELD_SIZE}")
        if modulus is None:
            modulus = smallest_irreducible(p, k)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise PreconditionError("modulus must be monic of degree k")
            if not is_irreducible(modulus, p):
                raise PreconditionError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = tuple(modulus)
        self.subfield: Field | None = None
        self._embed_images: list[int] | None = None
        self._extensions: dict[int, Field] = {}
        if k == 1:
            self._setup_prime()
        else:
            self._setup_tables()

    # -- arithmetic on codes ---------------------------------------------
    def _setup_prime(self):
        p = self.p
        self.add = lambda a, b: (a + b) % p
        self.sub = lambda a, b: (a - b) % p
        self.neg = lambda a: (-a) % p
        self.mul = lambda a, b: a * b % p

    def _setup_tables(self):
        p, k, q = self.p, self.k, self.q
        n = q - 1
        m = list(self.modulus)

        def to_list(code):
            return _trim([(code // p ** i) % p for i in range(k)])

        def to_code(lst):
            return sum(c * p ** i for i, c in enumerate(lst))

        # primitive element search in code order
        factors = prime_factors(n)
        gen = None
        for code in range(2, q):
            g = to_list(code)
            if all(_ppowmod(g, n // f, m, p) != [1] for f in factors):
                gen = g
                break
        exp = [0] * (2 * n)
        log = [0] * q
        cur = [1]
        for i in range(n):
            c = to_code(cur)
            exp[i] = exp[i + n] = c
            log[c] = i
            cur = _pmulmod(cur, gen, m, p)
        neg = [to_code([(-c) % p for c in to_list(code)]) for code in range(q)]
        zech = [0] * n
        for d in range(n):
            v = exp[d]
            one_plus = (v - v % p) + (v % p + 1) % p
            zech[d] = log[one_plus] if one_plus else -1
        self._exp, self._log, self._neg, self._zech = exp, log, neg, zech
        self.primitive = exp[1]

        def add(a, b):
            if a == 0:
                return b
            if b == 0:
                return a
            la = log[a]
            d = log[b] - la
            if d < 0:
                d += n
            z = zech[d]
            if z < 0:
                return 0
            return exp[la + z]

        def mul(a, b):
            if a == 0 or b == 0:
                return 0
            return exp[log[a] + log[b]]

        self.add = add
        self.sub = lambda a, b: add(a, neg[b])
        self.neg = neg.__getitem__
        self.mul = mul

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.k == 1:
            return pow(a, e, self.p)
        return self._exp[self._log[a] * e % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Code of the image of the integer n (prime subfield)."""
        return n % self.p

    def to_coeffs(self, code: int) -> tuple[int, ...]:
        p = self.p
        return tuple((code // p ** i) % p for i in range(self.k))

    def from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            lst = _pmod(coeffs, list(self.modulus), self.p) if self.k > 1 else [sum(coeffs[:1]) % self.p]
        else:
            lst = [c % self.p for c in coeffs]
        return sum(c * self.p ** i for i, c in enumerate(lst))

    def is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    # -- element-level API -------------------------------------------------
    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field == self:
                return value
            return self.embed(value)
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        return FieldElement(self, self.from_coeffs(value))

    def element(self, code: int) -> FieldElement:
        if not 0 <= code < self.q:
            raise PreconditionError(f"code {code} out of range for {self!r}")
        return FieldElement(self, code)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """Residue class of T (equal to the prime-field element 0 when k = 1)."""
        return FieldElement(self, self.p % self.q if self.k > 1 else 0)

    def elements(self):
        """All q elements in odometer order of their coefficient vectors."""
        return (FieldElement(self, c) for c in range(self.q))

    def __iter__(self):
        return self.elements()

    def __len__(self):
        return self.q

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"

    # -- subfields, embeddings, Frobenius ------------------------------------
    def extension(self, m: int) -> Field:
        """GF(q^m) as one field of degree k*m over F_p, with an embedding of self."""
        if m < 1:
            raise PreconditionError("extension degree must be >= 1")
        if m == 1:
            return self
        if m in self._extensions:
            return self._extensions[m]
        if self.k == 1:
            ext = GF(self.p, m)
        else:
            ext = Field(self.p, self.k * m)
            ext.subfield = self
            # smallest root of our modulus inside the extension
            root = None
            for code in range(ext.q):
                acc = 0
                for c in reversed(self.modulus):
                    acc = ext.add(ext.mul(acc, code), c)
                if acc == 0:
                    root = code
                    break
            images = [1]
            for _ in range(1, self.k):
                images.append(ext.mul(images[-1], root))
            ext._embed_images = images
        self._extensions[m] = ext
        return ext

    def is_subfield_of(self, other: Field) -> bool:
        if self == other or self.k == 1:
            return other.p == self.p and other.k % self.k == 0
        return other.subfield is not None and (
            other.subfield == self or self.is_subfield_of(other.subfield))

    def embed_code(self, code: int, source: Field) -> int:
        """Image in self of ``code`` from ``source`` under the stored embedding."""
        if source == self:
            return code
        if source.p != self.p:
            raise PreconditionError(f"no embedding {source!r} -> {self!r}")
        if source.k == 1:
            return code
        if self.subfield is None:
            raise PreconditionError(f"no embedding data for {source!r} -> {self!r}")
        if self.subfield != source:
            code = self.subfield.embed_code(code, source)
        acc = 0
        for c, img in zip(self.subfield.to_coeffs(code), self._embed_images):
            if c:
                acc = self.add(acc, self.mul(c, img))
        return acc

    def embed(self, a: FieldElement) -> FieldElement:
        return FieldElement(self, self.embed_code(a.code, a.field))

    def base_size(self) -> int:
        """Size of the designated base subfield (p when none is stored)."""
        return self.subfield.q if self.subfield is not None else self.p

    def frobenius_code(self, code: int, r: int = 1, base_q: int | None = None) -> int:
        if r < 1:
            raise PreconditionError("Frobenius exponent must be >= 1")
        base_q = self.base_size() if base_q is None else base_q
        return self.pow(code, base_q ** r)


class FieldElement:
    """An immutable element of a :class:`Field`."""

    __slots__ = ("field", "code")

    def __init__(self, field: Field, code: int):
        self.field = field
        self.code = code

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise PreconditionError(f"mixed fields {self.field!r} and {other.field!r}")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.sub(o, self.code))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.div(self.code, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.div(o, self.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.code))

    def frobenius(self, r: int = 1, base_q: int | None = None) -> FieldElement:
        """a^(b^r) where b is the size of the base subfield (default: stored subfield or F_p)."""
        return FieldElement(self.field, self.field.frobenius_code(self.code, r, base_q))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.to_coeffs(self.code)

    def is_zero(self) -> bool:
        return self.code == 0

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        if self.field.k != 1:
            raise TypeError("only prime-field elements convert to int")
        return self.code

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.code))

    def __repr__(self):
        return format_code(self.field, self.code)


def format_code(field: Field, code: int) -> str:
    if field.k == 1:
        return str(code)
    parts = []
    for i, c in reversed(list(enumerate(field.to_coeffs(code)))):
        if c == 0:
            continue
        mono = "" if i == 0 else ("w" if i == 1 else f"w^{i}")
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts) if parts else "0"


@functools.lru_cache(maxsize=None)
def _gf_cached(p: int, k: int, modulus) -> Field:
    return Field(p, k, modulus)


def GF(p: int, k: int = 1, modulus=None) -> Field:
    """Cached field constructor; the same arguments return the same object."""
    return _gf_cached(p, k, tuple(modulus) if modulus is not None else None)


def field_of_size(q: int) -> Field:
    p, k = prime_power(q)
    return GF(p, k)


def embed(a: FieldElement, target: Field) -> FieldElement:
    """Image of ``a`` in ``target`` (a ring homomorphism)."""
    return target.embed(a)


def frobenius(a: FieldElement, r: int = 1, base_q: int | None = None) -> FieldElement:
    return a.frobenius(r, base_q)


def enumerate_field(field: Field):
    return field.elements()


def subfield_degree(field: Field, code: int, q: int) -> int:
    """Smallest e >= 1 with code^(q^e) = code, i.e. the element lies in GF(q^e)."""
    for e in itertools.count(1):
        if field.pow(code, q ** e) == code:
            return e
