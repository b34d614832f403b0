"""Named curve families used throughout the tests and demos."""
from __future__ import annotations

from .classicality import am_polynomial
from .curve import Curve
from .errors import PreconditionError
from .gf import GF, Field, field_of_size
from .poly import BivarPoly


def artin_mumford(q: int) -> Curve:
    """(X^q - X)(Y^q - Y) = 1 over F_q."""
    K = field_of_size(q)
    return Curve(am_polynomial(K, q))


def hurwitz(n: int, l: int, field: Field | int) -> Curve:
    """X^n Y^l + X^l + Y^n = 0 (n > l >= 1)."""
    K = GF(field) if isinstance(field, int) else field
    if not n > l >= 1:
        raise PreconditionError("need n > l >= 1")
    return Curve(BivarPoly(K, {(n, l): 1, (l, 0): 1, (0, n): 1}))


def product_sextic(field: Field | int = 13) -> Curve:
    """X^6 Y^6 + X^6 + Y^6 - 3 = 0, by default over F_13."""
    K = GF(field) if isinstance(field, int) else field
    return Curve(BivarPoly(K, {(6, 6): 1, (6, 0): 1, (0, 6): 1, (0, 0): K.neg(K.from_int(3))}))


FAMILIES = {
    "artin-mumford": "q",
    "hurwitz": "n l (needs --p)",
    "product-sextic": "(field from --p, default 13)",
}


def from_family(name: str, args, p: int | None = None, k: int = 1) -> Curve:
    """Build a family member from CLI-style string arguments."""
    args = [int(a) for a in args]
    if name == "artin-mumford":
        if len(args) != 1:
            raise PreconditionError("artin-mumford takes one argument q")
        return artin_mumford(args[0])
    if name == "hurwitz":
        if len(args) != 2 or p is None:
            raise PreconditionError("hurwitz takes n l and needs --p")
        return hurwitz(args[0], args[1], GF(p, k))
    if name == "product-sextic":
        if args:
            raise PreconditionError("product-sextic takes no arguments")
        return product_sextic(GF(p or 13, k))
    raise PreconditionError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
