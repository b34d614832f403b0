"""Upper bounds for the number of rational branches of a plane curve.

Every bound is evaluated exactly with ``Fraction`` and floored once, at the end.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field, asdict
from fractions import Fraction
from math import floor, isqrt

from .errors import PreconditionError


def _seq(values) -> tuple:
    return tuple(getattr(values, "values", values))


def hasse_weil(q_m: int, g: int) -> tuple[int, int]:
    """(floor(q^m + 1 + 2g sqrt(q^m)), q^m + 1 + g floor(2 sqrt(q^m)))."""
    if g < 0:
        raise PreconditionError("genus must be non-negative")
    weil = q_m + 1 + isqrt(4 * g * g * q_m)
    serre = q_m + 1 + g * isqrt(4 * q_m)
    return weil, serre


def sv_bound(q_m: int, g: int, n: int, r: int, nu) -> int:
    nu = _seq(nu)
    if len(nu) != r or not nu or nu[0] != 0 or any(b <= a for a, b in zip(nu, nu[1:])):
        raise PreconditionError(f"nu must be strictly increasing of length {r} starting at 0, got {nu}")
    val = Fraction(sum(nu[1:]) * (2 * g - 2) + (q_m + r) * n, r)
    return floor(val)


def svc_bound(q_m: int, r1: int, r2: int, d: int | None = None) -> int:
    if d is not None and r1 + r2 != d:
        raise PreconditionError(f"r1 + r2 = {r1 + r2} differs from d = {d}: hypothesis (H) fails")
    return floor(2 * r1 * r2 + Fraction((r1 + r2) * (q_m - 3), 3))


def default_c_constants(q: int) -> tuple[int, int, int]:
    """Smallest admissible (c_1, c_m, c_{m-1})."""
    return q + 4, 2, q


def abc_bound(q: int, m: int, r1: int, r2: int, c1: int, cm: int, cm1: int, N1: int, Nm1: int) -> int:
    if m < 2:
        raise PreconditionError("the bound needs m >= 2")
    if cm < 2 or cm1 < q or c1 < q + 4:
        raise PreconditionError(f"constants violate c_m >= 2, c_(m-1) >= q, c_1 >= q + 4: {(c1, cm, cm1)}")
    num = 2 * r1 * r2 + (r1 + r2) * q * (q ** (m - 1) + 1) - (c1 - cm - cm1) * N1 - cm1 * Nm1
    return floor(Fraction(num, cm))


def ab_bound(q: int, u: int, m: int, g: int, n: int, r: int, kappa, c1: int, cu: int, cm: int, cmu: int,
             N1: int, Nu: int, Nmu: int) -> int:
    """N_m bound solved from the two-Frobenius inequality with free constants (raw evaluator)."""
    kappa = _seq(kappa)
    if len(kappa) != r - 1:
        raise PreconditionError(f"kappa must have length r - 1 = {r - 1}")
    if cm < 1:
        raise PreconditionError("c_m must be positive")
    rhs = sum(kappa) * (2 * g - 2) + (q ** u + q ** m + r - 1) * n
    rest = (c1 - cu - cm - cmu) * N1 + cu * Nu + cmu * Nmu
    return floor(Fraction(rhs - rest, cm))


def svf_svcl_bounds(q_m: int, r1: int, r2: int) -> tuple[int, int]:
    svf = floor(r1 * r2 + Fraction((r1 + r2) * q_m, 2))
    svcl = floor(4 * r1 * r2 + Fraction(2 * (r1 + r2) * (q_m - 5), 5))
    return svf, svcl


def comparison_conditions(q_m: int, r1: int, r2: int, q: int | None = None, N1: int | None = None) -> dict:
    """Sufficient conditions for svc to beat svf/svcl and (m = 2) for abc to beat svc."""
    s = r1 + r2
    k = r1 * r2 - r1 - r2
    flags = {"svc_threshold": Fraction(6 * k, s), "svc_beats_svf_svcl": q_m > Fraction(6 * k, s)}
    if q is not None and N1 is not None:
        rhs = Fraction(q * (q + 3) * s - 6 * k, 3 * (q + 2))
        flags["N1_threshold"] = rhs
        flags["abc_beats_svc_sufficient"] = N1 > rhs
    return flags


def bam_bound(q: int, kappa, g: int | None = None) -> int:
    """2q((kappa_0 + kappa_1)(q - 2) + q^2 + q + 2)."""
    kappa = _seq(kappa)
    if len(kappa) != 2:
        raise PreconditionError("kappa must have length 2")
    if g is not None and g != (q - 1) ** 2:
        raise PreconditionError(f"genus {g} is not (q-1)^2")
    return 2 * q * ((kappa[0] + kappa[1]) * (q - 2) + q * q + q + 2)


def bam_lhs(N1: int, N2: int, c1: int, c2: int) -> int:
    return c1 * N1 + c2 * (N2 - N1)


def bam_check(q: int, N1: int, N2: int, c1: int, c2: int, kappa=(0, 1)) -> bool:
    """Does c_1 N_1 + c_2 (N_2 - N_1) equal the right-hand side?"""
    return bam_lhs(N1, N2, c1, c2) == bam_bound(q, kappa)


def c_constants_from_orders(q: int, j, kappa) -> int:
    """c_1 = q j_1 + (j_2 - kappa_0) + (j_3 - kappa_1), minimized over the given branches.

    ``j`` is one order sequence or a list of them (one per rational branch).
    """
    kappa = _seq(kappa)
    seqs = [j] if _seq(j) and isinstance(_seq(j)[0], int) else list(j)
    if len(kappa) != 2:
        raise PreconditionError("kappa must have length 2")
    best = None
    for s in seqs:
        s = _seq(s)
        if len(s) != 4:
            raise PreconditionError("j must have length 4")
        if kappa[0] > s[2] or kappa[1] > s[3]:
            raise PreconditionError(f"inconsistent sequences j = {s}, kappa = {kappa}")
        c1 = q * s[1] + (s[2] - kappa[0]) + (s[3] - kappa[1])
        best = c1 if best is None else min(best, c1)
    return best


@dataclass
class BoundRow:
    name: str
    value: int
    provenance: str
    detail: str = ""


@dataclass
class BoundReport:
    """All bounds computed for one curve and one extension degree m."""

    curve: str
    q: int
    m: int
    u: int | None
    g: int
    d: int
    r1: int | None = None
    r2: int | None = None
    n: int | None = None
    r: int | None = None
    nu: tuple | None = None
    kappa: tuple | None = None
    constants: dict = dc_field(default_factory=dict)
    counts: dict = dc_field(default_factory=dict)
    rows: list = dc_field(default_factory=list)
    flags: dict = dc_field(default_factory=dict)
    warnings: list = dc_field(default_factory=list)
    assumptions: list = dc_field(default_factory=list)

    def add(self, name, value, provenance, detail=""):
        self.rows.append(BoundRow(name, value, provenance, detail))

    def value(self, name):
        for row in self.rows:
            if row.name == name:
                return row.value
        raise KeyError(name)

    def names(self):
        return [row.name for row in self.rows]

    def to_dict(self):
        """JSON-ready: tuples become lists, Fractions strings, count keys 'N_m'."""
        out = asdict(self)
        out["nu"] = list(self.nu) if self.nu is not None else None
        out["kappa"] = list(self.kappa) if self.kappa is not None else None
        out["counts"] = {f"N_{m}": v for m, v in sorted(self.counts.items())}
        out["flags"] = {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.flags.items()}
        return out
