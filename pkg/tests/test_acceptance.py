"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""
import io
import json
import os
import sys
import time
from contextlib import redirect_stdout

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from fqcurves import (ProjPoint, artin_mumford, bam_bound, branches_at, c_constants_from_orders,
                      am_divisibility_criterion, conic_system_through, count_branches, double_frobenius_order_sequence,
                      frobenius_order_sequence, generic_order_sequence, intersection_multiplicity,
                      am_osculating_conic, order_sequence_at, DerivationContext)
from fqcurves.bounds import bam_lhs
from fqcurves.cli import main
from fqcurves.gf import FieldElement
from oracles import NaiveField, am_affine_points_oracle

_capsys = None


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    global _capsys
    _capsys = capsys
    yield
    _capsys = None


def report(number, title, ok, detail, elapsed, limit=None):
    timing = f"{elapsed:.2f}s" + (f" (limit {limit}s)" if limit else "")
    line = f"CRITERION {number}: {'PASS' if ok else 'FAIL'}  {title}  [{detail}; {timing}]"
    if _capsys is None:
        print(line)
    else:
        with _capsys.disabled():
            print("\n" + line, flush=True)
    return line


def cli_json(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv) + ["--json"])
    assert code == 0
    return json.loads(buf.getvalue())


def _rows(doc):
    return {r["name"]: r["value"] for r in doc["bounds"]["rows"]}


def _am_system(c):
    K = c.base_field
    P1, P2 = ProjPoint.from_ints(K, 1, 0, 0), ProjPoint.from_ints(K, 0, 1, 0)
    return P1, P2, conic_system_through(c, P1, P2)


def test_criterion_1_hurwitz_table():
    t = time.time()
    rows = _rows(cli_json("bounds", "--p", "17", "--curve", "X^4*Y^3 + X^3 + Y^4"))
    got = (rows.get("sv[g_5^2]"), rows.get("sv[g_7^2]"), rows.get("sv[g_14^5]"), rows.get("hw_serre"))
    elapsed = time.time() - t
    ok = got == (52, 71, 81, 66) and elapsed < 5
    report(1, "Hurwitz X^4Y^3+X^3+Y^4 over F_17: 52/71/81/66", ok, f"got {got}", elapsed, 5)
    assert ok


def test_criterion_2_sextic_table():
    t = time.time()
    doc = cli_json("bounds", "--family", "product-sextic", "--m", "2", "--use-counts")
    rows = _rows(doc)
    got = tuple(rows.get(k) for k in ("svc", "abc", "hw_serre", "svcl", "svf"))
    cnt = cli_json("count", "--family", "product-sextic", "--m", "1")
    elapsed = time.time() - t
    c_used = doc["bounds"]["constants"]
    ok = (got == (736, 768, 820, 931, 1050) and rows.get("hw_weil") == 820
          and (c_used["c_1"], c_used["c_m"], c_used["c_(m-1)"]) == (17, 2, 13)
          and cnt["counts"]["N_1"] == 48 and cnt["genus"]["bound"] == 25 and elapsed < 60)
    report(2, "sextic over F_13, m=2: 736/768/820/931/1050, N_1=48, g<=25", ok,
           f"got {got}, N_1 = {cnt['counts']['N_1']}, g <= {cnt['genus']['bound']}", elapsed, 60)
    assert ok


def test_criterion_3_am_counts():
    t = time.time()
    details, ok = [], True
    for q in (5, 7, 11, 13):
        c = artin_mumford(q)
        N1, N2 = count_branches(c, 1), count_branches(c, 2)
        K2 = c.base_field.extension(2)
        affine = am_affine_points_oracle(NaiveField(K2.p, K2.modulus), q)
        good = N1 == 2 * q and N2 == q * q * (q - 1) + 2 * q and affine + 2 * q == N2
        ok &= good
        details.append(f"q={q}: {N1}, {N2}")
    elapsed = time.time() - t
    ok &= elapsed < 120
    report(3, "Artin-Mumford N_1 = 2q, N_2 = q^2(q-1)+2q", ok, "; ".join(details), elapsed, 120)
    assert ok


def test_criterion_4_classicality():
    t = time.time()
    details, ok = [], True
    for q in (5, 7):
        c = artin_mumford(q)
        _, _, L = _am_system(c)
        ctx = DerivationContext(c.f)
        nu1 = frobenius_order_sequence(ctx, L.basis, 1)
        nu2 = frobenius_order_sequence(ctx, L.basis, 2)
        kap = double_frobenius_order_sequence(ctx, L.basis, 1, 2)
        div = {r: am_divisibility_criterion(q, r) for r in (1, 2, 3)}
        good = (nu1.classical and not nu2.classical and kap.sequence == (0, 1)
                and div == {1: False, 2: True, 3: False}
                and div[1] == (not nu1.classical) and div[2] == (not nu2.classical))
        ok &= good
        details.append(f"q={q}: nu1={nu1.sequence}, m=2 non-classical={not nu2.classical}, "
                       f"kappa={kap.sequence}, div={div}")
    elapsed = time.time() - t
    ok &= elapsed < 60
    report(4, "nu classical m=1, non-classical m=2, kappa=(0,1), divisibility iff r=2", ok,
           "; ".join(details), elapsed, 60)
    assert ok


def test_criterion_5_bam_equality():
    t = time.time()
    details, ok = [], True
    for q in (5, 7, 11, 13):
        c = artin_mumford(q)
        P1, P2, L = _am_system(c)
        js = [order_sequence_at(br, L).values for P in (P1, P2) for br in branches_at(c, P)]
        kap = double_frobenius_order_sequence(DerivationContext(c.f), L.basis, 1, 2).sequence
        c1 = c_constants_from_orders(q, js, kap)
        N1, N2 = count_branches(c, 1), count_branches(c, 2)
        lhs, rhs = bam_lhs(N1, N2, c1, 2), bam_bound(q, kap, g=(q - 1) ** 2)
        good = (set(js) == {(0, 1, q, q + 1)} and kap == (0, 1) and c1 == 3 * q
                and lhs == rhs == 2 * q ** 3 + 4 * q ** 2)
        ok &= good
        details.append(f"q={q}: {lhs} = {rhs}")
    elapsed = time.time() - t
    report(5, "two-Frobenius bound attained by Artin-Mumford, c_1 = 3q", ok, "; ".join(details), elapsed)
    assert ok


def test_criterion_6_property_suites():
    import test_bounds
    import test_branch
    import test_classicality
    import test_curve
    import test_series
    t = time.time()
    parts = {
        "intersection additivity vs resultant (20 pairs)": test_branch.test_intersection_additivity_vs_resultant_oracle,
        "Hensel residual (50 expansions)": test_series.test_hensel_residual_vanishes_on_50_expansions,
        "Wronskian basis independence (10 recombinations)":
            test_classicality.test_wronskian_basis_independence_10_recombinations,
        "no bound violation over the corpus": lambda: [test_bounds.test_no_bound_violation(c)
                                                       for c in test_bounds._corpus()],
        "Cremona degree law (10 inputs)": test_curve.test_cremona_degree_law_on_10_inputs,
    }
    failed = []
    for name, fn in parts.items():
        try:
            fn()
        except AssertionError as exc:
            failed.append(f"{name}: {exc}")
    elapsed = time.time() - t
    ok = not failed
    report(6, "property suites", ok, "all five hold" if ok else "; ".join(failed), elapsed)
    assert ok


def test_criterion_7_osculating_conic():
    t = time.time()
    q = 5
    c = artin_mumford(q)
    K = c.base_field
    P1, P2, L = _am_system(c)
    # AM has no affine F_5-points, so the 20 samples come from F_25
    K2 = K.extension(2)
    pts = [P for P, s in c.points_over(K2) if not s and P.coords[2] == 1][:20]
    contacts = []
    for P in pts:
        a, b = (FieldElement(K2, v) for v in P.affine())
        br = branches_at(c, P, K2)[0]
        contacts.append(intersection_multiplicity(br, am_osculating_conic(a, b, q), degree=2))
    eps = generic_order_sequence(c, L, samples=10)
    js = {order_sequence_at(br, L).values for P in (P1, P2) for br in branches_at(c, P)}
    elapsed = time.time() - t
    ok = (len(pts) == 20 and min(contacts) >= q and eps == (0, 1, 2, q) and js == {(0, 1, q, q + 1)}
          and elapsed < 30)
    report(7, "osculating conic contact >= q, generic (0,1,2,q), rational (0,1,q,q+1)", ok,
           f"min contact {min(contacts)} over {len(pts)} points, eps = {eps.values}, j = {sorted(js)}",
           elapsed, 30)
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
