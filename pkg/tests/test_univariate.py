import pytest
from hypothesis import given, strategies as st

from fqcurves import GF, UPoly, count_rational_roots, is_squarefree

K7 = GF(7)
coeffs = st.lists(st.integers(0, 6), min_size=0, max_size=8)


def P(*c, K=K7):
    return UPoly(K, list(c))


@given(coeffs, coeffs)
def test_divmod_identity(a, b):
    A, B = UPoly(K7, a), UPoly(K7, b)
    if B.is_zero():
        return
    Q, R = A.divmod(B)
    assert Q * B + R == A
    assert R.is_zero() or R.degree < B.degree


@given(coeffs, coeffs, coeffs)
def test_ring_laws(a, b, c):
    A, B, C = UPoly(K7, a), UPoly(K7, b), UPoly(K7, c)
    assert A * (B + C) == A * B + A * C
    assert (A * B) * C == A * (B * C)
    assert A - A == UPoly(K7, [])


@given(coeffs, coeffs)
def test_gcd_divides_both(a, b):
    A, B = UPoly(K7, a), UPoly(K7, b)
    if A.is_zero() and B.is_zero():
        return
    G = A.gcd(B)
    assert G.lc == 1
    assert (A % G).is_zero() and (B % G).is_zero()


def test_kronecker_matches_schoolbook_large_degree():
    K = GF(13)
    a = UPoly(K, [(7 * i + 3) % 13 for i in range(60)])
    b = UPoly(K, [(5 * i + 1) % 13 for i in range(45)])
    prod = [0] * (a.degree + b.degree + 1)
    for i, x in enumerate(a.c):
        for j, y in enumerate(b.c):
            prod[i + j] = (prod[i + j] + x * y) % 13
    assert (a * b).c == tuple(prod)


def test_roots_and_counts():
    # (T - 1)(T - 2)(T^2 + 1) over F_7: T^2 + 1 is irreducible since 7 = 3 mod 4
    u = P(6, 1) * P(5, 1) * P(1, 0, 1)
    n, roots = count_rational_roots(u)
    assert n == 2 and sorted(r.code for r in roots) == [1, 2]
    L = GF(7, 2)
    n2, _ = count_rational_roots(u, L)
    assert n2 == 4


def test_repeated_roots_counted_once():
    u = P(6, 1) ** 3 * P(1, 1)
    assert count_rational_roots(u)[0] == 2
    assert not is_squarefree(u)
    assert is_squarefree(P(6, 1) * P(1, 1))
    assert is_squarefree(P(3))  # nonzero constants count as squarefree


def test_inseparable_is_not_squarefree():
    K = GF(5)
    u = UPoly(K, [1, 0, 0, 0, 0, 1])  # T^5 + 1 = (T + 1)^5
    assert not is_squarefree(u)


def test_powmod_and_eval():
    u = P(3, 0, 1)
    m = P(1, 1, 1)
    assert u.powmod(5, m) == (u ** 5) % m
    assert u.eval_code(2) == (3 + 4) % 7
    assert u.derivative() == P(0, 2)


def test_exact_div_rejects_remainder():
    with pytest.raises(Exception):
        P(1, 1).exact_div(P(2, 1, 1))
