import pytest
from hypothesis import given, strategies as st

from fqcurves import GF, PreconditionError, field_of_size
from fqcurves.gf import format_code, is_irreducible, prime_power, smallest_irreducible, subfield_degree
from oracles import NaiveField

FIELDS = [(2, 1), (5, 1), (13, 1), (2, 3), (3, 2), (5, 2), (7, 2), (13, 2), (2, 4)]


@pytest.mark.parametrize("p,k", FIELDS)
def test_arithmetic_matches_naive_field(p, k):
    K = GF(p, k)
    N = NaiveField(p, K.modulus)
    codes = range(K.q) if K.q <= 49 else range(0, K.q, 7)
    for a in codes:
        for b in list(codes)[:12]:
            assert K.mul(a, b) == N.mul(a, b)
            assert K.add(a, b) == N.add(a, b)
        assert K.neg(a) == N.neg(a)


@pytest.mark.parametrize("p,k", FIELDS)
def test_inverse_and_division(p, k):
    K = GF(p, k)
    for a in range(1, K.q):
        assert K.mul(a, K.inv(a)) == 1
        assert K.div(a, a) == 1
    with pytest.raises(ZeroDivisionError):
        K.inv(0)


def test_default_moduli():
    assert GF(5, 2).modulus == (2, 0, 1)
    assert GF(13, 2).modulus == (2, 0, 1)
    assert GF(2, 2).modulus == (1, 1, 1)
    assert smallest_irreducible(2, 3) == (1, 1, 0, 1)


def test_rejections():
    with pytest.raises(PreconditionError):
        GF(4)
    with pytest.raises(PreconditionError):
        GF(5, 2, modulus=(1, 0, 1))  # T^2 + 1 = (T - 2)(T + 2) over F_5
    with pytest.raises(PreconditionError):
        field_of_size(12)
    assert prime_power(169) == (13, 2)


def test_irreducibility_checker_counts():
    # number of monic irreducible quadratics over F_p is (p^2 - p)/2
    for p in (2, 3, 5):
        count = sum(is_irreducible((a, b, 1), p) for a in range(p) for b in range(p))
        assert count == (p * p - p) // 2


@pytest.mark.parametrize("p,k,m", [(5, 1, 2), (5, 1, 4), (5, 2, 2), (3, 2, 3), (13, 1, 2)])
def test_embedding_is_ring_homomorphism(p, k, m):
    K = GF(p, k)
    L = K.extension(m)
    assert L.q == K.q ** m and K.is_subfield_of(L)
    for a in range(K.q):
        for b in range(0, K.q, max(1, K.q // 7)):
            ea, eb = L.embed_code(a, K), L.embed_code(b, K)
            assert L.mul(ea, eb) == L.embed_code(K.mul(a, b), K)
            assert L.add(ea, eb) == L.embed_code(K.add(a, b), K)
        # image lies in the fixed field of x -> x^q
        assert L.pow(L.embed_code(a, K), K.q) == L.embed_code(a, K)


def test_frobenius_fixed_points_are_subfield():
    L = GF(5, 4)
    fixed = [a for a in range(L.q) if L.pow(a, 25) == a]
    assert len(fixed) == 25
    assert sum(subfield_degree(L, a, 5) == 1 for a in range(L.q)) == 5


def test_format_roundtrip_through_parser():
    from fqcurves import BivarPoly, parse_poly
    K = GF(5, 2)
    for code in (0, 1, 5, 7, 24):
        f = BivarPoly(K, {(1, 0): code, (0, 0): 1}) if code else BivarPoly.const(K, 1)
        assert parse_poly(str(f), K) == f
    assert format_code(K, 5) == "w"


@given(st.integers(0, 168), st.integers(0, 168), st.integers(0, 168))
def test_field_axioms_f169(a, b, c):
    K = GF(13, 2)
    assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
    assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
    assert K.add(a, K.neg(a)) == 0
    assert K.pow(a, 169) == a


@given(st.integers(0, 624), st.integers(1, 10))
def test_frobenius_is_additive_f625(a, r):
    K = GF(5, 4)
    b = (a * 31 + 7) % K.q
    assert K.pow(K.add(a, b), 5 ** r) == K.add(K.pow(a, 5 ** r), K.pow(b, 5 ** r))


def test_field_elements_wrapper():
    K = GF(7)
    x = K(3)
    assert int(x * x.inverse()) == 1
    assert (x ** 6) == K.one
    assert x - x == K.zero
    L = GF(5, 2)
    w = L.gen
    assert w * w == L(-2)  # the default modulus is T^2 + 2
    assert len(list(L.elements())) == 25
