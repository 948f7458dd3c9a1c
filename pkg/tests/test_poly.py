from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hfib import H, ONE, ZERO, NotDivisible, Poly, binom

coeff = st.integers(min_value=-(10**6), max_value=10**6)
polys = st.lists(coeff, max_size=13).map(Poly)
nonzero_polys = polys.filter(bool)


def test_normalization():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0, 0]).coeffs == ()
    assert Poly().coeffs == ()


def test_degree_sentinel():
    assert Poly().degree is None
    assert Poly([5]).degree == 0
    assert Poly([0, 0, 7]).degree == 2


def test_add_examples():
    assert Poly([1, 0, 1]) + Poly([0, 2]) == Poly([1, 2, 1])
    p = Poly([3, 1, 4])
    assert p + ZERO == p
    assert H + (-H) == ZERO


def test_mul_examples():
    assert H * Poly([1, 0, 1]) == Poly([0, 1, 0, 1])
    assert (H + ONE) * (H - ONE) == Poly([-1, 0, 1])
    # product of the second and third sequence entries, matching the
    # 3x3 minor of the order-4 matrix with row/column 2 removed
    assert H * Poly([1, 0, 1]) == Poly([0, 1, 0, 1])


def test_pow_examples():
    disc = Poly([4, 0, 1])
    assert disc**1 == disc
    assert disc**2 == Poly([16, 0, 8, 0, 1])
    assert ZERO**0 == ONE


def test_compose_examples():
    assert Poly([1, 0, 1]).compose(Poly([1])) == Poly([2])
    # h^3 + 2h at h = 2 gives the fourth Pell number
    assert Poly([0, 2, 0, 1]).compose(Poly([2])) == Poly([12])
    assert H.compose(Poly([3, 0, 1])) == Poly([3, 0, 1])


def test_eval_int_examples():
    assert Poly([1, 0, 3, 0, 1])(1) == 5
    assert Poly([7, 1, 2])(0) == 7
    assert Poly([0, 2])(3) == 6


def test_derivative_examples():
    assert Poly([0, 2, 0, 1]).derivative() == Poly([2, 0, 3])
    assert Poly([9]).derivative() == ZERO
    assert Poly([4, 0, 1]).derivative() == Poly([0, 2])


def test_exact_div_examples():
    assert Poly([0, 1, 0, 1]).exact_div(Poly([1, 0, 1])) == H
    disc = Poly([4, 0, 1])
    assert disc.exact_div(disc) == ONE
    with pytest.raises(NotDivisible):
        Poly([1, 0, 1]).exact_div(H)
    with pytest.raises(ZeroDivisionError):
        ONE.exact_div(ZERO)


def test_exact_div_inexact_coefficient():
    with pytest.raises(NotDivisible):
        Poly([1, 2]).exact_div(Poly([2]))


def test_canonical_text():
    assert str(Poly([0, 2, 0, 1])) == "h^3 + 2h"
    assert str(ZERO) == "0"
    assert str(Poly([-1, 0, 1])) == "h^2 - 1"
    assert str(Poly([1, -2])) == "-2h + 1"
    assert str(Poly([0, -1])) == "-h"
    assert str(ONE) == "1"


def test_json_round_trip():
    p = Poly([12345678901234567890, -3, 0, 1])
    data = p.to_json()
    assert data == ["12345678901234567890", "-3", "0", "1"]
    assert Poly.from_json(data) == p
    assert ZERO.to_json() == []


def test_immutable():
    p = Poly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (3,)


def test_big_coefficients_exact():
    p = Poly([10**40, 1])
    q = p * p
    assert q.coeffs[0] == 10**80


def test_binom_examples():
    assert binom(4, 2) == 6
    assert binom(5, 0) == 1
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0


def test_binom_pascal_rule():
    for n in range(1, 61):
        for k in range(n + 1):
            assert binom(n, k) == binom(n - 1, k) + binom(n - 1, k - 1)


@given(polys, polys, polys)
@settings(max_examples=300)
def test_ring_axioms(p, q, w):
    assert (p + q) + w == p + (q + w)
    assert p + q == q + p
    assert (p * q) * w == p * (q * w)
    assert p * q == q * p
    assert p * (q + w) == p * q + p * w
    assert p + ZERO == p
    assert p * ONE == p


@given(polys, nonzero_polys)
def test_mul_then_exact_div_round_trips(p, q):
    assert (p * q).exact_div(q) == p


@given(polys, nonzero_polys)
def test_degree_of_product(p, q):
    if p.is_zero():
        assert (p * q).is_zero()
    else:
        assert (p * q).degree == p.degree + q.degree


@given(polys)
def test_compose_identity(p):
    assert p.compose(H) == p


@given(polys)
def test_normalized_invariant(p):
    assert not p.coeffs or p.coeffs[-1] != 0


@given(polys, st.integers(min_value=-50, max_value=50))
def test_eval_is_ring_hom(p, x):
    assert (p * H)(x) == p(x) * x
    assert (p + ONE)(x) == p(x) + 1
