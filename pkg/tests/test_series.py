from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hfib import H, ONE, ZERO, NotInvertible, OrderMismatch, Poly, Series, fib
from hfib.series import convolved_series, fib_kernel


def poly_list(strings):
    return [Poly(c) for c in strings]


def invertible_series(max_order=32):
    unit = st.sampled_from([1, -1]).map(lambda u: Poly([u]))
    tail_poly = st.lists(st.integers(min_value=-9, max_value=9), max_size=4).map(Poly)

    def build(draw_unit, tail, order):
        coeffs = [draw_unit] + tail[: order - 1]
        return Series(coeffs, order)

    return st.builds(
        build,
        unit,
        st.lists(tail_poly, max_size=max_order - 1),
        st.integers(min_value=1, max_value=max_order),
    )


def test_mul_truncates():
    a = Series([ONE, ONE], 3)  # 1 + t
    b = Series([ONE, -ONE], 3)  # 1 - t
    assert a * b == Series([ONE, ZERO, -ONE], 3)


def test_mul_identity():
    a = Series([H, Poly([2, 1]), ONE], 3)
    assert a * Series.one(3) == a


def test_mul_order_mismatch():
    with pytest.raises(OrderMismatch):
        Series([ONE], 2) * Series([ONE], 3)


def test_self_product_of_sequence_gf():
    inv = fib_kernel(4).inverse()
    sq = inv * inv
    assert list(sq.coeffs) == poly_list([[1], [0, 2], [2, 0, 3], [0, 6, 0, 4]])


def test_inverse_of_kernel():
    inv = fib_kernel(4).inverse()
    assert list(inv.coeffs) == poly_list([[1], [0, 1], [1, 0, 1], [0, 2, 0, 1]])


def test_inverse_of_unit():
    assert Series.one(5).inverse() == Series.one(5)


def test_inverse_requires_unit_constant():
    with pytest.raises(NotInvertible):
        Series([Poly([2]), ONE], 2).inverse()
    with pytest.raises(NotInvertible):
        Series([H, ONE], 2).inverse()


def test_negative_unit_constant_inverts():
    a = Series([-ONE, H], 6)
    assert a * a.inverse() == Series.one(6)


def test_pow_examples():
    sq = fib_kernel(3) ** -2
    assert list(sq.coeffs) == poly_list([[1], [0, 2], [2, 0, 3]])
    a = Series([ONE, H], 4)
    assert a**0 == Series.one(4)


def test_pow_negative_matches_squared_inverse():
    inv = fib_kernel(10) ** -1
    assert inv * inv == fib_kernel(10) ** -2


def test_derivative_termwise():
    a = Series([ONE, H, Poly([1, 0, 1])], 3)
    assert a.derivative() == Series([H, Poly([2, 0, 2]), ZERO], 3)
    assert Series.one(4).derivative() == Series([ZERO], 4)


def test_derivative_of_inverse_kernel():
    # d/dt of the order-1 expansion equals (h + 2t) times the order-2
    # expansion, on the indices the truncation leaves trustworthy
    lhs = (fib_kernel(6) ** -1).derivative()
    rhs = Series([H, Poly([2])], 5) * (fib_kernel(5) ** -2)
    assert list(lhs.coeffs)[:5] == list(rhs.coeffs)[:5]


def test_convolved_series_first_column():
    got = [str(p) for p in convolved_series(1, 6)]
    assert got == ["1", "h", "h^2 + 1", "h^3 + 2h", "h^4 + 3h^2 + 1", "h^5 + 4h^3 + 3h"]


def test_convolved_series_r3():
    got = [str(p) for p in convolved_series(3, 4)]
    assert got == ["1", "3h", "6h^2 + 3", "10h^3 + 12h"]


def test_convolved_series_specialized_at_one():
    got = [p(1) for p in convolved_series(2, 6)]
    assert got == [1, 2, 5, 10, 20, 38]


def test_convolved_series_matches_recurrence_sequence():
    coeffs = convolved_series(1, 64)
    for j in range(64):
        assert coeffs[j] == fib(j + 1)


def test_order_is_part_of_identity():
    assert Series([ONE], 3) != Series([ONE], 4)
    assert len(Series([ONE], 7).coeffs) == 7


def test_validation():
    with pytest.raises(ValueError):
        Series([], 0)
    with pytest.raises(ValueError):
        Series([ONE, H], 1)
    with pytest.raises(ValueError):
        convolved_series(0, 5)
    with pytest.raises(ValueError):
        convolved_series(2, 0)


@given(invertible_series())
@settings(max_examples=60, deadline=None)
def test_inverse_round_trip(a):
    assert a * a.inverse() == Series.one(a.order)


@given(invertible_series(max_order=12),
       st.integers(min_value=-3, max_value=3),
       st.integers(min_value=-3, max_value=3))
@settings(max_examples=40, deadline=None)
def test_pow_additive(a, j, k):
    assert a ** (j + k) == (a**j) * (a**k)


@given(invertible_series(max_order=10), invertible_series(max_order=10))
@settings(max_examples=40, deadline=None)
def test_leibniz_rule(a, b):
    if a.order != b.order:
        b = Series(b.coeffs[: a.order], a.order) if b.order > a.order else Series(b.coeffs, a.order)
    lhs = (a * b).derivative()
    rhs = a.derivative() * b + a * b.derivative()
    assert list(lhs.coeffs)[: a.order - 1] == list(rhs.coeffs)[: a.order - 1]
