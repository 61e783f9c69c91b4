from math import comb

from hypothesis import given, strategies as st

from flagmotive.polynomial import (
    PoincareSeries,
    QPolynomial,
    divide_by_one_minus_q,
    inverse_power_of_one_minus_q,
    series_from_polynomial,
)

polys = st.lists(st.integers(-5, 5), max_size=6).map(QPolynomial.from_list)


def test_rendering():
    assert str(QPolynomial.from_list([1, 2, 2, 1])) == "1 + 2q + 2q^2 + q^3"
    assert str(QPolynomial.from_list([0, -1, 3])) == "-q + 3q^2"
    assert str(QPolynomial()) == "0"
    assert str(PoincareSeries((1, 4, 9))) == "1 + 4q + 9q^2 + O(q^3)"


def test_inverse_powers():
    assert inverse_power_of_one_minus_q(0, 3).coefficients == (1, 0, 0, 0)
    assert inverse_power_of_one_minus_q(1, 3).coefficients == (1, 1, 1, 1)
    assert inverse_power_of_one_minus_q(3, 4).coefficients == (1, 3, 6, 10, 15)


@given(st.integers(0, 4), st.integers(0, 8))
def test_inverse_power_times_power_is_one(r, n):
    one_minus_q_to_r = series_from_polynomial(
        QPolynomial({k: (-1) ** k * comb(r, k) for k in range(r + 1)}), n
    )
    prod = inverse_power_of_one_minus_q(r, n) * one_minus_q_to_r
    assert prod.coefficients == tuple(int(d == 0) for d in range(n + 1))


@given(polys, st.integers(0, 4), st.integers(0, 8))
def test_division_matches_product(p, r, n):
    s = series_from_polynomial(p, n)
    assert divide_by_one_minus_q(s, r) == s * inverse_power_of_one_minus_q(r, n)


@given(polys, polys)
def test_ring_laws(a, b):
    assert a * b == b * a
    assert (a * b)(2) == a(2) * b(2)
    assert (a + b)(3) == a(3) + b(3)
