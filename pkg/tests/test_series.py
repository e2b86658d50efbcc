from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from partsums.exact import binomial
from partsums.partitions import enumerate_partitions
from partsums.series import (
    TruncatedSeries,
    check_delta_product,
    check_logderiv_alternating,
    check_logderiv_plain,
    gf_central,
    gf_invodd_central,
    gf_n_central,
    run_all_checks,
    series_derivative,
    series_inverse,
    series_log,
    series_log_composed,
    series_mul,
)
from partsums.weights import chain_weight

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def series_of(order, head=small):
    return st.tuples(head, st.lists(small, min_size=order, max_size=order)).map(
        lambda t: TruncatedSeries([t[0], *t[1]])
    )


same_order_triples = st.integers(0, 16).flatmap(lambda m: st.tuples(series_of(m), series_of(m), series_of(m)))


def test_gf_central():
    assert list(gf_central(3)) == [1, 2, 6, 20]
    assert gf_central(5)[5] == 252


def test_gf_n_central():
    s = gf_n_central(3)
    assert (s[0], s[1], s[3]) == (0, 2, 60)


def test_gf_invodd_central():
    s = gf_invodd_central(2)
    assert list(s) == [-1, 2, 2]


def test_mul_examples():
    a = TruncatedSeries([1, 2, 0])
    b = TruncatedSeries([1, -2, 0])
    assert list(series_mul(a, b)) == [1, 0, -4]
    prod = series_mul(gf_central(10), gf_invodd_central(10))
    assert list(prod) == [-1] + [0] * 10


def test_mixed_orders_take_minimum():
    assert series_mul(gf_central(3), gf_central(6)).order == 3
    assert (gf_central(2) + gf_central(5)).order == 2


def test_inverse_examples():
    assert list(series_inverse(TruncatedSeries([1, -4, 0, 0]))) == [1, 4, 16, 64]
    assert list(series_inverse(TruncatedSeries([1]))) == [1]
    assert list(series_inverse(gf_central(4))) == [1, -2, -2, -4, -10]
    assert series_inverse(gf_central(12)) == -gf_invodd_central(12)
    with pytest.raises(ZeroDivisionError):
        series_inverse(TruncatedSeries([0, 1]))


def test_derivative_examples():
    assert list(series_derivative(TruncatedSeries([1, 1, 1, 1]))) == [1, 2, 3]
    assert list(series_derivative(TruncatedSeries([7, 0, 0]))) == [0, 0]
    d = series_derivative(gf_central(10))
    assert all(d[n] == (n + 1) * binomial(2 * n + 2, n + 1) for n in range(10))


def test_log_examples():
    got = series_log(TruncatedSeries([1, 1, 0, 0, 0, 0]))
    assert list(got) == [0, 1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4), Fraction(1, 5)]
    assert list(series_log(TruncatedSeries([1, 0, 0]))) == [0, 0, 0]
    with pytest.raises(ValueError):
        series_log(TruncatedSeries([2, 1]))


def test_log_two_algorithms_agree_on_central_series():
    a = gf_central(12)
    assert list(series_log(a)) == list(series_log_composed(a))


def test_log_coefficients_equal_partition_sums():
    # [z^n] log(sum C(2i,i) z^i) = sum over partitions of (-1)^(1+l1)/l1 * B * prod (2(2i-1)/i)^li
    log_central = series_log(gf_central(12))
    for n in range(1, 13):
        total = Fraction(0)
        for lam in enumerate_partitions(n):
            w = Fraction(1)
            for i, x in enumerate(lam, start=1):
                w *= Fraction(2 * (2 * i - 1), i) ** x
            total += Fraction((-1) ** (1 + lam[0]), lam[0]) * chain_weight(lam) * w
        assert log_central[n] == total


def test_n_central_is_z_times_derivative():
    d = series_derivative(gf_central(20))
    assert list(gf_n_central(20)) == [0, *d]


@pytest.mark.parametrize("order", [1, 10, 25])
def test_logderiv_checks(order):
    plain = check_logderiv_plain(order)
    alt = check_logderiv_alternating(order)
    assert plain.ok and alt.ok
    assert plain.first_mismatch is None
    assert plain.coefficients[0] == alt.coefficients[0] == 2


def test_logderiv_leading_coefficients():
    assert list(check_logderiv_plain(10).coefficients[:4]) == [2, 8, 32, 128]
    assert list(check_logderiv_alternating(10).coefficients[:3]) == [2, -8, 32]


def test_delta_product_and_all_checks():
    assert check_delta_product(30).ok
    assert all(c.ok for c in run_all_checks(30))


@settings(max_examples=60, deadline=None)
@given(same_order_triples)
def test_ring_laws(abc):
    a, b, c = abc
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 12).flatmap(lambda m: st.tuples(series_of(m, st.just(Fraction(1))), series_of(m, st.just(Fraction(1))))))
def test_log_of_product_is_sum_of_logs(ab):
    a, b = ab
    assert series_log(a * b) == series_log(a) + series_log(b)


@settings(max_examples=40, deadline=None)
@given(series_of(8, small.filter(lambda x: x != 0)))
def test_inverse_property(a):
    assert list(a * series_inverse(a)) == [1] + [0] * a.order
