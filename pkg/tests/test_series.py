import pytest
from hypothesis import given, settings, strategies as st

from qdissect.products import euler_f, overpartition_gf
from qdissect.series import (LaurentSeries, NegativeExponentError,
                             PrecisionError, ResidueSeries, TruncatedSeries,
                             from_csv, make, monomial, one, to_csv)

N = 64
coeff_lists = st.lists(st.integers(-50, 50), min_size=N + 1, max_size=N + 1)
series_st = coeff_lists.map(lambda c: TruncatedSeries(c, N))
unit_st = coeff_lists.map(lambda c: TruncatedSeries([1] + c[1:], N))


def poly(*c, prec=None):
    return make(list(c), len(c) - 1 if prec is None else prec)


# -- construction ------------------------------------------------------------

def test_make_constant_one():
    s = make({0: 1}, 10)
    assert s.precision == 10
    assert s.coefficients() == [1] + [0] * 10


def test_make_zero():
    s = make({}, 5)
    assert s.is_zero()
    assert s.valuation() is None


def test_make_euler_head():
    s = make({0: 1, 1: -1, 2: -1, 5: 1, 7: 1}, 8)
    assert s == euler_f(1, 8)


def test_make_rejects_out_of_range():
    with pytest.raises(ValueError):
        make({9: 1}, 8)
    with pytest.raises(ValueError):
        make({-1: 1}, 8)


def test_coeff_beyond_precision():
    s = one(4)
    assert s.coeff(4) == 0
    with pytest.raises(PrecisionError):
        s.coeff(5)
    with pytest.raises(PrecisionError):
        s[5]


# -- arithmetic --------------------------------------------------------------

def test_add_inverse_to_zero():
    assert (one(6) + (-one(6))).is_zero()


def test_scale_flips_signs():
    f = euler_f(1, 20)
    assert all(a == -b for a, b in zip(f.scale(-1).coefficients(),
                                       f.coefficients()))


def test_precision_min_rule():
    a, b = one(5), one(9)
    assert (a + b).precision == 5
    assert (a * b).precision == 5


def test_difference_of_squares():
    assert poly(1, 1, 0) * poly(1, -1, 0) == poly(1, 0, -1)


def test_mul_times_inverse():
    f = euler_f(1, 50)
    assert (f * f.invert()).equal_up_to(one(50), 50)


def test_geometric_series():
    assert (1 / poly(1, -1, 0, 0, 0, 0)).coefficients() == [1] * 6


def test_overpartition_gf_from_inverse():
    s = euler_f(2, 10) * (euler_f(1, 10) ** 2).invert()
    assert s.coeff(3) == 8


def test_invert_non_unit():
    with pytest.raises(ZeroDivisionError):
        poly(2, 1).invert()
    with pytest.raises(ZeroDivisionError):
        poly(0, 1).invert()


def test_pow_and_shift():
    assert (poly(1, 1, 0) ** 2).coefficients() == [1, 2, 1]
    x = monomial(0, 10).shift(3)
    assert isinstance(x, LaurentSeries)
    assert list(x.items()) == [(3, 1)]
    assert poly(1, 1).pow_int(0) == one(1)


def test_laurent_minimum_exponent_adds():
    a = LaurentSeries({-2: 1, 0: 3}, 10, min_exp=-2)
    b = LaurentSeries({-1: 1}, 10, min_exp=-1)
    assert (a * b).min_exp == -3
    assert (a * b).coeff(-3) == 1


def test_laurent_product_precision():
    a = LaurentSeries({-3: 1}, 20, min_exp=-3)
    assert (a * one(20).to_laurent()).precision == 17


def test_laurent_to_truncated():
    x = LaurentSeries({-1: 0, 2: 5}, 6, min_exp=-1)
    t = x.to_truncated()
    assert isinstance(t, TruncatedSeries)
    assert t.coeff(2) == 5
    with pytest.raises(NegativeExponentError):
        LaurentSeries({-1: 2}, 6, min_exp=-1).to_truncated()


def test_reduce_mod_overpartitions():
    r = overpartition_gf(10).reduce_mod(4)
    assert isinstance(r, ResidueSeries)
    assert r.coeff(3) == 0
    assert r.lift().coeff(1) == 2


def test_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        one(3).reduce_mod(2) + one(3).reduce_mod(3)


def test_equal_up_to_checks_precision():
    with pytest.raises(PrecisionError):
        one(3).equal_up_to(one(5), 4)
    a, b = poly(1, 2, 3), poly(1, 2, 4)
    assert a.equal_up_to(b, 1)
    assert not a.equal_up_to(b, 2)
    assert a.first_difference(b, 2) == 2
    assert a.first_difference(a, 2) is None


# -- properties --------------------------------------------------------------

@settings(max_examples=30, deadline=None)
@given(series_st, series_st, series_st)
def test_ring_axioms(a, b, c):
    assert (a * (b * c)).equal_up_to((a * b) * c, N)
    assert (a * b).equal_up_to(b * a, N)
    assert (a * (b + c)).equal_up_to(a * b + a * c, N)
    assert (a - a).is_zero()


@settings(max_examples=30, deadline=None)
@given(unit_st)
def test_inverse_two_sided(u):
    v = u.invert()
    assert (u * v).equal_up_to(one(N), N)
    assert (v * u).equal_up_to(one(N), N)
    assert v.invert() == u


@settings(max_examples=30, deadline=None)
@given(series_st, series_st, st.sampled_from([2, 3, 4, 9]),
       st.integers(0, 4))
def test_reduce_mod_homomorphism(a, b, m, e):
    r = lambda s: s.reduce_mod(m)  # noqa: E731
    assert r(a + b) == r(a) + r(b)
    assert r(a * b) == r(a) * r(b)
    assert r(a ** e) == r(a) ** e


@settings(max_examples=30, deadline=None)
@given(series_st)
def test_laurent_round_trip(a):
    assert a.to_laurent().to_truncated() == a


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(st.integers(-5, 20), st.integers(-10**30, 10**30)),
       st.sampled_from([None, 7]))
def test_csv_round_trip(coeffs, modulus):
    lo = min(coeffs, default=0)
    s = LaurentSeries(coeffs, 20, min_exp=min(lo, 0), modulus=modulus)
    back = from_csv(to_csv(s))
    assert list(back.items()) == list(s.items())
    assert back.precision == s.precision
    assert back.modulus == s.modulus
