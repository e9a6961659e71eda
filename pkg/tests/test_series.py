import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bergman_hyper.series import (
    BinomialPower,
    ExpLinear,
    PowerSeries,
    parse_complex,
    parse_function,
    random_binomial_power,
    random_exp_linear,
    random_polynomial,
)


def test_eval_examples():
    assert PowerSeries((1, 0.5)).eval(0) == 1
    assert BinomialPower(1, 0.5, 2).eval(0) == 1
    assert PowerSeries((1, 1)).eval(1j) == 1 + 1j


def test_deriv_examples():
    assert PowerSeries((1, 2, 3)).deriv_eval(0, 1) == 2
    assert ExpLinear(1, 1).deriv_eval(0, 2) == 1
    assert BinomialPower(1, 0.5, 2).deriv_eval(0, 1) == pytest.approx(1)
    assert PowerSeries((1, 2, 3)).deriv_eval(0.5, 2) == 6
    with pytest.raises(ValueError):
        PowerSeries((1,)).deriv_eval(0, 3)


def test_dilate_examples():
    f = PowerSeries((1, 1, 1))
    assert f.dilate(1.0) == f
    assert f.dilate(0.5).coeffs == (1, 0.5, 0.25)
    g = BinomialPower(2, 0.6, 1.5).dilate(0.5)
    assert g.a == pytest.approx(0.3) and g.C == 2 and g.s == 1.5
    assert ExpLinear(1, 2j).dilate(0.25).b == 0.5j
    for bad in (-0.1, 1.5):
        with pytest.raises(ValueError):
            f.dilate(bad)


def test_truncate_examples():
    assert BinomialPower(1, 0.5, 1).truncate_to_series(2).coeffs == pytest.approx((1, 0.5, 0.25))
    assert ExpLinear(1, 1).truncate_to_series(2).coeffs == pytest.approx((1, 1, 0.5))
    # (s)_1 / 1! * a = 4 * 0.3
    assert BinomialPower(1, 0.3, 4).truncate_to_series(1).coeffs == pytest.approx((1, 1.2))
    assert PowerSeries((1, 2, 3)).truncate_to_series(1).coeffs == (1, 2)
    assert PowerSeries((1,)).truncate_to_series(2).coeffs == (1, 0, 0)


def test_binomial_series_against_generic_taylor():
    # independent oracle: Taylor coefficients from sampled values via FFT on a small circle
    f = BinomialPower(0.7 - 0.2j, 0.45 + 0.3j, 2.3)
    n, rho = 64, 0.5
    z = rho * np.exp(2j * np.pi * np.arange(n) / n)
    fft_coeffs = np.fft.fft(f.eval(z)) / n / rho ** np.arange(n)
    series = np.array(f.truncate_to_series(15).coeffs)
    np.testing.assert_allclose(series, fft_coeffs[:16], rtol=1e-10, atol=1e-12)


def test_random_polynomial_contract():
    assert random_polynomial(0, 3).coeffs == (1,)
    assert random_polynomial(5, 11, 0.4) == random_polynomial(5, 11, 0.4)
    f = random_polynomial(4, 7, 0.5)
    assert f.coeffs[0] == 1
    assert all(abs(c) <= 0.5 for c in f.coeffs[1:])
    assert random_polynomial(4, 7) != random_polynomial(4, 8)


def test_zero_free_generators():
    for seed in range(20):
        assert random_binomial_power(seed).zero_free
        assert random_exp_linear(seed).zero_free


def test_binomial_rejects_boundary_pole():
    with pytest.raises(ValueError):
        BinomialPower(1, 1.0, 2)
    with pytest.raises(ValueError):
        BinomialPower(1, 0.5, 0)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("poly:1,0.5i,-0.25", PowerSeries((1, 0.5j, -0.25))),
        ("binom:1,0.3,2", BinomialPower(1, 0.3, 2)),
        ("exp:2,1+1i", ExpLinear(2, 1 + 1j)),
        ("poly:0,1", PowerSeries((0, 1))),
    ],
)
def test_parse_function(text, expected):
    assert parse_function(text) == expected


@pytest.mark.parametrize("text", ["poly:", "poly:1,x", "binom:1,0.3", "exp:1", "sin:1", "1,2", "binom:1,2,3"])
def test_parse_function_rejects(text):
    with pytest.raises(ValueError):
        parse_function(text)


def test_parse_complex_forms():
    assert parse_complex("0.5i") == 0.5j
    assert parse_complex("-1e-3-2i") == complex(-1e-3, -2)
    assert parse_complex("i") == 1j
    with pytest.raises(ValueError):
        parse_complex("nan")


@pytest.mark.parametrize(
    "f",
    [
        PowerSeries((1, 0.5j, -0.25, 1e-17 + 3j)),
        BinomialPower(0.1 - 2j, -0.3 + 0.2j, 1.75),
        ExpLinear(-1.5, 0.25j),
    ],
)
def test_literal_round_trip(f):
    assert parse_function(f.literal) == f


# Properties ---------------------------------------------------------------

coeff = st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False)
radius = st.floats(0, 1)


def functions():
    poly = st.lists(coeff, min_size=1, max_size=8).map(lambda cs: PowerSeries(tuple(cs)))
    binom = st.builds(
        BinomialPower,
        coeff.filter(lambda c: abs(c) > 0.1),
        st.complex_numbers(max_magnitude=0.8, allow_nan=False, allow_infinity=False),
        st.floats(0.1, 4),
    )
    expl = st.builds(ExpLinear, coeff, st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False))
    return st.one_of(poly, binom, expl)


def _points(seed, n=10, rmax=1.0):
    rng = np.random.default_rng(seed)
    return rmax * np.sqrt(rng.uniform(0, 1, n)) * np.exp(2j * np.pi * rng.uniform(0, 1, n))


@settings(max_examples=60, deadline=None)
@given(functions(), radius, radius, st.integers(0, 10**6))
def test_dilate_composes(f, r, s, seed):
    z = _points(seed)
    lhs = f.dilate(r).dilate(s).eval(z)
    rhs = f.dilate(r * s).eval(z)
    np.testing.assert_allclose(lhs, rhs, rtol=1e-12, atol=1e-12 * (1 + np.max(np.abs(rhs))))


@settings(max_examples=60, deadline=None)
@given(functions(), st.integers(0, 10**6))
def test_derivatives_match_central_differences(f, seed):
    h = 1e-5
    z = _points(seed, rmax=0.9)
    for order, lower in ((1, f.eval), (2, lambda w: f.deriv_eval(w, 1))):
        fd = (lower(z + h) - lower(z - h)) / (2 * h)
        exact = f.deriv_eval(z, order)
        scale = 1 + np.max(np.abs(exact)) + np.max(np.abs(lower(z)))
        np.testing.assert_allclose(fd, exact, rtol=1e-6, atol=1e-6 * scale)


@settings(max_examples=40, deadline=None)
@given(
    st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
    st.complex_numbers(max_magnitude=0.6, allow_nan=False, allow_infinity=False),
    st.floats(0.1, 5),
    st.integers(0, 10**6),
)
def test_truncated_binomial_series_converges(C, a, s, seed):
    f = BinomialPower(C, a, s)
    z = _points(seed, rmax=0.3)
    exact = f.eval(z)
    np.testing.assert_allclose(
        f.truncate_to_series(200).eval(z), exact, rtol=1e-10, atol=1e-10 * (1 + abs(C))
    )


@settings(max_examples=60, deadline=None)
@given(functions(), st.floats(0, 2 * np.pi), st.integers(0, 10**6))
def test_rotation_covariance(f, phi, seed):
    z = _points(seed, rmax=0.95)
    direct = f.eval(cmath.exp(1j * phi) * z)
    rotated = f.rotate(phi).eval(z)
    np.testing.assert_allclose(rotated, direct, rtol=1e-12, atol=1e-12 * (1 + np.max(np.abs(direct))))
    if isinstance(f, (BinomialPower, ExpLinear)):
        # same identity through the coefficient series
        series = f.truncate_to_series(60).rotate(phi).eval(0.2 * z)
        np.testing.assert_allclose(series, f.eval(cmath.exp(1j * phi) * 0.2 * z), rtol=1e-12, atol=1e-12)
