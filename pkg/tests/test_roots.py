import math

import pytest

from smallgon.roots import (
    RootMethod,
    closure_equation,
    closure_equation_derivative,
    delta0,
    delta0_bisection,
)

SIZES = [16, 32, 64, 128, 256, 512, 1024]


@pytest.mark.parametrize("n", SIZES)
def test_bisection_agrees_with_closed_form(n):
    closed = delta0(n, RootMethod.CLOSED_FORM)
    bisect = delta0(n, RootMethod.BISECTION)
    assert abs(closed.delta0 - bisect.delta0) <= 1e-14
    assert abs(closed.residual) <= 1e-15
    assert abs(bisect.residual) <= 1e-15


@pytest.mark.parametrize("n", SIZES)
def test_root_in_open_interval(n):
    d = delta0(n).delta0
    assert 0 < d < math.pi / n


def test_leading_term_at_1024():
    # second series term adds 19 pi^2 / (12 n^2) ~ 1.5e-5 relative at n = 1024
    ratio = delta0(1024).delta0 * 1024**4 / math.pi**4
    assert abs(ratio - 1) <= 1e-4
    assert ratio - 1 == pytest.approx(19 * math.pi**2 / (12 * 1024**2), rel=1e-2)


def test_width_of_d16_from_root():
    d = delta0(16).delta0
    assert math.cos(math.pi / 32 + d / 2) == pytest.approx(0.9951068324, abs=5e-11)


def test_equation_is_decreasing_with_sign_change():
    n = 16
    ds = [k * (math.pi / n) / 50 for k in range(51)]
    values = [closure_equation(n, d) for d in ds]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert values[0] > 0 > values[-1]
    assert all(closure_equation_derivative(n, d) < 0 for d in ds)


def test_derivative_matches_finite_difference():
    n, d, h = 32, 1e-4, 1e-7
    fd = (closure_equation(n, d + h) - closure_equation(n, d - h)) / (2 * h)
    assert fd == pytest.approx(closure_equation_derivative(n, d), rel=1e-7)


@pytest.mark.parametrize("n", [8, 12, 24, 0, -16])
def test_rejects_bad_n(n):
    with pytest.raises(ValueError):
        delta0(n)


def test_bisection_stays_in_bracket():
    for n in SIZES:
        assert 0 < delta0_bisection(n) < math.pi / n
