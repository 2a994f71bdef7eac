import math

import pytest
from hypothesis import given, settings, strategies as st

from protonspread.errors import DimensionError, DomainError, NumericalFailure
from protonspread.spectral import (
    TruncatedBreitWigner,
    closed_form_variance,
    density,
    make_tbw,
    moments,
    quadrature_norm_constant,
    sample_survival,
    short_time_law,
    survival_probability,
    unit_integral,
)
from protonspread.spread_models import Localization, delta_e
from protonspread.units import CONSTANTS, PhysQuantity, TIME, quantity, width_from_lifetime

# Frozen from an independent mpmath quadrature at 30 digits (see decisions notes).
DESK_NORM = 1.00640677094091925
DESK_DELTA_E = 3.97082626611137632
DESK_P = {1e-3: 0.999984233712848406, 0.5: 0.614243428452589600, 1.0: 0.372561429717128336,
          2.0: 0.137050140486391079, 5.0: 0.00682044430070959355}

DESK = TruncatedBreitWigner.desk_scale(1.0, 50.0)


def test_desk_norm_constant():
    assert DESK.norm_constant == pytest.approx(math.pi / (2 * math.atan(100)), rel=1e-15)
    assert DESK.norm_constant == pytest.approx(DESK_NORM, rel=1e-14)
    assert unit_integral(DESK) == pytest.approx(1.0, abs=1e-12)


def test_norm_constant_tends_to_one_from_above():
    values = [TruncatedBreitWigner.desk_scale(1.0, a).norm_constant for a in (1e-2, 1, 10, 1e3, 1e6, 1e12)]
    assert all(v > 1 for v in values[:-1])
    assert all(x > y for x, y in zip(values, values[1:]))
    assert values[-1] == pytest.approx(1.0, abs=1e-12)


def test_make_tbw_half_support():
    d = make_tbw(CONSTANTS.m_p, quantity(1, "MeV"), quantity(1, "c"), quantity(1e-8, "cm"))
    assert d.half_support == pytest.approx(9.87e-4, rel=1e-3)
    assert d.center == 938.272 and d.width == 1.0


def test_make_tbw_validation():
    with pytest.raises(DomainError):
        make_tbw(CONSTANTS.m_p, quantity(0, "MeV"), quantity(1, "c"), quantity(1, "cm"))
    with pytest.raises(DomainError):
        make_tbw(CONSTANTS.m_p, quantity(1, "MeV"), quantity(2, "c"), quantity(1, "cm"))
    with pytest.raises(DimensionError):
        make_tbw(CONSTANTS.m_p, quantity(1, "s"), quantity(1, "c"), quantity(1, "cm"))
    with pytest.raises(DomainError):
        TruncatedBreitWigner.desk_scale(1.0, -1.0)


def test_density_values():
    peak = density(DESK, 0.0)
    assert peak == pytest.approx(DESK_NORM * 2 / math.pi, rel=1e-15)
    assert density(DESK, 0.5) == pytest.approx(peak / 2, rel=1e-15)
    assert density(DESK, -0.5) == pytest.approx(peak / 2, rel=1e-15)
    assert density(DESK, 50.0) > 0
    assert density(DESK, 50.0 + 1e-9) == 0.0
    assert density(DESK, -1e3) == 0.0
    with pytest.raises(DimensionError):
        density(DESK, quantity(1, "MeV"))


def test_density_physical_quantity_input():
    d = make_tbw(CONSTANTS.m_p, quantity(1, "MeV"), quantity(1, "c"), quantity(1e-8, "cm"))
    assert density(d, quantity(938.272, "MeV")) == density(d, 938.272)
    assert density(d, quantity(0.938272, "GeV")) == pytest.approx(density(d, 938.272), rel=1e-12)
    with pytest.raises(DimensionError):
        density(d, quantity(1, "s"))


@given(st.floats(min_value=0, max_value=60), st.floats(min_value=-3, max_value=3))
def test_density_symmetric(x, log_a):
    d = TruncatedBreitWigner.desk_scale(1.0, 10.0 ** log_a)
    assert density(d, x) == density(d, -x)
    if x <= d.half_support:
        assert density(d, x) > 0


def test_density_symmetric_about_physical_center():
    d = make_tbw(CONSTANTS.m_p, quantity(1e-4, "MeV"), quantity(1, "c"), quantity(1e-8, "cm"))
    for k in range(1, 40):
        x = k * 2.0 ** -20  # exactly representable offsets
        assert density(d, d.center + x) == density(d, d.center - x)


def test_desk_moments_against_oracle():
    mean, de = moments(DESK)
    assert abs(mean) <= 1e-9
    assert de == pytest.approx(DESK_DELTA_E, rel=1e-12)
    assert math.sqrt(closed_form_variance(DESK)) == pytest.approx(DESK_DELTA_E, rel=1e-14)


def test_moments_against_scipy_on_moderate_supports():
    from scipy import integrate

    for gamma, a in ((1.0, 1e-2), (2.0, 3.0), (0.3, 40.0), (1.0, 1e3)):
        d = TruncatedBreitWigner.desk_scale(gamma, a)
        pts = [x for x in (-10 * gamma, -gamma, 0, gamma, 10 * gamma) if -a < x < a]
        z = integrate.quad(lambda x: density(d, x), -a, a, points=pts, epsabs=1e-14, epsrel=1e-13, limit=500)[0]
        v = integrate.quad(lambda x: x * x * density(d, x), -a, a, points=pts, epsabs=1e-14, epsrel=1e-13, limit=500)[0]
        assert z == pytest.approx(1.0, abs=1e-10)
        assert moments(d).delta_e ** 2 == pytest.approx(v, rel=1e-9)


def test_physical_moments():
    d = make_tbw(CONSTANTS.m_p, quantity(1, "MeV"), quantity(1, "c"), quantity(1e-8, "cm"))
    mean, de = moments(d)
    assert abs(mean.canonical - 938.272) <= 1e-9 * d.width
    # support (9.87e-4 MeV) is far narrower than gamma: nearly uniform, std ~ a/sqrt(3)
    assert de.canonical == pytest.approx(d.half_support / math.sqrt(3), rel=1e-6)
    assert de.canonical == pytest.approx(5.696e-4, rel=1e-3)


def test_physical_moments_at_proton_width_within_factor_two_of_closed_form_model():
    gamma = width_from_lifetime(quantity(1e31, "years"))
    model = Localization(quantity(1, "c"), quantity(1e-8, "cm"))
    d = make_tbw(CONSTANTS.m_p, gamma, model.v, model.R)
    mean, de = moments(d)
    assert abs(mean.canonical - d.center) <= 1e-9 * d.width + 1e-16 * d.center
    closed = delta_e(model, gamma).canonical
    ratio = closed / de.canonical
    assert 0.5 < ratio < 2
    assert ratio == pytest.approx(math.sqrt(math.pi), rel=1e-6)


def test_survival_at_zero_is_exactly_one():
    assert survival_probability(DESK, 0.0) == 1.0
    d = make_tbw(CONSTANTS.m_p, quantity(1, "MeV"), quantity(1, "c"), quantity(1e-8, "cm"))
    assert survival_probability(d, quantity(0, "s")) == 1.0


@pytest.mark.parametrize("t", sorted(DESK_P))
def test_survival_against_oracle(t):
    assert survival_probability(DESK, t) == pytest.approx(DESK_P[t], rel=1e-10, abs=1e-13)


def test_survival_close_to_exponential():
    for k in range(46):
        t = 0.5 + 0.1 * k
        p = survival_probability(DESK, t)
        assert abs(p - math.exp(-t)) / math.exp(-t) < 0.05


def test_short_time_quadratic_law_desk():
    t = 1e-3
    assert abs(survival_probability(DESK, t) - short_time_law(DESK, t)) < 1e-8


def test_short_time_fourth_order_residual_desk():
    # P = 1 - m2 t^2 + (m2^2/4 + m4/12) t^4 + O(t^6); m4 from the oracle
    m2 = DESK_DELTA_E ** 2
    m4 = 13343.9424977244357
    for t in (1e-4, 3e-4, 1e-3, 3e-3):
        resid = survival_probability(DESK, t) - (1 - m2 * t * t)
        assert resid == pytest.approx((m2 * m2 / 4 + m4 / 12) * t ** 4, rel=0.02, abs=1e-15)


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=-2, max_value=math.log10(12)), st.floats(min_value=-1, max_value=1),
       st.floats(min_value=3e-4, max_value=1e-3))
def test_short_time_property_low_kurtosis(log_u, log_gamma, x):
    gamma = 10.0 ** log_gamma
    d = TruncatedBreitWigner.desk_scale(gamma, 0.5 * gamma * 10.0 ** log_u)
    de = moments(d).delta_e
    t = x / de
    law = short_time_law(d, t, spread=de)
    assert abs(survival_probability(d, t) - law) < 1e-6 * x * x


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=-2, max_value=3), st.floats(min_value=0, max_value=30))
def test_survival_bounded(log_a, t):
    d = TruncatedBreitWigner.desk_scale(1.0, 10.0 ** log_a)
    p = survival_probability(d, t)
    assert 0.0 <= p <= 1.0 + 1e-9


def test_survival_rejects_negative_time():
    with pytest.raises(DomainError):
        survival_probability(DESK, -1.0)
    with pytest.raises(DimensionError):
        survival_probability(DESK, quantity(1, "s"))


def test_survival_failure_names_time():
    d = make_tbw(CONSTANTS.m_p, width_from_lifetime(quantity(1e31, "years")), quantity(1, "c"),
                 quantity(1e-8, "cm"))
    with pytest.raises(NumericalFailure, match=r"t=1\.0"):
        survival_probability(d, quantity(1, "s"))


def test_sample_survival_grids():
    c = sample_survival(DESK, 0.0, 2.0, 2)
    assert c.samples == ((0.0, 1.0), (2.0, survival_probability(DESK, 2.0)))
    lin = sample_survival(DESK, 0.0, 1.0, 101)
    assert len(lin.times) == 101 and all(x < y for x, y in zip(lin.times, lin.times[1:]))
    log = sample_survival(DESK, 1e-3, 1.0, 5, "log")
    assert log.times[0] == 1e-3 and log.times[-1] == 1.0
    assert log.time_unit == "hbar=1"
    with pytest.raises(DomainError):
        sample_survival(DESK, 0.0, 1.0, 5, "log")
    with pytest.raises(DomainError):
        sample_survival(DESK, 1.0, 0.5, 5)
    with pytest.raises(DomainError):
        sample_survival(DESK, 0.0, 1.0, 1)
    with pytest.raises(DomainError):
        sample_survival(DESK, 0.0, 1.0, 3, "cubic")


def test_sample_survival_physical_units():
    d = make_tbw(CONSTANTS.m_p, quantity(1, "MeV"), quantity(1, "c"), quantity(1e-8, "cm"))
    c = sample_survival(d, quantity(0, "s"), PhysQuantity(1e-21, TIME), 3)
    assert c.time_unit == "s" and c.probabilities[0] == 1.0
    assert all(0 <= p <= 1 + 1e-9 for p in c.probabilities)


def test_quadrature_norm_constant_matches_closed_form():
    for a in (1e-2, 1.0, 1e4, 1e12):
        d = TruncatedBreitWigner.desk_scale(1.0, a)
        assert quadrature_norm_constant(d) == pytest.approx(d.norm_constant, rel=1e-12)
