import math

import pytest
from hypothesis import given, strategies as st

from protonspread.channels import P_TO_PI0_EPLUS
from protonspread.errors import DimensionError, DomainError
from protonspread.spread_models import (
    Localization,
    StepCutoffGUT,
    SymmetricResonance,
    cutoff_smooth,
    cutoff_step,
    delta_e,
    spread_coefficient,
)
from protonspread.units import CONSTANTS, ENERGY, PhysQuantity, quantity, width_from_lifetime

MEV = quantity(1, "MeV")
M = quantity(1, "GeV")


def test_cutoff_smooth_values():
    assert cutoff_smooth(quantity(0, "MeV"), M) == 1.0
    assert cutoff_smooth(M, M) == 0.25
    assert cutoff_smooth(quantity(3, "GeV"), M) == 1 / 16


def test_cutoff_step_values():
    assert cutoff_step(quantity(0.5, "GeV"), M) == 1.0
    assert cutoff_step(quantity(2, "GeV"), M) == 0.0
    assert cutoff_step(M, M) == 0.5


@pytest.mark.parametrize("f", [cutoff_smooth, cutoff_step])
def test_cutoffs_reject_negative_omega(f):
    with pytest.raises(DomainError):
        f(quantity(-1, "MeV"), M)
    with pytest.raises(DimensionError):
        f(quantity(1, "s"), M)


@given(st.floats(min_value=0, max_value=1e6), st.floats(min_value=0, max_value=1e6))
def test_cutoff_smooth_monotone_in_unit_interval(w1, w2):
    lo, hi = sorted((w1, w2))
    f_lo = cutoff_smooth(PhysQuantity(lo, ENERGY), M)
    f_hi = cutoff_smooth(PhysQuantity(hi, ENERGY), M)
    assert 0 < f_hi <= f_lo <= 1


def test_delta_e_examples():
    sym = delta_e(SymmetricResonance(P_TO_PI0_EPLUS), MEV)
    assert sym.dim == ENERGY
    assert sym.canonical == pytest.approx(28.33, abs=0.005)
    gut = delta_e(StepCutoffGUT(quantity(1e15, "GeV")), MEV)
    assert gut.canonical == pytest.approx(9.97e15, rel=2e-3)
    near = delta_e(Localization(quantity(1, "c"), quantity(1e-8, "cm")), MEV)
    assert near.canonical == pytest.approx(3.14e-2, rel=2e-3)
    far = delta_e(Localization(quantity(1, "c"), quantity(10, "cm")), MEV)
    assert far.canonical == pytest.approx(9.93e-7, rel=1e-3)


def test_localization_uses_reduced_planck_constant():
    k = spread_coefficient(Localization(quantity(1, "c"), quantity(1e-8, "cm"))).canonical
    hbar_c = CONSTANTS.hbar.canonical * CONSTANTS.c.canonical
    assert k ** 2 == pytest.approx(hbar_c / 2e-8, rel=1e-14)
    assert k ** 2 == pytest.approx(9.87e-4, rel=1e-3)


def test_model_invariants():
    with pytest.raises(DomainError):
        StepCutoffGUT(quantity(0, "GeV"))
    with pytest.raises(DomainError):
        Localization(quantity(1.01, "c"), quantity(1, "cm"))
    with pytest.raises(DomainError):
        Localization(quantity(1, "c"), quantity(0, "cm"))
    with pytest.raises(DimensionError):
        Localization(quantity(1, "cm"), quantity(1, "cm"))
    with pytest.raises(DomainError):
        delta_e(SymmetricResonance(), quantity(0, "MeV"))
    with pytest.raises(DimensionError):
        delta_e(SymmetricResonance(), quantity(1, "s"))
    # exactly c is allowed
    Localization(quantity(1, "c"), quantity(1, "cm"))
    Localization(CONSTANTS.c, quantity(1, "cm"))


models = st.one_of(
    st.just(SymmetricResonance()),
    st.floats(min_value=1e3, max_value=1e22).map(lambda m: StepCutoffGUT(PhysQuantity(m, ENERGY))),
    st.tuples(st.floats(min_value=1e-2, max_value=1.0), st.floats(min_value=1e-10, max_value=1e3)).map(
        lambda p: Localization(quantity(p[0], "c"), quantity(p[1], "cm"))),
)
gammas = st.floats(min_value=-70, max_value=3).map(lambda e: PhysQuantity(10.0 ** e, ENERGY))


@given(models, gammas, st.floats(min_value=1e-6, max_value=1e6))
def test_sqrt_scaling(model, gamma, k):
    a = delta_e(model, gamma * k).canonical
    b = math.sqrt(k) * delta_e(model, gamma).canonical
    assert a == pytest.approx(b, rel=1e-12)


@given(models, gammas, st.floats(min_value=1.001, max_value=1e3))
def test_monotone_in_gamma(model, gamma, k):
    assert delta_e(model, gamma * k) > delta_e(model, gamma)


@given(st.floats(min_value=1e-10, max_value=1e3), st.floats(min_value=1.001, max_value=100),
       st.floats(min_value=0.01, max_value=0.5))
def test_localization_monotone_in_R_and_v(R, k, v):
    g = quantity(1, "MeV")
    small = delta_e(Localization(quantity(v, "c"), quantity(R, "cm")), g)
    larger_R = delta_e(Localization(quantity(v, "c"), quantity(R * k, "cm")), g)
    faster = delta_e(Localization(quantity(min(1.0, v * k), "c"), quantity(R, "cm")), g)
    assert larger_R < small < faster


def test_cross_model_ordering_at_proton_width():
    g = width_from_lifetime(quantity(1e31, "years"))
    gut = delta_e(StepCutoffGUT(), g)
    sym = delta_e(SymmetricResonance(), g)
    loc = delta_e(Localization(quantity(1, "c"), quantity(1e-8, "cm")), g)
    assert gut.canonical > 1e10 * sym.canonical
    assert sym.canonical > 100 * loc.canonical
