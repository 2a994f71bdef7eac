import math

import pytest
from hypothesis import given, strategies as st

from protonspread.channels import P_TO_PI0_EPLUS, DecayChannel, mass_gap, threshold_energy
from protonspread.errors import DimensionError, DomainError
from protonspread.units import quantity


def test_builtin_threshold_and_gap():
    assert threshold_energy(P_TO_PI0_EPLUS).canonical == pytest.approx(134.9768 + 0.511, rel=1e-15)
    assert threshold_energy(P_TO_PI0_EPLUS).canonical == pytest.approx(135.488, abs=1e-3)
    gap = mass_gap(P_TO_PI0_EPLUS).canonical
    assert gap == pytest.approx(938.272 - 135.4878, rel=1e-14)
    assert gap == pytest.approx(802.784, abs=1e-3)
    assert math.sqrt(gap) == pytest.approx(28.33, abs=0.05)


def test_massless_and_single_product():
    ch = DecayChannel.from_mev("massless", 1.0, [0.0, 0.0])
    assert threshold_energy(ch).canonical == 0.0
    assert mass_gap(ch).canonical == 1.0
    one = DecayChannel.from_mev("single", 10.0, [3.5])
    assert threshold_energy(one).canonical == 3.5


def test_gap_by_construction():
    ch = DecayChannel.from_mev("x", 135.488 + 1.0, [134.9768, 0.5112])
    assert mass_gap(ch).canonical == pytest.approx(1.0, rel=1e-12)


def test_closed_channel_rejected():
    with pytest.raises(DomainError):
        DecayChannel.from_mev("closed", 100.0, [60.0, 40.0])
    with pytest.raises(DomainError):
        DecayChannel.from_mev("negative", 100.0, [-1.0, 2.0])
    with pytest.raises(DomainError):
        DecayChannel.from_mev("empty", 100.0, [])
    with pytest.raises(DimensionError):
        DecayChannel("bad", quantity(1, "s"), (quantity(0.1, "MeV"),))


masses = st.lists(st.floats(min_value=0, max_value=1e4), min_size=1, max_size=6)


@given(masses, st.floats(min_value=1e-6, max_value=1e4), st.randoms())
def test_threshold_permutation_invariant(products, excess, rnd):
    ch = DecayChannel.from_mev("a", math.fsum(products) + excess, products)
    shuffled = list(products)
    rnd.shuffle(shuffled)
    other = DecayChannel.from_mev("b", ch.parent_mass.canonical, shuffled)
    assert threshold_energy(ch) == threshold_energy(other)


@given(masses, st.floats(min_value=1e-6, max_value=1e4))
def test_gap_plus_threshold_is_parent(products, excess):
    parent = math.fsum(products) + excess
    ch = DecayChannel.from_mev("a", parent, products)
    total = mass_gap(ch).canonical + threshold_energy(ch).canonical
    # one rounding in the subtraction and one in the sum
    assert abs(total - parent) <= math.ulp(parent)


@given(masses, st.floats(min_value=1e-3, max_value=1e4), st.floats(min_value=1e-3, max_value=1e3))
def test_gap_scales_linearly(products, excess, k):
    ch = DecayChannel.from_mev("a", math.fsum(products) + excess, products)
    scaled = DecayChannel.from_mev("b", ch.parent_mass.canonical * k, [m * k for m in products])
    assert mass_gap(scaled).canonical == pytest.approx(k * mass_gap(ch).canonical, rel=1e-9, abs=1e-9 * k * ch.parent_mass.canonical)
