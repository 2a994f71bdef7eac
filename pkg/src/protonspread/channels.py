"""Decay channels: parent mass, product masses, threshold and mass gap."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError, DomainError
from .units import CONSTANTS, ENERGY, PhysQuantity

__all__ = ["DecayChannel", "threshold_energy", "mass_gap", "P_TO_PI0_EPLUS", "BUILTIN_CHANNELS"]


@dataclass(frozen=True)
class DecayChannel:
    """A parent particle decaying at rest into ``product_masses``.

    The decay must be energetically open: parent mass strictly above the
    sum of product rest masses.
    """

    name: str
    parent_mass: PhysQuantity
    product_masses: tuple[PhysQuantity, ...]

    def __post_init__(self):
        products = tuple(self.product_masses)
        object.__setattr__(self, "product_masses", products)
        if not products:
            raise DomainError(f"channel {self.name!r} needs at least one product")
        for m in (self.parent_mass, *products):
            if not isinstance(m, PhysQuantity) or m.dim != ENERGY:
                raise DimensionError(f"channel {self.name!r}: masses must be Energy quantities")
            if m.magnitude < 0:
                raise DomainError(f"channel {self.name!r}: negative mass {m}")
        if not self.parent_mass.canonical > _threshold_mev(products):
            raise DomainError(
                f"channel {self.name!r} is closed: parent {self.parent_mass} "
                f"does not exceed the product mass sum")

    @classmethod
    def from_mev(cls, name: str, parent_mev: float, products_mev: Sequence[float]) -> DecayChannel:
        return cls(name, PhysQuantity(parent_mev, ENERGY),
                   tuple(PhysQuantity(m, ENERGY) for m in products_mev))


def _threshold_mev(products) -> float:
    # fsum is exactly rounded, hence independent of product order
    return math.fsum(m.canonical for m in products)


def threshold_energy(ch: DecayChannel) -> PhysQuantity:
    """Sum of product rest masses, in MeV."""
    return PhysQuantity(_threshold_mev(ch.product_masses), ENERGY)


def mass_gap(ch: DecayChannel) -> PhysQuantity:
    """Parent mass minus threshold energy (positive for an open channel)."""
    return PhysQuantity(abs(ch.parent_mass.canonical - _threshold_mev(ch.product_masses)), ENERGY)


P_TO_PI0_EPLUS = DecayChannel(
    "p -> pi0 e+", CONSTANTS.m_p, (CONSTANTS.m_pi0, CONSTANTS.m_e)
)

BUILTIN_CHANNELS = {"p -> pi0 e+": P_TO_PI0_EPLUS}
