"""Closed-form energy-spread models and the two cutoff functions.

Each model gives the spread as ``K * sqrt(gamma)`` with a model-specific
coefficient ``K`` (units MeV^1/2):

* :class:`SymmetricResonance` -- ``K**2 = m_parent - E_threshold``
* :class:`StepCutoffGUT` -- ``K**2 = M**2 / (4 pi dm)``
* :class:`Localization` -- ``K**2 = hbar v / (2 R)``, the half-width of the
  truncated Breit-Wigner support (reduced Planck constant, not ``h``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

from .channels import P_TO_PI0_EPLUS, DecayChannel, mass_gap, threshold_energy
from .errors import DimensionError, DomainError
from .units import CONSTANTS, ENERGY, ENERGY_SQRT, LENGTH, SPEED, PhysQuantity, quantity

__all__ = [
    "SymmetricResonance",
    "StepCutoffGUT",
    "Localization",
    "SpreadModel",
    "cutoff_smooth",
    "cutoff_step",
    "spread_coefficient",
    "delta_e",
    "localization_half_support",
    "MODEL_KINDS",
]


def _check(q, dim, what, allow_zero=False):
    if not isinstance(q, PhysQuantity) or q.dim != dim:
        raise DimensionError(f"{what} must be a {dim.tag} quantity")
    if q.magnitude < 0 or (q.magnitude == 0 and not allow_zero):
        raise DomainError(f"{what} must be {'non-negative' if allow_zero else 'positive'}, got {q}")


@dataclass(frozen=True)
class SymmetricResonance:
    """Smooth form-factor cutoff with a nearly symmetric spectrum."""

    channel: DecayChannel = P_TO_PI0_EPLUS
    kind = "symmetric_resonance"


@dataclass(frozen=True)
class StepCutoffGUT:
    """Sharp cutoff at the grand-unification scale ``M``."""

    M: PhysQuantity = field(default_factory=lambda: quantity(1e15, "GeV"))
    channel: DecayChannel = P_TO_PI0_EPLUS
    kind = "step_cutoff_gut"

    def __post_init__(self):
        _check(self.M, ENERGY, "M")


@dataclass(frozen=True)
class Localization:
    """Decay products localized within ``R`` while separating at speed ``v``."""

    v: PhysQuantity
    R: PhysQuantity
    kind = "localization"

    def __post_init__(self):
        _check(self.v, SPEED, "v")
        _check(self.R, LENGTH, "R")
        # v given as "1 c" converts to exactly c; allow only round-off above it
        if self.v.canonical > CONSTANTS.c.canonical * (1 + 1e-15):
            raise DomainError(f"v = {self.v} exceeds the speed of light")


SpreadModel = Union[SymmetricResonance, StepCutoffGUT, Localization]
MODEL_KINDS = {m.kind: m for m in (SymmetricResonance, StepCutoffGUT, Localization)}


def cutoff_smooth(omega: PhysQuantity, M: PhysQuantity) -> float:
    """Form factor ``M**2 / (M + omega)**2``, in (0, 1]."""
    _check(omega, ENERGY, "omega", allow_zero=True)
    _check(M, ENERGY, "M")
    m = M.canonical
    return m * m / ((m + omega.canonical) ** 2)


def cutoff_step(omega: PhysQuantity, M: PhysQuantity) -> float:
    """1 below ``M``, 0 above, 1/2 exactly at ``M``."""
    _check(omega, ENERGY, "omega", allow_zero=True)
    _check(M, ENERGY, "M")
    w, m = omega.canonical, M.canonical
    if w < m:
        return 1.0
    if w > m:
        return 0.0
    return 0.5


def localization_half_support(v: PhysQuantity, R: PhysQuantity) -> PhysQuantity:
    """Energy half-width ``hbar v / (2 R)`` of the localized spectrum."""
    return CONSTANTS.hbar * v / (2 * R)


def spread_coefficient(model: SpreadModel) -> PhysQuantity:
    """``K`` in ``delta_e = K * sqrt(gamma)``, in MeV^1/2."""
    if isinstance(model, SymmetricResonance):
        k2 = model.channel.parent_mass - threshold_energy(model.channel)
    elif isinstance(model, StepCutoffGUT):
        k2 = model.M * model.M / (4 * math.pi * mass_gap(model.channel))
    elif isinstance(model, Localization):
        k2 = localization_half_support(model.v, model.R)
    else:
        raise TypeError(f"not a spread model: {model!r}")
    k = k2.sqrt()
    assert k.dim == ENERGY_SQRT
    return k


def delta_e(model: SpreadModel, gamma: PhysQuantity) -> PhysQuantity:
    """Energy spread of the unstable state for resonance width ``gamma``."""
    _check(gamma, ENERGY, "gamma")
    de = spread_coefficient(model) * gamma.sqrt()
    if de.dim != ENERGY:
        raise DimensionError(f"spread came out as {de.dim.tag}")
    return de
