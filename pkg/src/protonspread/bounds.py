"""Heisenberg lower bound on measurement duration and scenario evaluation."""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .channels import P_TO_PI0_EPLUS, DecayChannel
from .errors import ConfigurationError, DimensionError, DomainError
from .spread_models import (
    Localization,
    SpreadModel,
    StepCutoffGUT,
    delta_e,
    spread_coefficient,
)
from .units import CONSTANTS, ENERGY, LENGTH, SPEED, TIME, PhysQuantity, quantity, width_from_lifetime

__all__ = [
    "Scenario",
    "BoundReport",
    "min_measurement_time",
    "tm_coefficient",
    "evaluate",
    "sweep",
    "SWEEP_PARAMETERS",
    "DEFAULT_CAMPAIGN_LIMIT",
]

DEFAULT_CAMPAIGN_LIMIT = quantity(10, "years")

# swept parameter -> (dimension, unit assumed for bare floats)
SWEEP_PARAMETERS = {
    "tau": (TIME, "s"),
    "R": (LENGTH, "cm"),
    "v": (SPEED, "cm/s"),
    "M": (ENERGY, "MeV"),
}


@dataclass(frozen=True)
class Scenario:
    """A lifetime, a spread model and the campaign used to judge observability.

    ``channel`` defaults to the model's own channel (or p -> pi0 e+ for the
    localization model).  ``safety_factor`` (>= 1) inflates the minimum
    measurement time for users who want a margin beyond the saturated bound.
    """

    lifetime: PhysQuantity
    model: SpreadModel
    channel: Optional[DecayChannel] = None
    campaign_limit: PhysQuantity = DEFAULT_CAMPAIGN_LIMIT
    safety_factor: float = 1.0

    def __post_init__(self):
        own = getattr(self.model, "channel", None)
        if self.channel is None:
            object.__setattr__(self, "channel", own or P_TO_PI0_EPLUS)
        elif own is not None and own != self.channel:
            raise ConfigurationError(
                f"scenario channel {self.channel.name!r} differs from model channel {own.name!r}")
        for q, what in ((self.lifetime, "lifetime"), (self.campaign_limit, "campaign_limit")):
            if not isinstance(q, PhysQuantity) or q.dim != TIME:
                raise DimensionError(f"{what} must be a Time quantity")
            if q.magnitude <= 0:
                raise DomainError(f"{what} must be positive, got {q}")
        if not self.safety_factor >= 1.0 or not math.isfinite(self.safety_factor):
            raise DomainError(f"safety_factor must be a finite number >= 1, got {self.safety_factor}")


@dataclass(frozen=True)
class BoundReport:
    gamma: PhysQuantity
    delta_e: PhysQuantity
    t_m_min: PhysQuantity
    coefficient: float
    observable: bool
    scenario: Scenario = field(repr=False)

    def record(self) -> dict:
        """Flat record with fixed field names plus an echo of the inputs."""
        s = self.scenario
        m = s.model
        return {
            "gamma_mev": self.gamma.canonical,
            "delta_e_mev": self.delta_e.canonical,
            "t_m_min_s": self.t_m_min.canonical,
            "coefficient_s_per_sqrt_s": self.coefficient,
            "observable": self.observable,
            "model": m.kind,
            "channel": s.channel.name,
            "lifetime_s": s.lifetime.canonical,
            "campaign_limit_s": s.campaign_limit.canonical,
            "safety_factor": s.safety_factor,
            "M_mev": m.M.canonical if isinstance(m, StepCutoffGUT) else None,
            "v_cm_per_s": m.v.canonical if isinstance(m, Localization) else None,
            "R_cm": m.R.canonical if isinstance(m, Localization) else None,
        }


def min_measurement_time(delta_e: PhysQuantity) -> PhysQuantity:
    """Saturated bound ``hbar / delta_e`` in seconds."""
    if not isinstance(delta_e, PhysQuantity) or delta_e.dim != ENERGY:
        raise DimensionError("delta_e must be an Energy quantity")
    if delta_e.magnitude <= 0:
        raise DomainError(f"delta_e must be positive, got {delta_e}")
    return CONSTANTS.hbar / delta_e


def tm_coefficient(model: SpreadModel) -> float:
    """``c`` in ``T_m = c * sqrt(tau / s)`` seconds, i.e. ``sqrt(hbar) / K``."""
    return math.sqrt(CONSTANTS.hbar.canonical) / spread_coefficient(model).canonical


def evaluate(s: Scenario) -> BoundReport:
    gamma = width_from_lifetime(s.lifetime)
    de = delta_e(s.model, gamma)
    t_min = min_measurement_time(de)
    if s.safety_factor != 1.0:
        t_min = t_min * s.safety_factor
    return BoundReport(
        gamma=gamma,
        delta_e=de,
        t_m_min=t_min,
        coefficient=tm_coefficient(s.model),
        observable=t_min <= s.campaign_limit,
        scenario=s,
    )


def _applicable(model: SpreadModel, parameter: str) -> bool:
    if parameter == "tau":
        return True
    if parameter in ("R", "v"):
        return isinstance(model, Localization)
    if parameter == "M":
        return isinstance(model, StepCutoffGUT)
    return False


def _with(s: Scenario, parameter: str, value: PhysQuantity) -> Scenario:
    if parameter == "tau":
        return dataclasses.replace(s, lifetime=value)
    return dataclasses.replace(s, model=dataclasses.replace(s.model, **{parameter: value}))


def sweep(s: Scenario, parameter: str,
          grid: Iterable[Union[float, PhysQuantity]]) -> list[BoundReport]:
    """Evaluate ``s`` once per grid value of ``parameter`` (tau, R, v or M).

    Bare floats are read in canonical units (s, cm, cm/s, MeV).
    """
    if parameter not in SWEEP_PARAMETERS:
        raise ConfigurationError(
            f"unknown sweep parameter {parameter!r}; choose from {sorted(SWEEP_PARAMETERS)}")
    if not _applicable(s.model, parameter):
        raise ConfigurationError(f"parameter {parameter!r} does not apply to model {s.model.kind!r}")
    dim, unit = SWEEP_PARAMETERS[parameter]
    reports = []
    for g in grid:
        value = g if isinstance(g, PhysQuantity) else PhysQuantity(g, dim, unit)
        if value.dim != dim:
            raise DimensionError(f"{parameter} grid value must be {dim.tag}, got {value.dim.tag}")
        reports.append(evaluate(_with(s, parameter, value)))
    return reports
