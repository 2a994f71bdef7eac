"""Energy spread of the unstable proton state and the measurement-time bound it implies."""

__version__ = "0.1.0"

from .bounds import BoundReport, Scenario, evaluate, min_measurement_time, sweep, tm_coefficient
from .channels import P_TO_PI0_EPLUS, DecayChannel, mass_gap, threshold_energy
from .errors import ConfigurationError, DimensionError, DomainError, NumericalFailure, ProtonSpreadError
from .quadrature import BACKEND
from .spectral import (
    SurvivalCurve,
    TruncatedBreitWigner,
    density,
    make_tbw,
    moments,
    sample_survival,
    survival_probability,
)
from .spread_models import (
    Localization,
    StepCutoffGUT,
    SymmetricResonance,
    cutoff_smooth,
    cutoff_step,
    delta_e,
)
from .units import (
    CONSTANTS,
    PhysQuantity,
    convert,
    lifetime_from_width,
    quantity,
    width_from_lifetime,
)
