"""Truncated Breit-Wigner spectrum: normalization, moments, survival law.

The density is a Lorentzian of full width ``gamma`` about ``center``,
cut to the interval ``center +/- a`` and rescaled to unit integral by

    N = pi / (2 * arctan(2 a / gamma))

All integrals are done in the scaled offset ``u = (E - center) / (gamma/2)``
where the Lorentzian is ``1/(1+u^2)`` on ``|u| <= U = 2a/gamma``.  The
survival amplitude drops the overall phase ``exp(-i center t / hbar)``
before integrating, so only the symmetric cosine envelope remains.

Two construction paths exist.  :func:`make_tbw` takes physical
quantities (MeV, seconds).  :meth:`TruncatedBreitWigner.desk_scale` builds
a dimensionless distribution with ``hbar = 1`` whose energies and times are
plain floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Union

import numpy as np

from . import quadrature
from .errors import DimensionError, DomainError, NumericalFailure
from .spread_models import Localization, localization_half_support
from .units import CONSTANTS, ENERGY, TIME, PhysQuantity

__all__ = [
    "TruncatedBreitWigner",
    "SurvivalCurve",
    "Moments",
    "make_tbw",
    "density",
    "unit_integral",
    "quadrature_norm_constant",
    "closed_form_variance",
    "moments",
    "survival_probability",
    "short_time_law",
    "sample_survival",
]

AGREEMENT_RTOL = 1e-9

Scalar = Union[float, PhysQuantity]


def _z_minus_atan(z: float) -> float:
    """``z - arctan(z)`` without cancellation at small ``z``."""
    if z > 0.1:
        return z - math.atan(z)
    z2 = z * z
    term = z * z2
    total = 0.0
    k = 3
    while True:
        contrib = term / k
        total += contrib
        if abs(contrib) < 1e-18 * abs(total):
            return total
        term *= -z2
        k += 2


@dataclass(frozen=True)
class TruncatedBreitWigner:
    """Lorentzian of width ``width`` about ``center`` on ``center +/- half_support``.

    Energies are MeV floats (or dimensionless in desk-scale mode), ``hbar``
    is in the matching action unit.  ``norm_constant`` is derived.
    """

    center: float
    width: float
    half_support: float
    hbar: float = CONSTANTS.hbar.canonical
    desk: bool = False
    norm_constant: float = field(init=False)

    def __post_init__(self):
        for name in ("center", "width", "half_support", "hbar"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if not self.width > 0:
            raise DomainError(f"width must be positive, got {self.width}")
        if not self.half_support > 0:
            raise DomainError(f"half_support must be positive, got {self.half_support}")
        if not self.hbar > 0:
            raise DomainError("hbar must be positive")
        object.__setattr__(self, "norm_constant", math.pi / (2.0 * math.atan(self.scaled_support)))

    @classmethod
    def desk_scale(cls, width: float = 1.0, half_support: float = 50.0,
                   center: float = 0.0) -> TruncatedBreitWigner:
        """Dimensionless distribution with ``hbar = 1``."""
        return cls(float(center), float(width), float(half_support), hbar=1.0, desk=True)

    @property
    def hwhm(self) -> float:
        return 0.5 * self.width

    @property
    def scaled_support(self) -> float:
        """Support half-width in HWHM units, ``2a/gamma``."""
        return self.half_support / self.hwhm

    def _energy(self, e: Scalar) -> float:
        if isinstance(e, PhysQuantity):
            if self.desk:
                raise DimensionError("desk-scale distribution takes plain floats")
            if e.dim != ENERGY:
                raise DimensionError(f"expected Energy, got {e.dim.tag}")
            return e.canonical
        return float(e)

    def _time(self, t: Scalar) -> float:
        if isinstance(t, PhysQuantity):
            if self.desk:
                raise DimensionError("desk-scale distribution takes plain floats")
            if t.dim != TIME:
                raise DimensionError(f"expected Time, got {t.dim.tag}")
            return t.canonical
        return float(t)

    def _wrap(self, e: float):
        return e if self.desk else PhysQuantity(e, ENERGY)


class Moments(NamedTuple):
    mean: Scalar
    delta_e: Scalar


@dataclass(frozen=True)
class SurvivalCurve:
    """Samples ``(t, P(t))``; ``time_unit`` is ``"s"`` or ``"hbar=1"``."""

    samples: tuple[tuple[float, float], ...]
    time_unit: str = "s"

    @property
    def times(self) -> list[float]:
        return [t for t, _ in self.samples]

    @property
    def probabilities(self) -> list[float]:
        return [p for _, p in self.samples]


def make_tbw(center: PhysQuantity, width: PhysQuantity, v: PhysQuantity, R: PhysQuantity,
             *, verify: bool = True) -> TruncatedBreitWigner:
    """Distribution for products separating at ``v`` and localized within ``R``.

    The support half-width is ``hbar v / (2R)``.  With ``verify`` the closed
    form normalization is checked against quadrature.
    """
    loc = Localization(v, R)
    for q, what in ((center, "center"), (width, "width")):
        if not isinstance(q, PhysQuantity) or q.dim != ENERGY:
            raise DimensionError(f"{what} must be an Energy quantity")
        if q.magnitude <= 0:
            raise DomainError(f"{what} must be positive, got {q}")
    a = localization_half_support(loc.v, loc.R).canonical
    d = TruncatedBreitWigner(center.canonical, width.canonical, a)
    if verify:
        n_quad = quadrature_norm_constant(d)
        if abs(n_quad - d.norm_constant) > AGREEMENT_RTOL * d.norm_constant:
            raise NumericalFailure(
                f"normalization mismatch: closed form {d.norm_constant!r}, quadrature {n_quad!r}")
    return d


def density(d: TruncatedBreitWigner, E: Scalar) -> float:
    """rho(E); per MeV (or per desk energy unit), zero outside the support."""
    x = d._energy(E) - d.center
    if abs(x) > d.half_support:
        return 0.0
    h = d.hwhm
    return d.norm_constant * (h / math.pi) / (x * x + h * h)


def unit_integral(d: TruncatedBreitWigner) -> float:
    """Integral of rho over the support by adaptive quadrature (should be 1)."""
    return d.norm_constant / math.pi * quadrature.lorentz_moment(0, d.scaled_support)


def quadrature_norm_constant(d: TruncatedBreitWigner) -> float:
    """Normalization constant obtained from quadrature instead of the arctan form."""
    return math.pi / quadrature.lorentz_moment(0, d.scaled_support)


def closed_form_variance(d: TruncatedBreitWigner) -> float:
    """``N (gamma/pi) [a - (gamma/2) arctan(2a/gamma)]``."""
    h = d.hwhm
    return d.norm_constant * (2.0 * h * h / math.pi) * _z_minus_atan(d.scaled_support)


def moments(d: TruncatedBreitWigner) -> Moments:
    """Mean and standard deviation of rho by quadrature.

    The quadrature variance is checked against :func:`closed_form_variance`.
    """
    U = d.scaled_support
    w = d.norm_constant / math.pi
    m0 = w * quadrature.lorentz_moment(0, U)
    m1 = w * quadrature.lorentz_moment(1, U)
    m2 = w * quadrature.lorentz_moment(2, U)
    h = d.hwhm
    var = h * h * (m2 - 2.0 * m1 * m1 + m1 * m1 * m0)
    ref = closed_form_variance(d)
    if abs(var - ref) > AGREEMENT_RTOL * ref:
        raise NumericalFailure(f"variance quadrature {var!r} disagrees with closed form {ref!r}")
    return Moments(d._wrap(d.center + h * m1), d._wrap(math.sqrt(var)))


def survival_probability(d: TruncatedBreitWigner, t: Scalar) -> float:
    """``|a(t)|^2`` with ``a(t)`` the Fourier transform of rho."""
    tt = d._time(t)
    if tt < 0:
        raise DomainError(f"time must be non-negative, got {tt}")
    if tt == 0:
        return 1.0
    freq = d.hwhm * tt / d.hbar
    try:
        value, _ = quadrature.lorentz_cosine(freq, d.scaled_support, what=f"survival at t={tt!r}")
    except NumericalFailure as exc:
        raise NumericalFailure(f"survival amplitude at t={tt!r}: {exc}") from exc
    amp = d.norm_constant / math.pi * value
    return amp * amp


def short_time_law(d: TruncatedBreitWigner, t: Scalar, spread: float | None = None) -> float:
    """Quadratic approximation ``1 - (spread t / hbar)^2``; spread defaults to the quadrature one."""
    if spread is None:
        de = moments(d).delta_e
        spread = de if d.desk else de.canonical
    x = spread * d._time(t) / d.hbar
    return 1.0 - x * x


def sample_survival(d: TruncatedBreitWigner, t_min: Scalar, t_max: Scalar, n_samples: int,
                    spacing: str = "linear") -> SurvivalCurve:
    """Survival probability on a linear or logarithmic time grid."""
    lo, hi = d._time(t_min), d._time(t_max)
    if not 0 <= lo < hi:
        raise DomainError(f"need 0 <= t_min < t_max, got {lo}, {hi}")
    if n_samples < 2:
        raise DomainError(f"n_samples must be >= 2, got {n_samples}")
    if spacing == "linear":
        grid = np.linspace(lo, hi, n_samples)
    elif spacing == "log":
        if lo <= 0:
            raise DomainError("log spacing needs t_min > 0")
        grid = np.geomspace(lo, hi, n_samples)
    else:
        raise DomainError(f"unknown spacing {spacing!r}")
    samples = tuple((float(t), survival_probability(d, float(t))) for t in grid)
    return SurvivalCurve(samples, "hbar=1" if d.desk else "s")

