"""Adaptive quadrature over scaled Lorentzian integrands.

The compiled kernel ``_quadext`` is used when it has been built; otherwise
the pure-Python ``_quad_py`` takes over.  Setting ``PROTONSPREAD_PURE=1``
in the environment forces the fallback.  :data:`BACKEND` names the kernel
in use.
"""

from __future__ import annotations

import math
import os

from . import _quad_py
from .errors import NumericalFailure

if os.environ.get("PROTONSPREAD_PURE") == "1":
    _kernel = _quad_py
    BACKEND = "python"
else:
    try:
        from . import _quadext as _kernel
        BACKEND = "cython"
    except ImportError:
        _kernel = _quad_py
        BACKEND = "python"

KIND_POWER = _quad_py.KIND_POWER
KIND_COS = _quad_py.KIND_COS

ABS_TOL = 1e-12
REL_TOL = 1e-13
MAX_PANELS = 1_000_000

# below this scaled offset the initial grid is uniform (10 widths = 20 HWHM)
CORE_HALF_WIDTH = 20.0
CORE_STEP = 0.5


def peak_breaks(upper: float) -> list[float]:
    """Initial panel edges on ``[0, upper]`` for a Lorentzian centred at 0.

    Uniform steps inside the core region, then a geometric ladder (ratio 2)
    out to ``upper``; covers the near-delta and near-flat regimes alike.
    """
    if not upper > 0:
        raise ValueError("upper limit must be positive")
    core = min(upper, CORE_HALF_WIDTH)
    n_core = max(1, math.ceil(core / CORE_STEP))
    breaks = [core * i / n_core for i in range(n_core + 1)]
    x = core
    while x * 2.0 < upper:
        x *= 2.0
        breaks.append(x)
    if breaks[-1] < upper:
        breaks.append(upper)
    return breaks


def symmetric_breaks(upper: float) -> list[float]:
    """Mirror of :func:`peak_breaks` covering ``[-upper, upper]``."""
    half = peak_breaks(upper)
    return [-x for x in reversed(half[1:])] + half


def cap_panel_width(breaks: list[float], max_width: float, max_panels: int = MAX_PANELS) -> list[float]:
    """Split panels wider than ``max_width``; fails if the grid would exceed ``max_panels``."""
    n_needed = sum(max(1, math.ceil((b - a) / max_width)) for a, b in zip(breaks, breaks[1:]))
    if n_needed > max_panels:
        raise NumericalFailure(
            f"oscillation cap needs {n_needed} panels, refinement cap is {max_panels}")
    out = [breaks[0]]
    for a, b in zip(breaks, breaks[1:]):
        k = max(1, math.ceil((b - a) / max_width))
        out.extend(a + (b - a) * j / k for j in range(1, k))
        out.append(b)
    return out


def integrate(kind: int, power: int, freq: float, breaks: list[float], *,
              abs_tol: float = ABS_TOL, rel_tol: float = REL_TOL,
              max_panels: int = MAX_PANELS, what: str = "integral") -> tuple[float, float, int]:
    """Run the kernel; raise :class:`NumericalFailure` if it does not converge.

    Returns ``(value, abserr, n_panels)``.
    """
    value, err, n, ok = _kernel.adaptive(kind, power, freq, breaks, abs_tol, rel_tol, max_panels)
    if not ok:
        raise NumericalFailure(
            f"{what}: no convergence after {n} panels (error estimate {err:.3g})")
    return value, err, n


def lorentz_moment(power: int, upper: float, **kw) -> float:
    """Integral of ``u**power/(1+u*u)`` over ``[-upper, upper]``."""
    return integrate(KIND_POWER, power, 0.0, symmetric_breaks(upper), **kw)[0]


def lorentz_cosine(freq: float, upper: float, **kw) -> tuple[float, int]:
    """Integral of ``cos(freq*u)/(1+u*u)`` over ``[-upper, upper]``, as twice the half-range.

    Panels are capped at half an oscillation period, ``pi/freq``.
    Returns ``(value, n_panels)``.
    """
    breaks = peak_breaks(upper)
    if freq > 0:
        breaks = cap_panel_width(breaks, math.pi / freq, kw.get("max_panels", MAX_PANELS))
    value, _, n = integrate(KIND_COS, 0, freq, breaks, **kw)
    return 2.0 * value, n
