"""Physical constants and dimension-checked quantities.

Every quantity is a magnitude plus a :class:`Dimension`, stored together
with the unit its magnitude is expressed in.  Arithmetic always works in
the canonical system

=========  ===========
dimension  canonical
=========  ===========
energy     MeV
time       s
length     cm
speed      cm/s
=========  ===========

so ``hbar / tau`` comes out in MeV without any bookkeeping by the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import DimensionError, DomainError

__all__ = [
    "Dimension",
    "ENERGY",
    "TIME",
    "LENGTH",
    "SPEED",
    "INVERSE_TIME",
    "DIMENSIONLESS",
    "ENERGY_SQRT",
    "ACTION",
    "PhysQuantity",
    "ConstantsTable",
    "CONSTANTS",
    "UNITS",
    "quantity",
    "convert",
    "width_from_lifetime",
    "lifetime_from_width",
]


@dataclass(frozen=True)
class Dimension:
    """Exponents of (energy, time, length)."""

    energy: Fraction = Fraction(0)
    time: Fraction = Fraction(0)
    length: Fraction = Fraction(0)

    def __mul__(self, other: Dimension) -> Dimension:
        return Dimension(self.energy + other.energy, self.time + other.time,
                         self.length + other.length)

    def __truediv__(self, other: Dimension) -> Dimension:
        return Dimension(self.energy - other.energy, self.time - other.time,
                         self.length - other.length)

    def __pow__(self, p) -> Dimension:
        p = Fraction(p).limit_denominator(1000)
        return Dimension(self.energy * p, self.time * p, self.length * p)

    @property
    def tag(self) -> str:
        return _TAGS.get(self, self._label())

    def _label(self) -> str:
        parts = []
        for sym, e in (("MeV", self.energy), ("s", self.time), ("cm", self.length)):
            if e:
                parts.append(sym if e == 1 else f"{sym}^{e}")
        return "*".join(parts) or "1"

    def __str__(self) -> str:
        return self.tag

    def __repr__(self) -> str:
        return f"Dimension({self.tag})"


ENERGY = Dimension(energy=Fraction(1))
TIME = Dimension(time=Fraction(1))
LENGTH = Dimension(length=Fraction(1))
SPEED = Dimension(time=Fraction(-1), length=Fraction(1))
INVERSE_TIME = Dimension(time=Fraction(-1))
DIMENSIONLESS = Dimension()
ENERGY_SQRT = Dimension(energy=Fraction(1, 2))
ACTION = Dimension(energy=Fraction(1), time=Fraction(1))

_TAGS = {
    ENERGY: "Energy",
    TIME: "Time",
    LENGTH: "Length",
    SPEED: "Speed",
    INVERSE_TIME: "InverseTime",
    DIMENSIONLESS: "Dimensionless",
    ENERGY_SQRT: "EnergySqrt",
    ACTION: "Action",
}

JULIAN_YEAR_S = 3.15576e7
SPEED_OF_LIGHT_CM_S = 2.99792458e10

# unit name -> (dimension, factor to canonical)
UNITS: dict[str, tuple[Dimension, float]] = {
    "eV": (ENERGY, 1e-6),
    "keV": (ENERGY, 1e-3),
    "MeV": (ENERGY, 1.0),
    "GeV": (ENERGY, 1e3),
    "TeV": (ENERGY, 1e6),
    "s": (TIME, 1.0),
    "ms": (TIME, 1e-3),
    "us": (TIME, 1e-6),
    "ns": (TIME, 1e-9),
    "ps": (TIME, 1e-12),
    "fs": (TIME, 1e-15),
    "yr": (TIME, JULIAN_YEAR_S),
    "year": (TIME, JULIAN_YEAR_S),
    "years": (TIME, JULIAN_YEAR_S),
    "cm": (LENGTH, 1.0),
    "m": (LENGTH, 1e2),
    "mm": (LENGTH, 1e-1),
    "um": (LENGTH, 1e-4),
    "nm": (LENGTH, 1e-7),
    "angstrom": (LENGTH, 1e-8),
    "fm": (LENGTH, 1e-13),
    "cm/s": (SPEED, 1.0),
    "m/s": (SPEED, 1e2),
    "c": (SPEED, SPEED_OF_LIGHT_CM_S),
    "1/s": (INVERSE_TIME, 1.0),
    "MeV*s": (ACTION, 1.0),
    "MeV^1/2": (ENERGY_SQRT, 1.0),
    "1": (DIMENSIONLESS, 1.0),
}

_CANONICAL = {
    ENERGY: "MeV",
    TIME: "s",
    LENGTH: "cm",
    SPEED: "cm/s",
    INVERSE_TIME: "1/s",
    ACTION: "MeV*s",
    ENERGY_SQRT: "MeV^1/2",
    DIMENSIONLESS: "1",
}


def _canonical_unit(dim: Dimension) -> str:
    return _CANONICAL.get(dim) or dim._label()


def _unit_factor(unit: str, dim: Dimension) -> float:
    if unit == _canonical_unit(dim):
        return 1.0
    try:
        udim, factor = UNITS[unit]
    except KeyError:
        raise DimensionError(f"unknown unit {unit!r}") from None
    if udim != dim:
        raise DimensionError(
            f"unit {unit!r} has dimension {udim.tag}, quantity has {dim.tag}")
    return factor


Number = Union[int, float]


@dataclass(frozen=True)
class PhysQuantity:
    """A finite magnitude with a dimension and the unit it is expressed in.

    Arithmetic between quantities converts to canonical units first, so
    ``quantity(1, "GeV") + quantity(1, "MeV")`` is ``1001 MeV``.  Addition,
    subtraction and ordering demand identical dimensions.
    """

    magnitude: float
    dim: Dimension
    unit: str = field(default="")

    def __post_init__(self):
        mag = float(self.magnitude)
        if not math.isfinite(mag):
            raise DomainError(f"non-finite magnitude {self.magnitude!r}")
        object.__setattr__(self, "magnitude", mag)
        if not self.unit:
            object.__setattr__(self, "unit", _canonical_unit(self.dim))
        else:
            _unit_factor(self.unit, self.dim)

    @property
    def canonical(self) -> float:
        """Magnitude in canonical units (MeV, s, cm, cm/s)."""
        return self.magnitude * _unit_factor(self.unit, self.dim)

    def to(self, unit: str) -> PhysQuantity:
        return convert(self, unit)

    def value_in(self, unit: str) -> float:
        return convert(self, unit).magnitude

    def sqrt(self) -> PhysQuantity:
        return self ** Fraction(1, 2)

    def _check_same(self, other, op):
        if not isinstance(other, PhysQuantity):
            raise DimensionError(
                f"cannot {op} {self.dim.tag} quantity and bare number {other!r}")
        if other.dim != self.dim:
            raise DimensionError(
                f"cannot {op} {self.dim.tag} and {other.dim.tag}")

    def __add__(self, other):
        self._check_same(other, "add")
        return PhysQuantity(self.canonical + other.canonical, self.dim)

    def __sub__(self, other):
        self._check_same(other, "subtract")
        return PhysQuantity(self.canonical - other.canonical, self.dim)

    def __neg__(self):
        return PhysQuantity(-self.magnitude, self.dim, self.unit)

    def __mul__(self, other):
        if isinstance(other, PhysQuantity):
            return PhysQuantity(self.canonical * other.canonical, self.dim * other.dim)
        if isinstance(other, (int, float)):
            return PhysQuantity(self.magnitude * other, self.dim, self.unit)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PhysQuantity):
            return PhysQuantity(self.canonical / other.canonical, self.dim / other.dim)
        if isinstance(other, (int, float)):
            return PhysQuantity(self.magnitude / other, self.dim, self.unit)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, float)):
            return PhysQuantity(other / self.canonical, DIMENSIONLESS / self.dim)
        return NotImplemented

    def __pow__(self, p):
        c = self.canonical
        if c < 0 and Fraction(p).limit_denominator(1000).denominator != 1:
            raise DomainError(f"fractional power of negative quantity {self}")
        mag = math.sqrt(c) if p == Fraction(1, 2) else c ** float(p)
        return PhysQuantity(mag, self.dim ** p)

    def __lt__(self, other):
        self._check_same(other, "compare")
        return self.canonical < other.canonical

    def __le__(self, other):
        self._check_same(other, "compare")
        return self.canonical <= other.canonical

    def __gt__(self, other):
        self._check_same(other, "compare")
        return self.canonical > other.canonical

    def __ge__(self, other):
        self._check_same(other, "compare")
        return self.canonical >= other.canonical

    def __float__(self):
        if self.dim != DIMENSIONLESS:
            raise DimensionError(f"cannot take float() of a {self.dim.tag} quantity")
        return self.canonical

    def __str__(self):
        return f"{self.magnitude!r} {self.unit}"


def quantity(value: Number, unit: str) -> PhysQuantity:
    """Build a quantity from a registered unit name, e.g. ``quantity(10, "cm")``."""
    try:
        dim, _ = UNITS[unit]
    except KeyError:
        raise DimensionError(f"unknown unit {unit!r}") from None
    return PhysQuantity(value, dim, unit)


def convert(q: PhysQuantity, target_unit: str) -> PhysQuantity:
    """Re-express ``q`` in ``target_unit``; the dimension must match."""
    try:
        tdim, tfactor = UNITS[target_unit]
    except KeyError:
        raise DimensionError(f"unknown unit {target_unit!r}") from None
    if tdim != q.dim:
        raise DimensionError(
            f"cannot convert {q.dim.tag} quantity to {target_unit!r} ({tdim.tag})")
    if target_unit == q.unit:
        return q
    return PhysQuantity(q.magnitude * _unit_factor(q.unit, q.dim) / tfactor, tdim, target_unit)


@dataclass(frozen=True)
class ConstantsTable:
    hbar: PhysQuantity = PhysQuantity(6.58212e-22, ACTION)
    c: PhysQuantity = PhysQuantity(SPEED_OF_LIGHT_CM_S, SPEED)
    year_seconds: PhysQuantity = PhysQuantity(JULIAN_YEAR_S, TIME)
    m_p: PhysQuantity = PhysQuantity(938.272, ENERGY)
    m_pi0: PhysQuantity = PhysQuantity(134.9768, ENERGY)
    m_e: PhysQuantity = PhysQuantity(0.51100, ENERGY)

    def __post_init__(self):
        for name in ("hbar", "c", "year_seconds", "m_p", "m_pi0", "m_e"):
            if getattr(self, name).magnitude <= 0:
                raise DomainError(f"constant {name} must be positive")


CONSTANTS = ConstantsTable()


def _require(q, dim: Dimension, what: str):
    if not isinstance(q, PhysQuantity) or q.dim != dim:
        got = q.dim.tag if isinstance(q, PhysQuantity) else type(q).__name__
        raise DimensionError(f"{what} must be {dim.tag}, got {got}")
    if q.magnitude <= 0:
        raise DomainError(f"{what} must be positive, got {q}")


def width_from_lifetime(tau: PhysQuantity) -> PhysQuantity:
    """Resonance width hbar/tau in MeV."""
    _require(tau, TIME, "lifetime")
    return CONSTANTS.hbar / tau


def lifetime_from_width(gamma: PhysQuantity) -> PhysQuantity:
    """Lifetime hbar/gamma in seconds."""
    _require(gamma, ENERGY, "width")
    return CONSTANTS.hbar / gamma
