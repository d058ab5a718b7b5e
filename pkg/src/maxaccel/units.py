"""Dimensional bookkeeping in canonical Gaussian-CGS units.

All internal computation happens on Gaussian-CGS magnitudes; SI appears only
at display boundaries.  Charge is carried in esu and folded into mechanical
exponents through esu = g^(1/2) cm^(3/2) s^(-1), which is exactly why the
electric and magnetic fields share one dimension here (gauss = statvolt/cm).
Exponents are `Fraction`s, so dimension arithmetic is exact.

This is deliberately not a general-purpose unit library: only the display
units needed by the toolkit are registered, and there is no unit-string
parsing beyond that registered set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DimensionMismatchError, NoDisplayUnitError

Number = Union[int, float]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Dimension:
    """Exact exponents over (mass, length, time, temperature).

    Charge does not get its own axis; `Dimension.of(charge=q)` folds it into
    the mechanical exponents with the esu convention.
    """

    mass: Fraction = _ZERO
    length: Fraction = _ZERO
    time: Fraction = _ZERO
    temperature: Fraction = _ZERO

    @staticmethod
    def of(mass=0, length=0, time=0, charge=0, temperature=0) -> "Dimension":
        m = Fraction(mass) + Fraction(charge) / 2
        l = Fraction(length) + Fraction(charge) * 3 / 2
        t = Fraction(time) - Fraction(charge)
        return Dimension(m, l, t, Fraction(temperature))

    def __mul__(self, other: "Dimension") -> "Dimension":
        return Dimension(self.mass + other.mass, self.length + other.length,
                         self.time + other.time, self.temperature + other.temperature)

    def __truediv__(self, other: "Dimension") -> "Dimension":
        return Dimension(self.mass - other.mass, self.length - other.length,
                         self.time - other.time, self.temperature - other.temperature)

    def __pow__(self, exponent) -> "Dimension":
        e = Fraction(exponent)
        return Dimension(self.mass * e, self.length * e, self.time * e,
                         self.temperature * e)

    @property
    def is_dimensionless(self) -> bool:
        return self == DIMENSIONLESS

    def exponent_string(self) -> str:
        parts = []
        for symbol, exp in (("g", self.mass), ("cm", self.length),
                            ("s", self.time), ("K", self.temperature)):
            if exp == 0:
                continue
            parts.append(symbol if exp == 1 else f"{symbol}^{exp}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        name = _DIMENSION_NAMES.get(self)
        if name:
            return f"{name} ({self.exponent_string()})"
        return self.exponent_string()


DIMENSIONLESS = Dimension.of()
MASS = Dimension.of(mass=1)
LENGTH = Dimension.of(length=1)
TIME = Dimension.of(time=1)
TEMPERATURE = Dimension.of(temperature=1)
VELOCITY = Dimension.of(length=1, time=-1)
ACCELERATION = Dimension.of(length=1, time=-2)
JERK = Dimension.of(length=1, time=-3)
FREQUENCY = Dimension.of(time=-1)
INVERSE_LENGTH = Dimension.of(length=-1)
ENERGY = Dimension.of(mass=1, length=2, time=-2)
ACTION = ENERGY * TIME
CHARGE = Dimension.of(charge=1)
# Gaussian E and B: gauss = statvolt/cm = g^(1/2) cm^(-1/2) s^(-1)
FIELD = Dimension.of(mass=Fraction(1, 2), length=Fraction(-1, 2), time=-1)
MAGNETIC_MOMENT = ENERGY / FIELD          # erg/G
NUMBER_DENSITY = Dimension.of(length=-3)
CURRENT_DENSITY = CHARGE * Dimension.of(length=-2, time=-1)
ENERGY_PER_TEMPERATURE = ENERGY / TEMPERATURE
GRAVITATION = Dimension.of(mass=-1, length=3, time=-2)

_DIMENSION_NAMES = {
    DIMENSIONLESS: "dimensionless",
    MASS: "mass",
    LENGTH: "length",
    TIME: "time",
    TEMPERATURE: "temperature",
    VELOCITY: "velocity",
    ACCELERATION: "acceleration",
    JERK: "jerk",
    FREQUENCY: "frequency",
    INVERSE_LENGTH: "inverse length",
    ENERGY: "energy",
    ACTION: "action",
    CHARGE: "charge",
    FIELD: "E/B field",
    MAGNETIC_MOMENT: "magnetic moment",
    NUMBER_DENSITY: "number density",
    CURRENT_DENSITY: "current density",
    ENERGY_PER_TEMPERATURE: "energy per temperature",
    GRAVITATION: "gravitation constant",
}

# Canonical CGS unit label per named dimension (for output labeling).
_CGS_LABELS = {
    DIMENSIONLESS: "",
    MASS: "g",
    LENGTH: "cm",
    TIME: "s",
    TEMPERATURE: "K",
    VELOCITY: "cm/s",
    ACCELERATION: "cm/s^2",
    JERK: "cm/s^3",
    FREQUENCY: "1/s",
    INVERSE_LENGTH: "1/cm",
    ENERGY: "erg",
    ACTION: "erg*s",
    CHARGE: "esu",
    FIELD: "G",
    MAGNETIC_MOMENT: "erg/G",
    NUMBER_DENSITY: "1/cm^3",
    CURRENT_DENSITY: "esu/(cm^2*s)",
    ENERGY_PER_TEMPERATURE: "erg/K",
    GRAVITATION: "cm^3/(g*s^2)",
}


def cgs_unit_label(dim: Dimension) -> str:
    return _CGS_LABELS.get(dim, dim.exponent_string())


@dataclass(frozen=True)
class Quantity:
    """A Gaussian-CGS magnitude tagged with an exact dimension.

    Addition and comparison are only defined between equal dimensions;
    anything else raises instead of coercing.
    """

    value: float
    dim: Dimension = DIMENSIONLESS

    def _require_same_dim(self, other: "Quantity", op: str) -> None:
        if self.dim != other.dim:
            raise DimensionMismatchError(
                f"cannot {op} {self.dim} and {other.dim}")

    def __add__(self, other: "Quantity") -> "Quantity":
        self._require_same_dim(other, "add")
        return Quantity(self.value + other.value, self.dim)

    def __sub__(self, other: "Quantity") -> "Quantity":
        self._require_same_dim(other, "subtract")
        return Quantity(self.value - other.value, self.dim)

    def __mul__(self, other):
        if isinstance(other, Quantity):
            return Quantity(self.value * other.value, self.dim * other.dim)
        return Quantity(self.value * other, self.dim)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Quantity):
            return Quantity(self.value / other.value, self.dim / other.dim)
        return Quantity(self.value / other, self.dim)

    def __rtruediv__(self, other: Number) -> "Quantity":
        return Quantity(other / self.value, DIMENSIONLESS / self.dim)

    def __pow__(self, exponent) -> "Quantity":
        return Quantity(self.value ** float(Fraction(exponent)),
                        self.dim ** exponent)

    def __neg__(self) -> "Quantity":
        return Quantity(-self.value, self.dim)

    def __abs__(self) -> "Quantity":
        return Quantity(abs(self.value), self.dim)

    def __lt__(self, other: "Quantity") -> bool:
        self._require_same_dim(other, "compare")
        return self.value < other.value

    def __le__(self, other: "Quantity") -> bool:
        self._require_same_dim(other, "compare")
        return self.value <= other.value

    def __gt__(self, other: "Quantity") -> bool:
        self._require_same_dim(other, "compare")
        return self.value > other.value

    def __ge__(self, other: "Quantity") -> bool:
        self._require_same_dim(other, "compare")
        return self.value >= other.value

    def sqrt(self) -> "Quantity":
        return Quantity(math.sqrt(self.value), self.dim ** Fraction(1, 2))

    def __str__(self) -> str:
        label = cgs_unit_label(self.dim)
        return f"{self.value:.12g} {label}".rstrip()


def quantity(value: float, dim: Dimension = DIMENSIONLESS) -> Quantity:
    return Quantity(float(value), dim)


def as_quantity(x, dim: Dimension, name: str = "value") -> Quantity:
    """Coerce a bare CGS magnitude or check a Quantity's dimension."""
    if isinstance(x, Quantity):
        if x.dim != dim:
            raise DimensionMismatchError(
                f"{name}: expected {dim}, got {x.dim}")
        return x
    return Quantity(float(x), dim)


# --------------------------------------------------------------------------
# SI display registry.
#
# Conversion factors below are exact consequences of SI definitions
# (c = 2.99792458e10 cm/s and e = 1.602176634e-19 C), not measured values:
#   1 statvolt/cm = 2.99792458e4 N/C        1 eV = 1.602176634e-12 erg
#   1 esu         = 10/c_cgs C              1 G  = 1e-4 T
# --------------------------------------------------------------------------

_EV_ERG = 1.602176634e-12
_STATVOLT_PER_CM_TO_N_PER_C = 2.99792458e4
_ESU_TO_COULOMB = 10.0 / 2.99792458e10


@dataclass(frozen=True)
class SIValue:
    """A converted magnitude with its display-unit label."""

    value: float
    unit: str


# dimension -> ((label, si_per_cgs), ...); first entry is the default.
_DISPLAY: dict[Dimension, tuple[tuple[str, float], ...]] = {
    DIMENSIONLESS: (("", 1.0),),
    ENERGY: (("J", 1e-7), ("eV", 1.0 / _EV_ERG)),
    FIELD: (("N/C", _STATVOLT_PER_CM_TO_N_PER_C), ("T", 1e-4), ("G", 1.0)),
    ACCELERATION: (("m/s^2", 1e-2),),
    JERK: (("m/s^3", 1e-2),),
    VELOCITY: (("m/s", 1e-2),),
    TIME: (("s", 1.0),),
    LENGTH: (("m", 1e-2),),
    INVERSE_LENGTH: (("1/m", 1e2),),
    MASS: (("kg", 1e-3),),
    FREQUENCY: (("Hz", 1.0),),
    ACTION: (("J*s", 1e-7),),
    TEMPERATURE: (("K", 1.0),),
    CHARGE: (("C", _ESU_TO_COULOMB),),
    NUMBER_DENSITY: (("1/m^3", 1e6),),
    CURRENT_DENSITY: (("A/m^2", 1e4 * _ESU_TO_COULOMB),),
    MAGNETIC_MOMENT: (("J/T", 1e-3),),
    ENERGY_PER_TEMPERATURE: (("J/K", 1e-7),),
    GRAVITATION: (("m^3/(kg*s^2)", 1e-3),),
}

_UNIT_LOOKUP = {label: (dim, factor)
                for dim, entries in _DISPLAY.items()
                for label, factor in entries}


def display_units(dim: Dimension) -> tuple[str, ...]:
    """Registered display-unit labels for a dimension (default first)."""
    entries = _DISPLAY.get(dim)
    if entries is None:
        raise NoDisplayUnitError(f"no display unit registered for {dim}")
    return tuple(label for label, _ in entries)


def to_si(q: Quantity, unit: str | None = None) -> SIValue:
    """Convert a canonical-CGS quantity to its SI display unit.

    `unit` selects among the registered labels for the quantity's dimension;
    the default is the first registered one (fields display as N/C, pass
    unit="G" or "T" for magnetic readings).
    """
    entries = _DISPLAY.get(q.dim)
    if entries is None:
        raise NoDisplayUnitError(f"no display unit registered for {q.dim}")
    if unit is None:
        label, factor = entries[0]
    else:
        for label, factor in entries:
            if label == unit:
                break
        else:
            raise NoDisplayUnitError(
                f"unit {unit!r} is not registered for {q.dim}")
    return SIValue(q.value * factor, label)


def from_si(value: float, unit: str) -> Quantity:
    """Inverse of to_si for any registered display-unit label."""
    try:
        dim, factor = _UNIT_LOOKUP[unit]
    except KeyError:
        raise NoDisplayUnitError(f"unknown display unit {unit!r}") from None
    return Quantity(float(value) / factor, dim)


# Unit strings accepted in the bundled data files (exact match only).
UNIT_STRINGS = {
    "1": DIMENSIONLESS,
    "g": MASS,
    "cm": LENGTH,
    "s": TIME,
    "K": TEMPERATURE,
    "cm/s": VELOCITY,
    "cm/s^2": ACCELERATION,
    "erg": ENERGY,
    "erg*s": ACTION,
    "esu": CHARGE,
    "G": FIELD,
    "statvolt/cm": FIELD,
    "erg/G": MAGNETIC_MOMENT,
    "erg/K": ENERGY_PER_TEMPERATURE,
    "1/cm": INVERSE_LENGTH,
    "1/cm^3": NUMBER_DENSITY,
    "cm^3/(g*s^2)": GRAVITATION,
}


@dataclass(frozen=True)
class BoundReport:
    """One evaluated inequality: left side, right side, verdict, provenance."""

    lhs: Quantity
    rhs: Quantity
    satisfied: bool
    label: str
    relation: str = "<="

    def __post_init__(self):
        if self.lhs.dim != self.rhs.dim:
            raise DimensionMismatchError(
                f"bound {self.label!r}: lhs is {self.lhs.dim}, rhs is {self.rhs.dim}")

    @classmethod
    def check(cls, lhs: Quantity, rhs: Quantity, label: str,
              relation: str = "<=", slack: float = 1e-12) -> "BoundReport":
        """Build a report with a small relative slack for float noise."""
        tol = slack * max(abs(lhs.value), abs(rhs.value))
        if relation == "<=":
            ok = lhs.value <= rhs.value + tol
        elif relation == ">=":
            ok = lhs.value >= rhs.value - tol
        else:
            raise ValueError(f"unsupported relation {relation!r}")
        return cls(lhs, rhs, ok, label, relation)
