"""Caianiello maximal-acceleration formulas and kinematic rate bounds.

All three scalar bounds here are the same algebraic object seen from
different inputs: rate_bound(m c^2, c) = avg_acceleration_bound(m c^2) =
maximal_acceleration(m) = 2 m c^3 / hbar, and the test suite holds that
triangle to 1e-12 relative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import constants
from .errors import CausalityError, InvalidStateError, OutOfDomainError
from .units import (ACCELERATION, ENERGY, INVERSE_LENGTH, JERK, VELOCITY,
                    BoundReport, Quantity, as_quantity)


@dataclass(frozen=True)
class ParticleSpec:
    """Mass (g) and rest energy (erg, defaulting to m c^2)."""

    mass: float
    rest_energy: float = None  # type: ignore[assignment]

    def __post_init__(self):
        if not (self.mass > 0):
            raise InvalidStateError("particle mass must be positive")
        if self.rest_energy is None:
            object.__setattr__(self, "rest_energy",
                               self.mass * constants.C ** 2)
        elif not (self.rest_energy > 0):
            raise InvalidStateError("rest energy must be positive")

    @classmethod
    def electron(cls) -> "ParticleSpec":
        return cls(constants.M_ELECTRON)

    @classmethod
    def proton(cls) -> "ParticleSpec":
        return cls(constants.M_PROTON)


def maximal_acceleration(p: ParticleSpec) -> Quantity:
    """Mass-dependent ceiling 2 m c^3 / hbar on proper acceleration (cm/s^2)."""
    c = constants.constant("c")
    hbar = constants.constant("hbar")
    m = Quantity(p.mass, constants.constant("m_e").dim)
    return 2 * m * c ** 3 / hbar


def rate_bound(delta_E, delta_v) -> Quantity:
    """Velocity-change rate ceiling (2/hbar) dE dv (cm/s^2).

    dv may not exceed c; a superluminal spread is rejected rather than
    clamped so caller bugs stay visible.
    """
    de = as_quantity(delta_E, ENERGY, "delta_E")
    dv = as_quantity(delta_v, VELOCITY, "delta_v")
    if de.value < 0:
        raise OutOfDomainError("delta_E must be nonnegative")
    if dv.value < 0:
        raise OutOfDomainError("delta_v must be nonnegative")
    if dv.value > constants.C:
        raise CausalityError(
            f"delta_v = {dv.value:.6g} cm/s exceeds c = {constants.C:.6g} cm/s")
    return (2 / constants.constant("hbar")) * de * dv


def avg_acceleration_bound(energy) -> Quantity:
    """Mean-acceleration ceiling 2 c E / hbar (cm/s^2)."""
    e = as_quantity(energy, ENERGY, "energy")
    if e.value < 0:
        raise OutOfDomainError("energy must be nonnegative")
    return 2 * constants.constant("c") * e / constants.constant("hbar")


@dataclass(frozen=True)
class FluctuationExpansion:
    """Two-term velocity fluctuation a0*dt + jerk0*dt^2 (cm/s)."""

    delta_v: float
    first_term: float
    second_term: float
    linear_ok: bool  # second term within 10% of the first


def fluctuation_expansion(a0: float, jerk0: float, dt: float) -> FluctuationExpansion:
    """Short-time expansion of the velocity fluctuation about its mean.

    `linear_ok` is False when the quadratic term exceeds 10% of the linear
    one, i.e. when dt is no longer `sufficiently small` for the
    constant-acceleration reduction dv = <a> dt.
    """
    if dt < 0:
        raise OutOfDomainError("dt must be nonnegative")
    first = a0 * dt
    second = jerk0 * dt * dt
    linear_ok = abs(second) <= 0.1 * abs(first) if (first or second) else True
    return FluctuationExpansion(first + second, first, second, linear_ok)


# Minkowski metric, signature (+,-,-,-).  The proper-acceleration norm takes
# an absolute value, so the opposite signature gives identical output.
_METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True, eq=False)
class FourAcceleration:
    """Components d^2 x^mu / ds^2 (1/cm), s the proper length c*tau."""

    components: np.ndarray

    def __post_init__(self):
        comp = np.asarray(self.components, dtype=float).reshape(4)
        if not np.isfinite(comp).all():
            raise InvalidStateError("four-acceleration must be finite")
        comp.setflags(write=False)
        object.__setattr__(self, "components", comp)

    @classmethod
    def rest_frame(cls, ax: float, ay: float = 0.0, az: float = 0.0) -> "FourAcceleration":
        """Build from an ordinary rest-frame acceleration (cm/s^2).

        In the instantaneous rest frame the time component vanishes and the
        spatial part is a/c^2.
        """
        c2 = constants.C ** 2
        return cls(np.array([0.0, ax / c2, ay / c2, az / c2]))

    def transform(self, matrix: np.ndarray) -> "FourAcceleration":
        return FourAcceleration(np.asarray(matrix, dtype=float) @ self.components)


def boost_matrix(direction, rapidity: float) -> np.ndarray:
    """Pure Lorentz boost along `direction` (3-vector) with given rapidity."""
    n = np.asarray(direction, dtype=float).reshape(3)
    norm = float(np.linalg.norm(n))
    if norm == 0:
        raise InvalidStateError("boost direction must be nonzero")
    n = n / norm
    ch, sh = math.cosh(rapidity), math.sinh(rapidity)
    out = np.eye(4)
    out[0, 0] = ch
    out[0, 1:] = out[1:, 0] = sh * n
    out[1:, 1:] = np.eye(3) + (ch - 1.0) * np.outer(n, n)
    return out


def rotation_matrix(axis, angle: float) -> np.ndarray:
    """Spatial rotation about `axis` embedded as a 4x4 Lorentz matrix."""
    n = np.asarray(axis, dtype=float).reshape(3)
    norm = float(np.linalg.norm(n))
    if norm == 0:
        raise InvalidStateError("rotation axis must be nonzero")
    n = n / norm
    k = np.array([[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]])
    r3 = np.eye(3) + math.sin(angle) * k + (1.0 - math.cos(angle)) * (k @ k)
    out = np.eye(4)
    out[1:, 1:] = r3
    return out


def proper_acceleration_norm(a: FourAcceleration) -> Quantity:
    """Lorentz-invariant |a^mu a_mu|^(1/2) (1/cm).

    In the rest frame this equals |a|/c^2, the quantity the maximal
    acceleration bounds by A_m/c^2.
    """
    comp = a.components
    contracted = float(comp @ _METRIC @ comp)
    return Quantity(math.sqrt(abs(contracted)), INVERSE_LENGTH)


def proper_acceleration_check(a: FourAcceleration, p: ParticleSpec) -> BoundReport:
    """Report proper-acceleration norm against A_m/c^2 for particle `p`."""
    norm = proper_acceleration_norm(a)
    limit = maximal_acceleration(p) / (constants.constant("c") ** 2)
    return BoundReport.check(norm, limit, "proper acceleration vs A_m/c^2")
