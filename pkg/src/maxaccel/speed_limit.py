"""Orthogonality times and the Margolus-Levitin / Heisenberg lower bounds.

A state is a discrete nonnegative spectrum with probability weights |c_n|^2;
relative phases never enter the overlap, so they are not part of the data
model.  The autocorrelation here uses the evolution factor exp(-i pi E t /
hbar).  Under this pi-scaled time convention the two lower bounds on the
first orthogonality time read hbar/(2 dE) and hbar/(2 E); with the plain
Schroedinger factor exp(-i E t / hbar) every time reported by this module
scales by pi (t_conventional = pi * t_reported).

The certificate inequality checked by `ml_certificate`,

    Re S(t) - (2/pi) Im S(t) >= 1 - 2 E t / hbar,

is the term-by-term sum of cos x >= 1 - (2/pi)(x + sin x) (valid for x >= 0)
over the spectrum.  At any t with S(t) = 0 it forces t >= hbar/(2E).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .constants import EV_ERG, HBAR
from .errors import InvalidStateError, OutOfDomainError, ScanSizingError
from .units import DIMENSIONLESS, ENERGY, TIME, BoundReport, Quantity

_WEIGHT_SUM_TOL = 1e-12
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class QuantumState:
    """Discrete energy levels (erg) with probability weights.

    Levels are sorted ascending, exact duplicate energies are merged by
    summing weights, and zero-weight levels are dropped.  Energies must be
    nonnegative (use `shift_to_ground` first if your spectrum is offset) and
    weights must sum to 1 within 1e-12 unless `normalize=True`.
    """

    __slots__ = ("energies", "weights")

    def __init__(self, energies, weights, normalize: bool = False):
        e = np.asarray(energies, dtype=float).ravel()
        p = np.asarray(weights, dtype=float).ravel()
        if e.size == 0 or e.size != p.size:
            raise InvalidStateError("state needs matching, nonempty energies and weights")
        if not (np.isfinite(e).all() and np.isfinite(p).all()):
            raise InvalidStateError("state contains non-finite entries")
        if (e < 0).any():
            raise InvalidStateError(
                "negative energies rejected (nonnegative spectrum required); "
                "shift_to_ground() subtracts the ground energy explicitly")
        if (p < 0).any():
            raise InvalidStateError("negative weights rejected")
        total = p.sum()
        if total <= 0:
            raise InvalidStateError("weights sum to zero")
        if not normalize and abs(total - 1.0) > _WEIGHT_SUM_TOL:
            raise InvalidStateError(
                f"weights sum to {total!r}, not 1 within {_WEIGHT_SUM_TOL}; "
                "pass normalize=True for relative weights")
        p = p / total
        uniq, inverse = np.unique(e, return_inverse=True)
        merged = np.zeros_like(uniq)
        np.add.at(merged, inverse, p)
        keep = merged > 0.0
        self.energies = uniq[keep]
        self.weights = merged[keep]
        self.energies.setflags(write=False)
        self.weights.setflags(write=False)

    @classmethod
    def from_levels(cls, levels: Iterable[tuple[float, float]],
                    normalize: bool = False) -> "QuantumState":
        pairs = list(levels)
        return cls([e for e, _ in pairs], [p for _, p in pairs], normalize)

    @property
    def n_levels(self) -> int:
        return self.energies.size

    def shift_to_ground(self) -> "QuantumState":
        """Return the state with energies measured from the ground level."""
        return QuantumState(self.energies - self.energies[0], self.weights,
                            normalize=True)

    def __repr__(self) -> str:
        return f"QuantumState({self.n_levels} levels, E_max={self.energies[-1]:.6g} erg)"


@dataclass(frozen=True)
class OverlapValue:
    """Value of the autocorrelation <psi(0)|psi(t)>."""

    re: float
    im: float

    @property
    def abs(self) -> float:
        return math.hypot(self.re, self.im)

    @property
    def abs2(self) -> float:
        return self.re * self.re + self.im * self.im


def _phase_rates(state: QuantumState) -> np.ndarray:
    return state.energies * (math.pi / HBAR)


def overlap(state: QuantumState, t: float) -> OverlapValue:
    """S(t) = sum_n p_n exp(-i pi E_n t / hbar), for t >= 0."""
    if t < 0:
        raise OutOfDomainError("overlap requires t >= 0")
    phases = _phase_rates(state) * t
    s = np.sum(state.weights * np.exp(-1j * phases))
    return OverlapValue(float(s.real), float(s.imag))


def _abs2_on_grid(state: QuantumState, ts: np.ndarray) -> np.ndarray:
    rates = _phase_rates(state)
    s = np.zeros(ts.shape, dtype=complex)
    for rate, p in zip(rates, state.weights):
        s += p * np.exp(-1j * rate * ts)
    return (s.real ** 2 + s.imag ** 2)


def mean_and_spread(state: QuantumState) -> tuple[Quantity, Quantity]:
    """Mean energy and energy spread (both erg)."""
    mean = float(np.dot(state.weights, state.energies))
    var = float(np.dot(state.weights, (state.energies - mean) ** 2))
    return Quantity(mean, ENERGY), Quantity(math.sqrt(max(var, 0.0)), ENERGY)


def bounds(state: QuantumState) -> tuple[Optional[Quantity], Optional[Quantity]]:
    """(t_H, t_ML) = (hbar/(2 dE), hbar/(2 E)); None marks an unbounded time.

    A degenerate denominator (eigenstate dE = 0, or all weight at zero
    energy) yields None rather than an infinity.
    """
    mean, spread = mean_and_spread(state)
    t_h = Quantity(HBAR / (2.0 * spread.value), TIME) if spread.value > 0 else None
    t_ml = Quantity(HBAR / (2.0 * mean.value), TIME) if mean.value > 0 else None
    return t_h, t_ml


class OrthogonalityKind(enum.Enum):
    FOUND_ZERO = "found_zero"
    INFIMUM_ONLY = "infimum_only"
    NEVER_ORTHOGONAL = "never_orthogonal"


@dataclass(frozen=True)
class OrthogonalityResult:
    """Outcome of the first-orthogonality-time search.

    Times are seconds, energies erg.  `heisenberg_bound` and `ml_bound` are
    None when unbounded (degenerate denominator).  For FOUND_ZERO, `t_orth`
    is resolved to 1e-12 relative; for INFIMUM_ONLY, `t_at_min` and
    `min_abs` describe the smallest |S| seen in the scanned window.
    """

    kind: OrthogonalityKind
    t_orth: Optional[float]
    t_at_min: Optional[float]
    min_abs: Optional[float]
    heisenberg_bound: Optional[float]
    ml_bound: Optional[float]
    mean_energy: float
    energy_spread: float

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "t_orth_s": self.t_orth,
            "t_at_min_s": self.t_at_min,
            "min_abs": self.min_abs,
            "heisenberg_bound_s": self.heisenberg_bound,
            "ml_bound_s": self.ml_bound,
            "mean_energy_erg": self.mean_energy,
            "energy_spread_erg": self.energy_spread,
        }


def _golden_minimize(f, a: float, b: float, rel_tol: float = 1e-12,
                     max_iter: int = 200) -> tuple[float, float]:
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if (b - a) <= rel_tol * max(abs(a), abs(b)):
            break
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def first_orthogonality_time(state: QuantumState, t_max: float,
                             abs_tol: float = 1e-9,
                             max_samples: int = 2_000_000) -> OrthogonalityResult:
    """Smallest t > 0 with S(t) = 0, by scan-and-refine.

    |S|^2 is sampled on a grid whose step resolves the fastest phase
    (step <= hbar/(10 pi E_max), about 60 samples per fastest period), local
    minima are bracketed, and each bracket is refined by golden section to
    1e-12 relative in t.  The earliest refined minimum with |S| <= abs_tol is
    reported as FOUND_ZERO; otherwise the smallest |S| seen is reported as
    INFIMUM_ONLY.  Single-level states are NEVER_ORTHOGONAL.
    """
    if not 0.0 < abs_tol <= 1e-3:
        raise OutOfDomainError("abs_tol must be in (0, 1e-3]")
    if t_max <= 0:
        raise ScanSizingError("empty scan window: t_max must be positive")

    mean, spread = mean_and_spread(state)
    t_h, t_ml = bounds(state)
    common = dict(
        heisenberg_bound=None if t_h is None else t_h.value,
        ml_bound=None if t_ml is None else t_ml.value,
        mean_energy=mean.value,
        energy_spread=spread.value,
    )

    if state.n_levels == 1:
        return OrthogonalityResult(kind=OrthogonalityKind.NEVER_ORTHOGONAL,
                                   t_orth=None, t_at_min=None, min_abs=1.0,
                                   **common)

    e_max = float(state.energies[-1])
    step = HBAR / (10.0 * math.pi * e_max)
    n = int(math.ceil(t_max / step)) + 1
    if n > max_samples:
        raise ScanSizingError(
            f"window needs {n} samples to resolve the fastest phase "
            f"(E_max = {e_max:.6g} erg); use t_max <= {max_samples * step:.6g} s "
            f"or raise max_samples")
    n = max(n, 16)
    ts = np.linspace(0.0, t_max, n)
    f2 = _abs2_on_grid(state, ts)

    def f_scalar(t: float) -> float:
        rates = _phase_rates(state)
        s = np.sum(state.weights * np.exp(-1j * rates * t))
        return float(s.real ** 2 + s.imag ** 2)

    best_t, best_f = None, math.inf
    interior = np.flatnonzero((f2[1:-1] <= f2[:-2]) & (f2[1:-1] <= f2[2:])) + 1
    for i in interior:
        t_ref, f_ref = _golden_minimize(f_scalar, ts[i - 1], ts[i + 1])
        if f_ref < best_f:
            best_t, best_f = t_ref, f_ref
        if math.sqrt(f_ref) <= abs_tol:
            return OrthogonalityResult(kind=OrthogonalityKind.FOUND_ZERO,
                                       t_orth=t_ref, t_at_min=t_ref,
                                       min_abs=math.sqrt(f_ref), **common)
    # no zero: fold in grid values (covers minima sitting on the boundary)
    i_grid = int(np.argmin(f2[1:])) + 1
    if f2[i_grid] < best_f:
        best_t, best_f = float(ts[i_grid]), float(f2[i_grid])
    return OrthogonalityResult(kind=OrthogonalityKind.INFIMUM_ONLY,
                               t_orth=None, t_at_min=best_t,
                               min_abs=math.sqrt(best_f), **common)


def ml_certificate(state: QuantumState, t: float) -> BoundReport:
    """Certificate inequality Re S - (2/pi) Im S >= 1 - 2 E t / hbar."""
    if t < 0:
        raise OutOfDomainError("ml_certificate requires t >= 0")
    s = overlap(state, t)
    mean, _ = mean_and_spread(state)
    lhs = Quantity(s.re - (2.0 / math.pi) * s.im, DIMENSIONLESS)
    rhs = Quantity(1.0 - 2.0 * mean.value * t / HBAR, DIMENSIONLESS)
    return BoundReport.check(lhs, rhs, "orthogonality-speed certificate",
                             relation=">=")


def cosine_bound_gap(x):
    """cos x - [1 - (2/pi)(x + sin x)]; nonnegative for x >= 0."""
    x = np.asarray(x, dtype=float)
    return np.cos(x) - (1.0 - (2.0 / math.pi) * (x + np.sin(x)))


def load_state_file(path, energy_unit: str = "erg",
                    normalize: bool = True) -> QuantumState:
    """Read a state from structured text: one `energy weight` pair per line.

    '#' starts a comment; an optional `unit: erg|eV` directive line overrides
    `energy_unit`.  Weights are treated as relative |c_n|^2 and normalized
    unless `normalize=False`.
    """
    unit = energy_unit
    pairs: list[tuple[float, float]] = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.lower().startswith("unit:"):
                unit = line.split(":", 1)[1].strip()
                continue
            fields = line.replace(",", " ").split()
            if len(fields) != 2:
                raise InvalidStateError(
                    f"state file line {line!r}: expected `energy weight`")
            pairs.append((float(fields[0]), float(fields[1])))
    if unit not in ("erg", "eV"):
        raise InvalidStateError(f"unsupported energy unit {unit!r}")
    scale = 1.0 if unit == "erg" else EV_ERG
    return QuantumState.from_levels([(e * scale, p) for e, p in pairs],
                                    normalize=normalize)
