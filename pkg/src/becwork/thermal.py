"""Thermal states on the Dicke ladder and their entropies.

The condensate is modelled as a single symmetric excitation ladder:
level k holds k quanta of the level spacing omega_eg and carries
Boltzmann weight x^k with x = exp(-beta_tilde), beta_tilde the
dimensionless inverse temperature. x is the bare Boltzmann factor;
normalized occupation probabilities are x^k / P_tot.

Entropies use the standard sign convention S = -sum w ln w >= 0 (units
of k_B) and are reported dimensionless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

_WEIGHT_TOL = 1e-12


@dataclass(frozen=True)
class ThermalParams:
    """Bath and spectrum parameters.

    beta_tilde is hbar*omega_eg / (k_B T); beta_tilde = 0 is admitted as
    the degenerate (infinite-temperature) limit, though work extraction
    is undefined there. k_max truncates the excitation ladder.
    """

    beta_tilde: float
    omega_eg: float = 1.0
    k_max: int = 1

    def __post_init__(self) -> None:
        if self.beta_tilde < 0:
            raise DomainError(f"beta_tilde must be >= 0, got {self.beta_tilde}")
        if self.omega_eg <= 0:
            raise DomainError(f"omega_eg must be > 0, got {self.omega_eg}")
        if self.k_max < 1:
            raise DomainError(f"k_max must be >= 1, got {self.k_max}")


@dataclass(frozen=True)
class SymmetricDensity:
    """Diagonal density operator on the Dicke ladder of n_particles bosons.

    weights[k] is the population of ladder level k. Weights are
    non-negative, sum to one, and the top level cannot exceed the
    particle count.
    """

    n_particles: int
    weights: np.ndarray

    def __post_init__(self) -> None:
        w = np.asarray(self.weights, dtype=float)
        w = w.copy()
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)
        if self.n_particles < 1:
            raise DomainError(f"n_particles must be >= 1, got {self.n_particles}")
        if w.ndim != 1 or w.size < 1:
            raise DomainError("weights must be a non-empty 1-d array")
        if w.size - 1 > self.n_particles:
            raise DomainError(
                f"ladder has {w.size - 1} excitations but only "
                f"{self.n_particles} particles"
            )
        if np.any(w < 0):
            raise DomainError("weights must be non-negative")
        total = float(w.sum())
        if abs(total - 1.0) > _WEIGHT_TOL:
            raise DomainError(f"weights must sum to 1, got {total}")

    @property
    def k_max(self) -> int:
        return self.weights.size - 1


def occupation_x(params: ThermalParams) -> tuple[float, float]:
    """Boltzmann factor x = exp(-beta_tilde) and ladder normalization
    P_tot = sum_{k=0}^{k_max} x^k (equals 1 + x for k_max = 1)."""
    x = math.exp(-params.beta_tilde)
    p_tot = float(sum(x**k for k in range(params.k_max + 1)))
    return x, p_tot


def thermal_state(n: int, params: ThermalParams) -> SymmetricDensity:
    """Thermal density operator of n bosons on the truncated ladder.

    Level k carries weight x^k / P_tot. The ladder is capped at
    min(k_max, n) since n two-level bosons support at most n excitations.
    """
    if n < 1:
        raise DomainError(f"thermal state needs n >= 1 particles, got {n}")
    x = math.exp(-params.beta_tilde)
    k_top = min(params.k_max, n)
    w = np.array([x**k for k in range(k_top + 1)])
    return SymmetricDensity(n, w / w.sum())


def mean_excitations(rho: SymmetricDensity) -> float:
    """Mean number of ladder quanta, sum_k w_k * k."""
    return float(np.dot(rho.weights, np.arange(rho.weights.size)))


def mean_energy(rho: SymmetricDensity, params: ThermalParams) -> float:
    """Mean energy sum_k w_k * k * omega_eg."""
    return mean_excitations(rho) * params.omega_eg


def von_neumann_entropy(rho: SymmetricDensity) -> float:
    """Entropy -sum_k w_k ln w_k (k_B units), with 0 ln 0 = 0."""
    w = rho.weights[rho.weights > 0]
    return float(-(w * np.log(w)).sum())


def entropy_low_t_approx(x: float, beta_tilde: float) -> float:
    """Leading low-temperature entropy x * beta_tilde (the dominant
    x ln(1/x) term of the two-level thermal entropy)."""
    return x * beta_tilde


def photon_nbar(beta_tilde: float) -> float:
    """Bose-Einstein mean occupation 1 / (e^beta_tilde - 1) of a single
    mode; diverges as beta_tilde -> 0."""
    if beta_tilde <= 0:
        raise DomainError(
            f"photon_nbar diverges for beta_tilde <= 0, got {beta_tilde}"
        )
    return 1.0 / math.expm1(beta_tilde)
