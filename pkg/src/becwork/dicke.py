"""Symmetric states of N two-level bosons (the Dicke ladder) and the
one-boson Schmidt split.

A Dicke ket |n, k> is the permutation-symmetric state of n two-level
bosons with k of them excited: an equal-amplitude superposition of all
C(n, k) product states of Hamming weight k. Splitting one boson off such
a state gives a two-term Schmidt decomposition

    |n, k> = c_ground |n-1, k> |g>  +  c_excited |n-1, k-1> |e>

with c_ground = sqrt((n-k)/n) and c_excited = sqrt(k/n). All amplitudes
are real and non-negative (global-phase convention).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import CapacityError, DomainError

# Largest particle count for which a full 2^n tensor-product embedding is
# produced. The symbolic path (splits, ladder weights) has no such limit.
FULL_SPACE_CAP = 12


@dataclass(frozen=True)
class DickeKet:
    """Symmetric state of ``n_particles`` two-level bosons, ``excitations``
    of which occupy the upper level."""

    n_particles: int
    excitations: int

    def __post_init__(self) -> None:
        if self.n_particles < 1:
            raise DomainError(f"n_particles must be >= 1, got {self.n_particles}")
        if not 0 <= self.excitations <= self.n_particles:
            raise DomainError(
                f"excitations k={self.excitations} violates "
                f"0 <= k <= n={self.n_particles}"
            )


@dataclass(frozen=True)
class ParticleSplit:
    """Schmidt coefficients of one boson against the remaining ensemble.

    ``c_ground`` multiplies |n-1, k> |g>, ``c_excited`` multiplies
    |n-1, k-1> |e>. Both are non-negative and their squares sum to one.
    """

    c_ground: float
    c_excited: float

    def __post_init__(self) -> None:
        if self.c_ground < 0 or self.c_excited < 0:
            raise DomainError("split amplitudes must be non-negative")
        norm = self.c_ground**2 + self.c_excited**2
        if abs(norm - 1.0) > 1e-12:
            raise DomainError(f"split amplitudes must be normalized, got |c|^2 = {norm}")


def make_dicke(n: int, k: int) -> DickeKet:
    """Construct the (n, k) Dicke ket; k = 0 is the collective ground state."""
    return DickeKet(n, k)


def log_binomial(n: int, k: int) -> float:
    """log C(n, k) via log-factorials; overflow-safe for large n."""
    return float(gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1))


def dicke_amplitude(n: int, k: int) -> float:
    """Amplitude 1/sqrt(C(n, k)) carried by each weight-k product state."""
    return math.exp(-0.5 * log_binomial(n, k))


def split_one_particle(state: DickeKet) -> ParticleSplit:
    """Split the last boson off |n, k>.

    Returns c_ground = sqrt((n-k)/n) and c_excited = sqrt(k/n). By
    exchange symmetry the same split holds for any choice of boson; the
    k = 0 state splits trivially as (1, 0).
    """
    n, k = state.n_particles, state.excitations
    if n < 2:
        raise DomainError(f"splitting one boson off needs n >= 2, got n={n}")
    return ParticleSplit(math.sqrt((n - k) / n), math.sqrt(k / n))


def embed_full(state: DickeKet, cap: int = FULL_SPACE_CAP) -> np.ndarray:
    """Embed |n, k> as a 2^n state vector in the full tensor-product space.

    Bit convention: basis index b encodes particle 1 in the most
    significant bit and particle n in the least significant bit; a set bit
    marks an excited boson. Every index of Hamming weight k receives
    amplitude 1/sqrt(C(n, k)).
    """
    n, k = state.n_particles, state.excitations
    if n > cap:
        raise CapacityError(
            f"full-space embedding of n={n} particles exceeds the cap n <= {cap}"
        )
    vec = np.zeros(2**n)
    occupations = np.array([b.bit_count() for b in range(2**n)])
    vec[occupations == k] = dicke_amplitude(n, k)
    return vec
