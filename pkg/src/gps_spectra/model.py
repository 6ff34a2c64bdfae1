"""Generalized spiked harmonic oscillator potential family.

The radial potential is v(r) = r^2 + A/r^2 + lambda/r^alpha with A >= 0,
lambda >= 0, alpha > 0.  The radial equation solved downstream is

    [-1/2 d^2/dr^2 + l(l+1)/(2 r^2) + v(r)/2] psi = E psi,

so energies follow the V = v/2 convention.  At lambda = 0 the A/r^2 term
folds into the centrifugal term and the spectrum is that of an isotropic
oscillator with a non-integer effective angular momentum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class GSHOParams:
    """Potential triple (A, lam, alpha), all in atomic units."""

    A: float
    lam: float
    alpha: float

    def __post_init__(self):
        if self.A < 0.0:
            raise ValueError(f"inverse-square coupling A must be >= 0, got {self.A}")
        if self.lam < 0.0:
            raise ValueError(f"spike strength lambda must be >= 0, got {self.lam}")
        if self.alpha <= 0.0:
            raise ValueError(f"spike exponent alpha must be > 0, got {self.alpha}")


@dataclass(frozen=True)
class StateLabel:
    """Radial quantum number n (counts interior nodes) and angular momentum ell."""

    n: int
    ell: int

    def __post_init__(self):
        if self.n < 0 or self.ell < 0:
            raise ValueError(f"quantum numbers must be nonnegative, got n={self.n}, ell={self.ell}")


def gsho_v(p: GSHOParams, r: float) -> float:
    """The bare potential v(r) = r^2 + A/r^2 + lambda/r^alpha, singular at r = 0."""
    if r <= 0.0:
        raise ValueError(f"potential is singular at the origin; need r > 0, got {r}")
    return r * r + p.A / (r * r) + p.lam / r**p.alpha


def effective_potential(p: GSHOParams, ell: int, r: float) -> float:
    """Effective radial potential l(l+1)/(2 r^2) + v(r)/2."""
    if ell < 0:
        raise ValueError(f"ell must be >= 0, got {ell}")
    if r <= 0.0:
        raise ValueError(f"potential is singular at the origin; need r > 0, got {r}")
    return ell * (ell + 1) / (2.0 * r * r) + 0.5 * gsho_v(p, r)


def effective_ell(A: float, ell: int) -> float:
    """Effective angular momentum: the root of l'(l'+1) = l(l+1) + A."""
    if A < 0.0:
        raise ValueError(f"A must be >= 0, got {A}")
    if ell < 0:
        raise ValueError(f"ell must be >= 0, got {ell}")
    return 0.5 * (-1.0 + math.sqrt(1.0 + 4.0 * (ell * (ell + 1) + A)))


def analytic_energy_lambda0(A: float, ell: int, n: int) -> float:
    """Exact eigenvalue 2n + l' + 3/2 of the lambda = 0 problem."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return 2.0 * n + effective_ell(A, ell) + 1.5
