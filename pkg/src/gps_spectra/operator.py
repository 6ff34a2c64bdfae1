"""Assembly of the discrete Hamiltonian on the mapped interior grid.

Only interior nodes enter the matrix, which imposes psi(0) = psi(r_max) = 0.
The kinetic part is the symmetrized second-derivative matrix; the diagonal
carries the effective potential.  The assembled matrix is symmetric bitwise,
not merely to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .collocation import CollocationGrid, MapParams, map_point
from .model import GSHOParams


@dataclass(frozen=True)
class SpectralHamiltonian:
    """Dense symmetric (N-1) x (N-1) Hamiltonian with its construction context."""

    dim: int
    entries: np.ndarray
    grid: CollocationGrid
    map_params: MapParams
    potential: GSHOParams
    ell: int


def second_derivative_matrix(g: CollocationGrid, m: MapParams) -> np.ndarray:
    """Symmetrized second-derivative matrix over the interior nodes.

    Off-diagonal: D_ij = -2 / [r'_i (x_i - x_j)^2 r'_j]; diagonal:
    D_ii = -N(N+1) / [3 r'_i^2 (1 - x_i^2)].  Indices run over the interior
    nodes 1..N-1.  Returned matrix is exactly symmetric.
    """
    N = g.order
    if N < 2:
        raise ValueError(f"grid order must be at least 2, got {N}")
    x = g.nodes[1:N]
    _, rprime = map_point(m, x)

    dx = x[:, None] - x[None, :]
    np.fill_diagonal(dx, 1.0)  # placeholder, diagonal overwritten below
    D = -2.0 / (np.outer(rprime, rprime) * dx**2)
    np.fill_diagonal(D, -N * (N + 1) / (3.0 * rprime**2 * (1.0 - x * x)))
    return D


def assemble_hamiltonian(
    g: CollocationGrid, m: MapParams, p: GSHOParams, ell: int
) -> SpectralHamiltonian:
    """Assemble H = -1/2 D + diag(u) with u_i = l(l+1)/(2 r_i^2) + v(r_i)/2."""
    if ell < 0:
        raise ValueError(f"ell must be >= 0, got {ell}")
    N = g.order
    x = g.nodes[1:N]
    r, _ = map_point(m, x)

    # interior nodes all have r > 0, so the vectorized potential is safe
    v = r * r + p.A / (r * r) + p.lam / r**p.alpha
    u = ell * (ell + 1) / (2.0 * r * r) + 0.5 * v
    H = -0.5 * second_derivative_matrix(g, m)
    H[np.diag_indices_from(H)] += u
    return SpectralHamiltonian(
        dim=N - 1, entries=H, grid=g, map_params=m, potential=p, ell=ell
    )
