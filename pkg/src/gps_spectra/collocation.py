"""Legendre-Gauss-Lobatto collocation grids and the rational map to [0, r_max].

The grid on [-1, 1] consists of the endpoints plus the roots of P'_N, found
by Newton iteration from Chebyshev seeds.  The semi-infinite radial domain is
truncated at r_max and reached through the algebraic map

    r(x) = L (1 + x) / (1 - x + gamma),      gamma = 2 L / r_max,

which concentrates nodes at small r for gamma < 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError

_NEWTON_TOL = 1e-15
_NEWTON_MAX_ITER = 100


@dataclass(frozen=True)
class CollocationGrid:
    """LGL collocation grid of order N: N+1 nodes including both endpoints.

    Attributes
    ----------
    order : int
        Polynomial order N; the grid has N+1 nodes.
    nodes : np.ndarray
        Ascending nodes x_0 = -1 < x_1 < ... < x_N = 1.
    pn_values : np.ndarray
        P_N evaluated at each node.
    weights : np.ndarray
        Quadrature weights w_j = 2 / [N (N+1) P_N(x_j)^2]; exact for
        polynomials of degree <= 2N - 1.
    """

    order: int
    nodes: np.ndarray
    pn_values: np.ndarray
    weights: np.ndarray


@dataclass(frozen=True)
class MapParams:
    """Parameters of the rational map of [-1, 1] onto [0, r_max] (a.u.)."""

    L: float
    r_max: float
    gamma: float


def legendre_eval(N: int, x: float) -> tuple[float, float, float]:
    """Evaluate P_N(x), P'_N(x) and P''_N(x) for a single point.

    Uses the three-term recurrence for P_N and the differential relation
    (1 - x^2) P''_N = 2 x P'_N - N (N + 1) P_N, with analytic limits at the
    endpoints where the relation degenerates.

    Raises
    ------
    ValueError
        If |x| > 1.
    """
    if N < 0:
        raise ValueError(f"polynomial degree must be nonnegative, got {N}")
    if abs(x) > 1.0:
        raise ValueError(f"x must lie in [-1, 1], got {x}")
    if N == 0:
        return 1.0, 0.0, 0.0
    if N == 1:
        return float(x), 1.0, 0.0

    p_prev, p = 1.0, float(x)
    for k in range(2, N + 1):
        p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k

    if abs(x) == 1.0:
        # endpoint limits: P'_N(+-1) and P''_N(+-1) in closed form
        s = 1.0 if x > 0 else (-1.0) ** (N - 1)
        dp = s * N * (N + 1) / 2.0
        d2p = (x * s) * (N * (N + 1) - 2) * N * (N + 1) / 8.0
        return p, dp, d2p

    one_m_x2 = (1.0 - x) * (1.0 + x)
    dp = N * (p_prev - x * p) / one_m_x2
    d2p = (2.0 * x * dp - N * (N + 1) * p) / one_m_x2
    return p, dp, d2p


def _legendre_arrays(N: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized (P_N, P'_N, P''_N) for strictly interior points."""
    p_prev = np.ones_like(x)
    p = x.copy()
    for k in range(2, N + 1):
        p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k
    one_m_x2 = (1.0 - x) * (1.0 + x)
    dp = N * (p_prev - x * p) / one_m_x2
    d2p = (2.0 * x * dp - N * (N + 1) * p) / one_m_x2
    return p, dp, d2p


@lru_cache(maxsize=64)
def lgl_grid(N: int) -> CollocationGrid:
    """Build the order-N Legendre-Gauss-Lobatto grid.

    Interior nodes are the roots of P'_N, located by Newton iteration from
    the seeds -cos(pi j / N); interlacing of the seeds with the roots makes
    the iteration safe for all practical N.  Nodes are symmetrized about 0
    after convergence so that x_j = -x_{N-j} holds exactly.

    Raises
    ------
    ConvergenceError
        If Newton does not converge within the iteration cap (does not
        happen for N <= 2000).
    ValueError
        If N < 2.
    """
    if N < 2:
        raise ValueError(f"grid order must be at least 2, got {N}")

    j = np.arange(1, N)
    x = -np.cos(np.pi * j / N)
    for _ in range(_NEWTON_MAX_ITER):
        _, dp, d2p = _legendre_arrays(N, x)
        step = dp / d2p
        x -= step
        np.clip(x, -1.0 + 1e-12, 1.0 - 1e-12, out=x)
        if np.max(np.abs(step)) < _NEWTON_TOL:
            break
    else:
        raise ConvergenceError(
            f"Newton iteration for the interior LGL nodes did not converge at N={N}"
        )

    # enforce exact symmetry about the origin
    x = 0.5 * (x - x[::-1])

    nodes = np.concatenate(([-1.0], x, [1.0]))
    pn = np.empty(N + 1)
    pn[0] = (-1.0) ** N
    pn[N] = 1.0
    pn[1:N] = _legendre_arrays(N, x)[0]
    weights = 2.0 / (N * (N + 1) * pn**2)

    for arr in (nodes, pn, weights):
        arr.setflags(write=False)
    return CollocationGrid(order=N, nodes=nodes, pn_values=pn, weights=weights)


def make_map(L: float, r_max: float) -> MapParams:
    """Create map parameters with gamma = 2 L / r_max.

    Raises
    ------
    ValueError
        If L or r_max is not positive.
    """
    if L <= 0.0:
        raise ValueError(f"map scale L must be positive, got {L}")
    if r_max <= 0.0:
        raise ValueError(f"truncation radius r_max must be positive, got {r_max}")
    return MapParams(L=float(L), r_max=float(r_max), gamma=2.0 * L / r_max)


def map_point(m: MapParams, x):
    """Map x in [-1, 1] to (r, dr/dx).

    r(-1) = 0 and r(+1) = r_max hold exactly; the map is strictly increasing
    with r'(x) = L (2 + gamma) / (1 - x + gamma)^2 > 0.
    """
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0):
        raise ValueError("map argument must lie in [-1, 1]")
    denom = 1.0 - x + m.gamma
    r = np.where(x == 1.0, m.r_max, m.L * (1.0 + x) / denom)
    rprime = m.L * (2.0 + m.gamma) / denom**2
    if x.ndim == 0:
        return float(r), float(rprime)
    return r, rprime
