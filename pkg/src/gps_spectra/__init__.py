"""Spectral bound-state solver for generalized spiked harmonic oscillators."""

from .collocation import CollocationGrid, MapParams, legendre_eval, lgl_grid, make_map, map_point
from .eigen import EigenDecomposition, eigh
from .errors import BracketError, ConvergenceError, NodeCountError
from .model import (
    GSHOParams,
    StateLabel,
    analytic_energy_lambda0,
    effective_ell,
    effective_potential,
    gsho_v,
)
from .operator import SpectralHamiltonian, assemble_hamiltonian, second_derivative_matrix
from .spectrum import (
    BoundState,
    ConvergenceScan,
    NumericsConfig,
    convergence_scan,
    count_nodes,
    density_peak,
    expectation_r_power,
    hellmann_feynman_residual,
    psi_at,
    radial_density,
    solve_states,
)

__version__ = "0.1.0"

__all__ = [
    "BoundState",
    "BracketError",
    "CollocationGrid",
    "ConvergenceError",
    "ConvergenceScan",
    "EigenDecomposition",
    "GSHOParams",
    "MapParams",
    "NodeCountError",
    "NumericsConfig",
    "SpectralHamiltonian",
    "StateLabel",
    "analytic_energy_lambda0",
    "assemble_hamiltonian",
    "convergence_scan",
    "count_nodes",
    "density_peak",
    "effective_ell",
    "effective_potential",
    "eigh",
    "expectation_r_power",
    "gsho_v",
    "hellmann_feynman_residual",
    "legendre_eval",
    "lgl_grid",
    "make_map",
    "map_point",
    "psi_at",
    "radial_density",
    "second_derivative_matrix",
    "solve_states",
    "__version__",
]
