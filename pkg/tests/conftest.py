import functools

import pytest

from gps_spectra import GSHOParams, NumericsConfig, solve_states
from gps_spectra.shooting import ShootingConfig, numerov_energy


@pytest.fixture(scope="session")
def solve_cached():
    """Memoized solver shared across the suite; most tests reuse a few configs."""

    @functools.lru_cache(maxsize=None)
    def solve(A, lam, alpha, ell, k, N=200, r_max=300.0, L=25.0):
        cfg = NumericsConfig(N=N, r_max=r_max, L=L, k=k)
        return tuple(solve_states(GSHOParams(A, lam, alpha), ell, cfg))

    return solve


@pytest.fixture(scope="session")
def numerov_cached():
    @functools.lru_cache(maxsize=None)
    def shoot(A, lam, alpha, ell, n, h=1e-3):
        return numerov_energy(GSHOParams(A, lam, alpha), ell, n, ShootingConfig(h=h))

    return shoot


# reference set T1: (lam, ell) -> (E1, E2) at A=12, alpha=4
TABLE1 = {
    (0.001, 0): (4.50005713955, 6.50008253170),
    (0.001, 1): (4.77496494795, 6.77498493821),
    (0.001, 2): (5.27203764224, 7.27205121112),
    (0.001, 3): (5.92445477296, 7.92446350670),
    (0.01, 0): (4.50057109969, 6.50082460262),
    (0.01, 1): (4.77539434151, 6.77559400403),
    (0.01, 2): (5.27235948689, 7.27249507610),
    (0.01, 3): (5.92468758726, 7.92477488725),
    (0.1, 0): (4.50568201308, 6.50817676852),
    (0.1, 1): (4.77967076076, 6.78164398019),
    (0.1, 2): (5.27556990359, 7.27691597471),
    (0.1, 3): (5.92701233962, 7.92788162240),
    (1.0, 0): (4.55432930375, 6.57618592946),
    (1.0, 1): (4.82086660209, 6.83867710911),
    (1.0, 2): (5.30692177482, 7.31951196183),
    (1.0, 3): (5.94993288816, 7.95827867190),
    (10.0, 0): (4.91961566042, 7.03453114315),
    (10.0, 1): (5.14553963970, 7.24781484749),
    (10.0, 2): (5.57091626978, 7.65332837563),
    (10.0, 3): (6.15427959467, 8.21617552368),
    (100.0, 0): (6.54544524211, 8.81244551008),
    (100.0, 1): (6.68956373653, 8.94633479206),
    (100.0, 2): (6.9715527505, 9.2093889489),
    (100.0, 3): (7.37986452167, 9.59269153472),
}
