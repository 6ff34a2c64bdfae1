"""Numerov shooting integrator, an independent cross-check on the spectral solver.

Integrates psi'' = [l(l+1)/r^2 + v(r) - 2E] psi outward from near the origin
and inward from a truncation radius on a uniform mesh, and matches the two
solutions at the outermost classical turning point.  Eigenvalues are located
as sign changes of the scaled Wronskian while scanning the energy upward,
then refined by bisection plus secant steps.  A Richardson step over mesh
spacings h and h/2 removes the leading O(h^4) error of the recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BracketError
from .model import GSHOParams, effective_ell

_SCAN_STEP = 0.1
_SCAN_SPAN = 60.0
_RENORM_AT = 1e200
_RENORM_BY = 1e-200


@dataclass(frozen=True)
class ShootingConfig:
    """Mesh and tolerance parameters for the shooting integration (a.u.)."""

    r_min: float = 1e-6
    r_end: float = 20.0
    h: float = 1e-3
    e_tol: float = 1e-10

    def __post_init__(self):
        if not (0.0 < self.r_min < self.r_end):
            raise ValueError(f"need 0 < r_min < r_end, got {self.r_min}, {self.r_end}")
        if self.h <= 0.0 or self.e_tol <= 0.0:
            raise ValueError("h and e_tol must be positive")


class _Mesh:
    """Uniform mesh carrying the E-independent part of the Numerov coefficients."""

    def __init__(self, p: GSHOParams, ell: int, r_min: float, r_end: float, h: float):
        npts = int(round((r_end - r_min) / h)) + 1
        r = r_min + h * np.arange(npts)
        v2 = ell * (ell + 1) / r**2 + r**2 + p.A / r**2 + p.lam / r**p.alpha
        self.h = h
        self.npts = npts
        self.r = r
        self.v2 = v2
        # T_i = h^2 (v2_i - 2E) / 12 splits into this list minus h^2 E / 6
        self.t_base = (h * h / 12.0 * v2).tolist()
        self.e_floor = 0.5 * float(v2.min())
        self.start_power = effective_ell(p.A, ell) + 1.0

    def _match_index(self, energy: float) -> int:
        allowed = np.nonzero(self.v2 <= 2.0 * energy)[0]
        m = int(allowed[-1]) if allowed.size else int(np.argmin(self.v2))
        return min(max(m, 2), self.npts - 3)

    def _outward(self, et: float, m: int) -> tuple[float, float, float]:
        """psi at indices (m-1, m, m+1), up to a positive scale."""
        t = self.t_base
        pa = self.r[0] ** self.start_power
        pb = self.r[1] ** self.start_power
        if pb == 0.0:  # seed underflowed (very steep start); any tiny seed works
            pa, pb = 0.0, 1e-300
        for i in range(1, m + 1):
            pc = (2.0 * (1.0 + 5.0 * (t[i] - et)) * pb - (1.0 - (t[i - 1] - et)) * pa) / (
                1.0 - (t[i + 1] - et)
            )
            if abs(pc) > _RENORM_AT:
                pa *= _RENORM_BY
                pb *= _RENORM_BY
                pc *= _RENORM_BY
            if i == m:
                return pa, pb, pc
            pa, pb = pb, pc
        raise AssertionError("unreachable: match index below 1")

    def _inward(self, et: float, energy: float, m: int) -> tuple[float, float, float]:
        """psi at indices (m-1, m, m+1) from a decaying start at the outer edge."""
        t = self.t_base
        last = self.npts - 1
        kappa = np.sqrt(max(self.v2[last] - 2.0 * energy, 0.0))
        pb = 1e-20
        pa = pb * np.exp(kappa * self.h)  # psi grows toward smaller r
        # state: (pb, pa) = psi at (i+1, i)
        for i in range(last - 1, m - 1, -1):
            pc = (2.0 * (1.0 + 5.0 * (t[i] - et)) * pa - (1.0 - (t[i + 1] - et)) * pb) / (
                1.0 - (t[i - 1] - et)
            )
            if abs(pc) > _RENORM_AT:
                pa *= _RENORM_BY
                pb *= _RENORM_BY
                pc *= _RENORM_BY
            if i == m:
                return pc, pa, pb
            pb, pa = pa, pc
        raise AssertionError("unreachable: match index above npts-2")

    def _derivative(self, triple: tuple[float, float, float], et: float, m: int) -> float:
        """Numerov-consistent first derivative at the match index, O(h^4)."""
        t = self.t_base
        lo, _, hi = triple
        tlo = t[m - 1] - et
        thi = t[m + 1] - et
        return (hi * (1.0 - 2.0 * thi) - lo * (1.0 - 2.0 * tlo)) / (2.0 * self.h)

    def matching(self, energy: float) -> float:
        """Scaled Wronskian of the outward and inward solutions at the match point.

        Continuous in E and zero exactly at eigenvalues of the truncated
        boundary problem; the scaling is positive so sign changes are
        preserved.
        """
        et = self.h * self.h * energy / 6.0
        m = self._match_index(energy)
        out = self._outward(et, m)
        inw = self._inward(et, energy, m)
        w = self._derivative(out, et, m) * inw[1] - out[1] * self._derivative(inw, et, m)
        scale = max(abs(v) for v in out) * max(abs(v) for v in inw)
        return w / scale


def _refine(mesh: _Mesh, a: float, b: float, fa: float, fb: float, e_tol: float) -> float:
    """Root of the matching function inside a sign-change bracket."""
    while b - a > 1e-6:
        mid = 0.5 * (a + b)
        fm = mesh.matching(mid)
        if fm == 0.0:
            return mid
        if (fa < 0.0) != (fm < 0.0):
            b, fb = mid, fm
        else:
            a, fa = mid, fm
    # secant polish inside the bracket, falling back to bisection steps
    for _ in range(80):
        if b - a <= e_tol:
            break
        denom = fb - fa
        mid = b - fb * (b - a) / denom if denom != 0.0 else 0.5 * (a + b)
        if not (a < mid < b):
            mid = 0.5 * (a + b)
        fm = mesh.matching(mid)
        if fm == 0.0:
            return mid
        if (fa < 0.0) != (fm < 0.0):
            b, fb = mid, fm
        else:
            a, fa = mid, fm
    return 0.5 * (a + b)


def _locate(mesh: _Mesh, n: int, e_tol: float) -> float:
    """Scan upward from the potential minimum and refine the (n+1)-th bracket."""
    e_lo = mesh.e_floor
    e = e_lo
    f_prev = mesh.matching(e)
    found = 0
    while e < e_lo + _SCAN_SPAN:
        e_next = e + _SCAN_STEP
        f_next = mesh.matching(e_next)
        if (f_prev < 0.0) != (f_next < 0.0):
            if found == n:
                return _refine(mesh, e, e_next, f_prev, f_next, e_tol)
            found += 1
        e, f_prev = e_next, f_next
    raise BracketError(
        f"only {found} matching-function sign changes in E window "
        f"[{e_lo:.6f}, {e_lo + _SCAN_SPAN:.6f}], needed {n + 1}"
    )


def _refine_near(mesh: _Mesh, center: float, e_tol: float) -> float:
    """Re-refine an eigenvalue on a finer mesh, widening the bracket as needed."""
    width = 1e-5
    while width <= 0.2:
        a, b = center - width, center + width
        fa, fb = mesh.matching(a), mesh.matching(b)
        if (fa < 0.0) != (fb < 0.0):
            return _refine(mesh, a, b, fa, fb, e_tol)
        width *= 10.0
    raise BracketError(
        f"no sign change within 0.2 of E={center:.9f} on the refined mesh"
    )


def numerov_energy(p: GSHOParams, ell: int, n: int, cfg: ShootingConfig | None = None) -> float:
    """Eigenvalue of state (n, ell) by shooting, Richardson-extrapolated over h, h/2.

    Raises
    ------
    BracketError
        If the energy scan does not find enough sign changes of the matching
        function (state not contained in the window or mesh too coarse).
    """
    if n < 0 or ell < 0:
        raise ValueError(f"quantum numbers must be nonnegative, got n={n}, ell={ell}")
    if cfg is None:
        cfg = ShootingConfig()
    coarse = _Mesh(p, ell, cfg.r_min, cfg.r_end, cfg.h)
    e_coarse = _locate(coarse, n, cfg.e_tol)
    fine = _Mesh(p, ell, cfg.r_min, cfg.r_end, 0.5 * cfg.h)
    e_fine = _refine_near(fine, e_coarse, cfg.e_tol)
    return e_fine + (e_fine - e_coarse) / 15.0
