"""Embedded reference values used by the verify harness.

Energies are grouped by source table: T1 (A=12, alpha=4, two states for each
of ell=0..3 at six spike strengths, with published lower/upper bounds for
four of the ell=0 ground states), T2 (a parameter sweep over lambda, A, ell
at alpha=4 and 6), and T3 (expectation values <1/r> and <r> at A=20).
Values are truncated, not rounded, at the last printed digit.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ReferenceEntry:
    """One reference value: an energy (power is None) or an <r^power> moment."""

    source: str
    A: float
    lam: float
    alpha: float
    ell: int
    n: int
    value: float
    power: float | None = None
    bound_lo: float | None = None
    bound_hi: float | None = None

    def __post_init__(self):
        if (self.bound_lo is None) != (self.bound_hi is None):
            raise ValueError("bounds must be given as a pair")
        if self.bound_lo is not None and not self.bound_lo < self.bound_hi:
            raise ValueError(f"bounds out of order: {self.bound_lo}, {self.bound_hi}")


# T1: (lam, ell) -> (E1, E2) at A=12, alpha=4
_T1 = {
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

# third-order perturbation bounds for the ell=0 ground state, small lambda
_T1_BOUNDS = {
    0.001: (4.5000571155, 4.5000571635),
    0.01: (4.5005687045, 4.5005734945),
    0.1: (4.5054425485, 4.5059217125),
    1.0: (4.5306226410, 4.5786886205),
}

# T2: (lam, A, ell) -> ((E1, E2) at alpha=4, (E1, E2) at alpha=6)
_T2 = {
    (0.005, 5.0, 0): ((3.29213042081, 5.29263961857), (3.29301057259, 5.29560957327)),
    (0.005, 15.0, 0): ((4.90534516173, 6.90543495986), (4.90524031751, 6.90538113434)),
    (0.005, 25.0, 0): ((6.02506141110, 8.02510243449), (6.02497866843, 8.02501934461)),
    (0.5, 5.0, 1): ((3.74338802444, 5.76740985617), (3.73736635296, 5.78462712272)),
    (0.5, 15.0, 1): ((5.17214026739, 7.17923504322), (5.16180870804, 7.17100250031)),
    (0.5, 25.0, 1): ((6.23143489376, 8.23501549308), (6.22364595141, 8.22695053203)),
    (5.0, 5.0, 2): ((4.60929429358, 6.69135284445), (4.49045054121, 6.59803098276)),
    (5.0, 15.0, 2): ((5.74836543195, 7.79050612724), (5.66024910570, 7.70391813910)),
    (5.0, 25.0, 2): ((6.68350815067, 8.70939627752), (6.61603417371, 8.63746955793)),
    (50.0, 5.0, 3): ((6.25457661591, 8.44871213892), (5.57496724850, 7.79410043287)),
    (50.0, 15.0, 3): ((7.03078249009, 9.18083908970), (6.46642800655, 8.61050093425)),
    (50.0, 25.0, 3): ((7.74063452037, 9.85964537843), (7.26355121587, 9.36136024083)),
}

# T3: (lam, alpha, n) -> (<r^-1>, <r>) at A=20, ell=0
_T3 = {
    (1.0, 4.0, 0): (0.455313939, 2.30630576),
    (1.0, 4.0, 1): (0.433586990, 2.62193026),
    (10.0, 4.0, 0): (0.434300669, 2.40340664),
    (10.0, 4.0, 1): (0.409762190, 2.72989436),
    (1.0, 6.0, 0): (0.456468262, 2.300730227),
    (1.0, 6.0, 1): (0.433801832, 2.619954805),
    (10.0, 6.0, 0): (0.444230432, 2.353215494),
    (10.0, 6.0, 1): (0.415474164, 2.697640059),
}


def _build() -> tuple[ReferenceEntry, ...]:
    entries = []
    for (lam, ell), energies in _T1.items():
        for n, value in enumerate(energies):
            lo, hi = (None, None)
            if ell == 0 and n == 0 and lam in _T1_BOUNDS:
                lo, hi = _T1_BOUNDS[lam]
            entries.append(
                ReferenceEntry("T1", 12.0, lam, 4.0, ell, n, value, bound_lo=lo, bound_hi=hi)
            )
    for (lam, A, ell), (alpha4, alpha6) in _T2.items():
        for alpha, pair in ((4.0, alpha4), (6.0, alpha6)):
            for n, value in enumerate(pair):
                entries.append(ReferenceEntry("T2", A, lam, alpha, ell, n, value))
    for (lam, alpha, n), (r_inv, r_mean) in _T3.items():
        entries.append(ReferenceEntry("T3", 20.0, lam, alpha, 0, n, r_inv, power=-1.0))
        entries.append(ReferenceEntry("T3", 20.0, lam, alpha, 0, n, r_mean, power=1.0))
    return tuple(entries)


ENTRIES: tuple[ReferenceEntry, ...] = _build()


def select(source: str) -> tuple[ReferenceEntry, ...]:
    """Entries of one table ('T1' | 'T2' | 'T3') or those carrying bounds ('bounds')."""
    if source == "bounds":
        return tuple(e for e in ENTRIES if e.bound_lo is not None)
    matching = tuple(e for e in ENTRIES if e.source == source)
    if not matching:
        raise ValueError(f"unknown reference source {source!r}")
    return matching
