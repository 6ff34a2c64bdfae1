"""Dense real-symmetric eigensolution with a fixed ordering and sign convention."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ConvergenceError


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues and, optionally, matching orthonormal column vectors."""

    values: np.ndarray
    vectors: np.ndarray | None = None


def eigh(M: np.ndarray, want_vectors: bool = True) -> EigenDecomposition:
    """Full spectrum of a symmetric matrix, ascending.

    The input must be exactly symmetric (the assembly routines guarantee
    this bitwise).  Eigenvector signs are fixed by making the component of
    largest magnitude positive, so repeated calls are reproducible.

    Raises
    ------
    ValueError
        If M is not square, empty, or not exactly symmetric.
    ConvergenceError
        If the underlying QL/QR iteration fails.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise ValueError(f"expected a square matrix of dim >= 1, got shape {M.shape}")
    if not np.array_equal(M, M.T):
        raise ValueError("matrix is not symmetric")

    # The QL/QR driver keeps absolute accuracy in the small eigenvalues of
    # strongly graded matrices (diagonals spanning ~18 decades occur here);
    # the divide-and-conquer and MRRR drivers lose it.
    try:
        if not want_vectors:
            values = scipy.linalg.eigh(M, eigvals_only=True, driver="ev")
            return EigenDecomposition(values=values)
        values, vectors = scipy.linalg.eigh(M, driver="ev")
    except scipy.linalg.LinAlgError as exc:
        raise ConvergenceError(f"symmetric eigensolver failed: {exc}") from exc

    for k in range(vectors.shape[1]):
        lead = np.argmax(np.abs(vectors[:, k]))
        if vectors[lead, k] < 0.0:
            vectors[:, k] = -vectors[:, k]
    return EigenDecomposition(values=values, vectors=vectors)
