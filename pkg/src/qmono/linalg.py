"""Dense complex linear algebra and entropies for small (dim <= 64) matrices.

Everything here operates on plain numpy arrays. Logarithms are base 2
throughout so that all correlation measures built on top are normalized to 1
on the two-qubit maximally entangled state.
"""

import numpy as np

__all__ = [
    "EigenSystem",
    "hermitian_eigensystem",
    "psd_sqrt",
    "von_neumann_entropy",
    "binary_entropy",
    "trace_norm_hermitian",
]

HERM_TOL = 1e-10       # max |M - M^dag| accepted as Hermitian
EIG_REJECT = 1e-8      # eigenvalues below -EIG_REJECT mean the input is not PSD
TRACE_TOL = 1e-8
ENTROPY_CUTOFF = 1e-14  # eigenvalues below this contribute 0 to entropies


class EigenSystem:
    """Spectrum of a Hermitian matrix, eigenvalues sorted non-increasing.

    ``values[k]`` belongs to the orthonormal column ``vectors[:, k]``.
    """

    __slots__ = ("values", "vectors")

    def __init__(self, values, vectors):
        self.values = values
        self.vectors = vectors

    def reconstruct(self):
        """V diag(values) V^dag."""
        return (self.vectors * self.values) @ self.vectors.conj().T


def _check_hermitian(m, tol=HERM_TOL):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    dev = np.abs(m - m.conj().T).max()
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian: max|M - M^dag| = {dev:.3e}")
    return m


def hermitian_eigensystem(m):
    """Full spectrum and orthonormal eigenvectors of a Hermitian matrix.

    Eigenvalues are returned in non-increasing order. Rejects input whose
    Hermiticity deviation exceeds 1e-10.
    """
    m = _check_hermitian(m)
    vals, vecs = np.linalg.eigh(m)
    return EigenSystem(vals[::-1].copy(), vecs[:, ::-1].copy())


def psd_sqrt(m):
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues in [-1e-10, 0) are clamped to 0; anything below -1e-8 is
    rejected as genuinely non-PSD.
    """
    es = hermitian_eigensystem(m)
    lo = es.values.min()
    if lo < -EIG_REJECT:
        raise ValueError(f"matrix is not PSD: min eigenvalue = {lo:.3e}")
    vals = np.where(es.values < 0.0, 0.0, es.values)
    return (es.vectors * np.sqrt(vals)) @ es.vectors.conj().T


def von_neumann_entropy(rho):
    """-tr(rho log2 rho) in bits for a density matrix.

    Requires unit trace (within 1e-8) and eigenvalues >= -1e-10. Eigenvalues
    below 1e-14 contribute zero (0 log 0 := 0).
    """
    rho = _check_hermitian(rho)
    tr = np.trace(rho).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"density matrix trace deviates from 1 by {abs(tr - 1.0):.3e}")
    vals = np.linalg.eigvalsh(rho)
    if vals.min() < -EIG_REJECT:
        raise ValueError(f"density matrix is not PSD: min eigenvalue = {vals.min():.3e}")
    return entropy_of_spectrum(vals)


def entropy_of_spectrum(vals):
    """Shannon entropy (base 2) of a probability-like eigenvalue vector."""
    vals = np.asarray(vals, dtype=float)
    p = vals[vals > ENTROPY_CUTOFF]
    return float(-(p * np.log2(p)).sum())


def binary_entropy(x):
    """h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"binary entropy argument outside [0, 1]: {x}")
    if x <= ENTROPY_CUTOFF or 1.0 - x <= ENTROPY_CUTOFF:
        return 0.0
    return float(-x * np.log2(x) - (1.0 - x) * np.log2(1.0 - x))


def trace_norm_hermitian(m):
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    m = _check_hermitian(m)
    return float(np.abs(np.linalg.eigvalsh(m)).sum())
