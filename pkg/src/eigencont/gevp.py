"""Thresholded solver for the projected generalized eigenvalue problem H c = E S c.

Canonical orthogonalization: eigendecompose S, drop directions whose
overlap eigenvalue falls below a relative threshold (rank deficiency from
same-sector training states, or noise-dominated directions in shot mode),
rescale the survivors by D^{-1/2}, and solve the reduced ordinary
Hermitian eigenproblem.  Cholesky is deliberately avoided: it fails
outright on the rank-deficient Gram matrices this method routinely
produces.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .states import phase_fix_array

DEFAULT_EPS_EXACT = 1e-12
DEFAULT_EPS_SHOTS = 1e-2

HERMITICITY_TOL = 1e-8


class ZeroRankError(RuntimeError):
    """Every overlap eigenvalue fell below the retention threshold."""


def default_eps(mode: str) -> float:
    """Per-measurement-mode default threshold (overridable everywhere)."""
    return DEFAULT_EPS_EXACT if mode == "exact" else DEFAULT_EPS_SHOTS


@dataclass(frozen=True)
class GevpSolution:
    """Retained-rank generalized eigenpairs.

    Energies ascend; each coefficient vector is S-normalized (c†Sc = 1)
    and phase-fixed.  ``kept_overlap_eigenvalues`` lists the overlap
    eigenvalues that survived thresholding, largest first.
    """

    energies: tuple[float, ...]
    coeff_vectors: tuple[np.ndarray, ...]
    retained_rank: int
    threshold_used: float
    kept_overlap_eigenvalues: tuple[float, ...]

    @property
    def ground_energy(self) -> float:
        return self.energies[0]

    @property
    def ground_coeffs(self) -> np.ndarray:
        return self.coeff_vectors[0]


def _require_hermitian(mat: np.ndarray, name: str) -> np.ndarray:
    defect = np.abs(mat - mat.conj().T).max()
    if defect > HERMITICITY_TOL:
        raise ValueError(f"{name} is not Hermitian within {HERMITICITY_TOL:g} (defect {defect:.2e})")
    return (mat + mat.conj().T) / 2.0


def solve_gevp(Hmat: np.ndarray, Smat: np.ndarray, eps: float) -> GevpSolution:
    """Solve H c = E S c with relative overlap-eigenvalue thresholding.

    Directions with overlap eigenvalue d_i < eps * d_max (or d_i <= 0) are
    dropped before the canonical orthogonalization; the returned rank is
    the number of survivors.  Raises :class:`ZeroRankError` when nothing
    survives.
    """
    Hmat = np.asarray(Hmat, dtype=complex)
    Smat = np.asarray(Smat, dtype=complex)
    if Hmat.shape != Smat.shape or Hmat.ndim != 2 or Hmat.shape[0] != Hmat.shape[1]:
        raise ValueError(f"H and S must be square and same-shaped, got {Hmat.shape} and {Smat.shape}")
    if not 0.0 <= eps < 1.0:
        raise ValueError(f"threshold eps must lie in [0, 1), got {eps}")
    Hmat = _require_hermitian(Hmat, "Hmat")
    Smat = _require_hermitian(Smat, "Smat")

    d, V = np.linalg.eigh(Smat)
    d_max = d.max()
    if d_max <= 0.0:
        raise ZeroRankError("overlap matrix has no positive eigenvalue")
    keep = (d > 0.0) & (d >= eps * d_max)
    rank = int(keep.sum())
    if rank == 0:
        raise ZeroRankError(f"all overlap eigenvalues fall below eps*d_max = {eps * d_max:.3e}")
    kept = d[keep]
    W = V[:, keep] / np.sqrt(kept)

    reduced = W.conj().T @ Hmat @ W
    reduced = (reduced + reduced.conj().T) / 2.0
    energies, Y = np.linalg.eigh(reduced)
    coeffs = tuple(phase_fix_array(W @ Y[:, i]) for i in range(rank))
    order = np.argsort(kept)[::-1]
    return GevpSolution(
        energies=tuple(float(e) for e in energies),
        coeff_vectors=coeffs,
        retained_rank=rank,
        threshold_used=float(eps),
        kept_overlap_eigenvalues=tuple(float(x) for x in kept[order]),
    )
