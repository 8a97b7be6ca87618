"""Exact diagonalization: ground-truth spectra and training eigenstates.

Full dense Hermitian diagonalization only; the qubit cap from
:mod:`eigencont.states` keeps this tractable.  Degenerate levels are
returned in a deterministic canonical basis so that training-state
construction and regression tests are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .pauli import ParamHamiltonian, PauliString, coefficients_at, offset_at
from .states import StateVector, max_qubits, phase_fix_array

DEGENERACY_TOL = 1e-9

_SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass(frozen=True)
class EigenPair:
    """One eigenvalue with its phase-fixed eigenvector."""

    energy: float
    vector: StateVector


def pauli_matrix(P: PauliString) -> np.ndarray:
    """Dense matrix of a Pauli string via Kronecker products (qubit 0 leftmost)."""
    mat = np.array([[1.0 + 0j]])
    for letter in P.letters:
        mat = np.kron(mat, _SINGLE[letter])
    return mat


def dense_matrix(H: ParamHamiltonian, g: float) -> np.ndarray:
    """2^n x 2^n Hermitian matrix of H(g)."""
    if H.n_qubits > max_qubits():
        raise ValueError(f"{H.n_qubits} qubits exceeds the dimension cap of {max_qubits()}")
    dim = 2**H.n_qubits
    mat = np.zeros((dim, dim), dtype=complex)
    for p, c in coefficients_at(H, g):
        mat += c * pauli_matrix(p)
    off = offset_at(H, g)
    if off != 0.0:
        mat += off * np.eye(dim)
    return mat


def _canonical_degenerate_basis(block: np.ndarray) -> np.ndarray:
    """Deterministic orthonormal basis of a degenerate eigenspace.

    Projects computational basis vectors onto the eigenspace in index
    order and orthogonalizes, which both fixes the arbitrary rotation
    returned by the eigensolver and orders the vectors by the index of
    their first significant amplitude.
    """
    dim, d = block.shape
    chosen: list[np.ndarray] = []
    for j in range(dim):
        if len(chosen) == d:
            break
        w = block @ np.conj(block[j, :])  # projection of e_j onto the eigenspace
        for _ in range(2):
            for c in chosen:
                w = w - np.vdot(c, w) * c
        nrm = np.linalg.norm(w)
        if nrm > 1e-8:
            chosen.append(w / nrm)
    return np.column_stack(chosen)


def lowest_eigenstates(H: ParamHamiltonian, g: float, k: int) -> list[EigenPair]:
    """The k lowest eigenpairs of H(g), energies ascending.

    Within an energy tolerance of 1e-9 the eigenvectors of a degenerate
    block are replaced by the canonical basis above; all returned vectors
    are phase-fixed and mutually orthonormal.
    """
    dim = 2**H.n_qubits
    if not 1 <= k <= dim:
        raise ValueError(f"k={k} out of range [1, {dim}]")
    energies, vectors = np.linalg.eigh(dense_matrix(H, g))
    start = 0
    while start < k:  # blocks beyond the requested range never surface
        stop = start + 1
        while stop < dim and energies[stop] - energies[stop - 1] <= DEGENERACY_TOL:
            stop += 1
        if stop - start > 1:
            vectors[:, start:stop] = _canonical_degenerate_basis(vectors[:, start:stop])
        start = stop
    pairs = []
    for i in range(k):
        vec = StateVector(phase_fix_array(vectors[:, i]))
        pairs.append(EigenPair(energy=float(energies[i]), vector=vec))
    return pairs
