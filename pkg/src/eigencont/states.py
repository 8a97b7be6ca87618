"""Dense complex statevectors and the primitive unitary actions.

Conventions used throughout the package:

* qubit 0 is the most significant bit of the computational-basis index,
  so ``|q0 q1 ... q_{n-1}>`` has index ``sum(q_i << (n-1-i))``;
* stored eigenvectors and training states are phase-fixed (first
  significant amplitude real positive) so regression tests are stable.

Everything here is dense; the qubit count is capped (default 12,
overridable via the ``EIGENCONT_MAX_QUBITS`` environment variable).
"""

from __future__ import annotations

import os

import numpy as np

DEFAULT_MAX_QUBITS = 12

PHASE_TOL = 1e-9  # modulus below which an amplitude cannot anchor a phase


def max_qubits() -> int:
    """Dimension cap for dense objects; env var EIGENCONT_MAX_QUBITS overrides."""
    raw = os.environ.get("EIGENCONT_MAX_QUBITS")
    return int(raw) if raw else DEFAULT_MAX_QUBITS


class StateVector:
    """Immutable dense statevector on ``n_qubits`` qubits.

    The amplitudes array is copied on construction and marked read-only.
    Norm is not enforced here: operations that require a normalized input
    (e.g. :func:`state_to_unitary`) check it explicitly, and operations
    returning unnormalized vectors (e.g. Hamiltonian application) say so.
    """

    __slots__ = ("amplitudes",)

    def __init__(self, amplitudes):
        amps = np.array(amplitudes, dtype=complex)
        if amps.ndim != 1:
            raise ValueError(f"amplitudes must be one-dimensional, got shape {amps.shape}")
        dim = amps.shape[0]
        if dim == 0 or dim & (dim - 1):
            raise ValueError(f"amplitude count must be a power of two, got {dim}")
        n = dim.bit_length() - 1
        if n > max_qubits():
            raise ValueError(f"{n} qubits exceeds the dimension cap of {max_qubits()}")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    def __setattr__(self, name, value):
        raise AttributeError("StateVector is immutable")

    @property
    def n_qubits(self) -> int:
        return self.amplitudes.shape[0].bit_length() - 1

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, tol: float = 1e-10) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def normalized(self) -> "StateVector":
        """Rescaled copy with unit norm; raises on (near-)zero vectors."""
        nrm = self.norm()
        if nrm < PHASE_TOL:
            raise ValueError("cannot normalize a zero vector")
        return StateVector(self.amplitudes / nrm)

    def __repr__(self):
        return f"StateVector(n_qubits={self.n_qubits})"


def basis_state(n_qubits: int, index: int = 0) -> StateVector:
    """Computational-basis state |index> on n_qubits qubits."""
    dim = 2**n_qubits
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for {n_qubits} qubits")
    amps = np.zeros(dim, dtype=complex)
    amps[index] = 1.0
    return StateVector(amps)


def zero_state(n_qubits: int) -> StateVector:
    """The |0...0> state."""
    return basis_state(n_qubits, 0)


class DenseUnitary:
    """Explicit 2^n x 2^n unitary matrix; unitarity is checked on construction."""

    __slots__ = ("matrix",)

    UNITARITY_TOL = 1e-10

    def __init__(self, matrix):
        mat = np.array(matrix, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError(f"matrix must be square, got shape {mat.shape}")
        dim = mat.shape[0]
        if dim < 2 or dim & (dim - 1):
            raise ValueError(f"matrix dimension must be a power of two >= 2, got {dim}")
        n = dim.bit_length() - 1
        if n > max_qubits():
            raise ValueError(f"{n} qubits exceeds the dimension cap of {max_qubits()}")
        defect = np.abs(mat.conj().T @ mat - np.eye(dim)).max()
        if defect > self.UNITARITY_TOL:
            raise ValueError(f"matrix is not unitary (U†U deviates from I by {defect:.2e})")
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)

    def __setattr__(self, name, value):
        raise AttributeError("DenseUnitary is immutable")

    @property
    def n_qubits(self) -> int:
        return self.matrix.shape[0].bit_length() - 1

    def __repr__(self):
        return f"DenseUnitary(n_qubits={self.n_qubits})"


def inner_product(u: StateVector, v: StateVector) -> complex:
    """<u|v> with conjugation on u."""
    if u.n_qubits != v.n_qubits:
        raise ValueError(f"qubit-count mismatch: {u.n_qubits} vs {v.n_qubits}")
    return complex(np.vdot(u.amplitudes, v.amplitudes))


def apply_dense(U: DenseUnitary, v: StateVector) -> StateVector:
    """U|v>."""
    if U.n_qubits != v.n_qubits:
        raise ValueError(f"qubit-count mismatch: {U.n_qubits} vs {v.n_qubits}")
    return StateVector(U.matrix @ v.amplitudes)


def state_to_unitary(phi: StateVector) -> DenseUnitary:
    """Complete a normalized state into a unitary whose first column is phi.

    The remaining columns come from Gram-Schmidt over the computational
    basis vectors in index order, skipping candidates that are nearly
    parallel to the columns already chosen.  The construction is
    deterministic, so the same phi always yields the same unitary.
    """
    if not phi.is_normalized(1e-10):
        raise ValueError(f"state_to_unitary requires a normalized state, norm={phi.norm()!r}")
    dim = phi.dim
    cols = np.zeros((dim, dim), dtype=complex)
    cols[:, 0] = phi.amplitudes
    k = 1
    for j in range(dim):
        if k == dim:
            break
        chosen = cols[:, :k]
        # candidate e_j minus its projection onto the chosen columns; the
        # second pass keeps orthogonality well below UNITARITY_TOL
        w = -chosen @ np.conj(chosen[j, :])
        w[j] += 1.0
        w -= chosen @ (chosen.conj().T @ w)
        nrm = np.linalg.norm(w)
        if nrm > 1e-8:
            cols[:, k] = w / nrm
            k += 1
    if k != dim:
        raise ValueError("failed to complete an orthonormal basis")  # unreachable for unit phi
    return DenseUnitary(cols)


def controlled_apply(U: DenseUnitary, v: StateVector, control: int) -> StateVector:
    """Apply U on the non-control qubits wherever the control bit is 1.

    ``v`` must hold the control qubit plus U's target register
    (``v.n_qubits == U.n_qubits + 1``); the target register is the
    remaining qubits in ascending index order.
    """
    n = v.n_qubits
    if not 0 <= control < n:
        raise ValueError(f"control index {control} out of range for {n} qubits")
    if U.n_qubits != n - 1:
        raise ValueError(
            f"state must hold control plus target register: got {n} qubits for a "
            f"{U.n_qubits}-qubit unitary"
        )
    tensor = v.amplitudes.reshape([2] * n)
    moved = np.moveaxis(tensor, control, 0).copy()
    block = moved[1].reshape(-1)
    moved[1] = (U.matrix @ block).reshape([2] * (n - 1))
    return StateVector(np.moveaxis(moved, 0, control).reshape(-1))


def phase_fix_array(amps: np.ndarray) -> np.ndarray:
    """Multiply by a unit scalar making the first significant entry real positive."""
    idx = np.flatnonzero(np.abs(amps) > PHASE_TOL)
    if idx.size == 0:
        raise ValueError("cannot phase-fix a zero vector")
    a = amps[idx[0]]
    return amps * (np.conj(a) / abs(a))


def phase_fix(v: StateVector) -> StateVector:
    """Global-phase gauge: first amplitude with modulus > 1e-9 made real positive."""
    return StateVector(phase_fix_array(v.amplitudes))
