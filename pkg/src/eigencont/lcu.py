"""Target-state preparation as a linear combination of training unitaries.

Given subspace coefficients (r_m e^{i theta_m}) for training states
|phi_m> = U_m|0...0>, the coefficient phases are absorbed into the
unitaries, the moduli become preparation weights, and post-selecting the
ancilla register of the standard prepare-select-unprepare circuit on
|0...0> leaves the system in the normalized combination
sum_m r_m e^{i theta_m} |phi_m>.  The post-selected state and its success
probability are computed analytically here (no rejection sampling); for
two unitaries the construction reduces to the single-ancilla
(k U_a + U_b)/(k+1) circuit with k = r_0/r_1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .pauli import ParamHamiltonian, apply_hamiltonian
from .states import DenseUnitary, StateVector, apply_dense, inner_product, state_to_unitary, zero_state
from .subspace import TrainingSet


@dataclass(frozen=True)
class LcuPlan:
    """Phase-absorbed training unitaries plus ancilla preparation amplitudes.

    ``weights`` are the moduli of the subspace coefficients (phases live
    in the unitaries); ``prepare_amplitudes`` is the 2^n_ancilla vector
    sqrt(w_m / lambda), zero-padded, with lambda = sum of weights.
    """

    unitaries: tuple[DenseUnitary, ...]
    weights: tuple[float, ...]
    n_ancilla: int
    prepare_amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.prepare_amplitudes, dtype=float)
        amps.flags.writeable = False
        object.__setattr__(self, "prepare_amplitudes", amps)
        if any(w < 0.0 for w in self.weights):
            raise ValueError("weights must be non-negative (phases are absorbed into the unitaries)")
        if abs(np.linalg.norm(amps) - 1.0) > 1e-12:
            raise ValueError("prepare amplitudes must be normalized")


@dataclass(frozen=True)
class LcuResult:
    """Post-selected system state and the ancilla-|0...0> success probability."""

    state: StateVector
    success_probability: float


def build_lcu_plan(ts: TrainingSet, coeffs) -> LcuPlan:
    """Plan the combination sum_m coeffs[m] |phi_m> as an LCU."""
    coeffs = np.asarray(coeffs, dtype=complex)
    if coeffs.ndim != 1 or coeffs.shape[0] != ts.n_states:
        raise ValueError(f"expected {ts.n_states} coefficients, got shape {coeffs.shape}")
    weights = np.abs(coeffs)
    lam = weights.sum()
    if lam == 0.0:
        raise ValueError("all combination coefficients are zero")
    unitaries = []
    for c, phi in zip(coeffs, ts.states):
        base = state_to_unitary(phi)
        phase = np.exp(1j * np.angle(c))
        unitaries.append(DenseUnitary(phase * base.matrix))
    n_ancilla = max(int(math.ceil(math.log2(len(coeffs)))), 0)
    prepare = np.zeros(2**n_ancilla, dtype=float)
    prepare[: len(coeffs)] = np.sqrt(weights / lam)
    return LcuPlan(
        unitaries=tuple(unitaries),
        weights=tuple(float(w) for w in weights),
        n_ancilla=n_ancilla,
        prepare_amplitudes=prepare,
    )


def combined_state(plan: LcuPlan) -> StateVector:
    """Unnormalized post-selected state sum_m (w_m / lambda) U_m |0...0>."""
    lam = sum(plan.weights)
    n = plan.unitaries[0].n_qubits
    zero = zero_state(n)
    out = np.zeros(2**n, dtype=complex)
    for w, U in zip(plan.weights, plan.unitaries):
        if w != 0.0:
            out += (w / lam) * apply_dense(U, zero).amplitudes
    return StateVector(out)


def lcu_combine(ts: TrainingSet, coeffs) -> LcuResult:
    """Prepare the normalized combination of training states via LCU.

    The success probability is the squared norm of the post-selected
    (unnormalized) state, ||sum_m w_m U_m|0>||^2 / lambda^2.
    """
    plan = build_lcu_plan(ts, coeffs)
    raw = combined_state(plan)
    nrm = raw.norm()
    if nrm < 1e-9:
        raise ValueError("combined state vanished (coefficients cancel the training states)")
    return LcuResult(state=raw.normalized(), success_probability=float(nrm**2))


def energy_expectation(v: StateVector, H: ParamHamiltonian, g: float) -> float:
    """Re <v|H(g)|v> for a normalized state; the imaginary part must be negligible."""
    if not v.is_normalized(1e-10):
        raise ValueError("energy expectation requires a normalized state")
    value = inner_product(v, apply_hamiltonian(H, g, v))
    if abs(value.imag) > 1e-10:
        raise ValueError(f"expectation has a non-negligible imaginary part: {value.imag:.3e}")
    return float(value.real)
