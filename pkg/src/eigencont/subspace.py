"""Training sets and measured subspace matrices.

The overlap (Gram) matrix S and one matrix T^k per Hamiltonian term are
measured once per training set; the projected Hamiltonian at any target
parameter g is then assembled classically as

    H(g) = sum_k c_k(g) T^k + offset(g) S,

so no additional measurement is needed per target.  Measurement is either
exact (statevector inner products) or a simulated Hadamard test: the
ancilla outcome distribution is computed exactly and shot-sampled, with
optional readout noise on the ancilla bit and confusion-matrix
mitigation.

Only the upper triangle is measured; the lower triangle is the conjugate,
which makes S and every T^k exactly Hermitian even under shot noise.  In
shots mode the diagonal of S is pinned to 1 (training states are
normalized by construction) and diagonal T^k entries are measured as real
parts only (Hermitian operators have real diagonal expectations).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .exact import lowest_eigenstates
from .pauli import (
    Constant,
    LinearInParam,
    ParamHamiltonian,
    PauliString,
    TableColumn,
    apply_pauli,
    coefficients_at,
    offset_at,
)
from .states import StateVector, inner_product


class _Counters:
    """Invocation counters exposed for tests (measurement-caching checks)."""

    def __init__(self):
        self.reset()

    def reset(self):
        self.measure_subspace_calls = 0
        self.hadamard_invocations = 0


counters = _Counters()


@dataclass(frozen=True)
class TrainingSpec:
    """Ordered (g_train, eigenstate index) pairs; index 0 is the ground state."""

    points: tuple[tuple[float, int], ...]

    def __post_init__(self):
        points = tuple((float(g), int(idx)) for g, idx in self.points)
        if not points:
            raise ValueError("training spec must contain at least one point")
        for g, idx in points:
            if idx < 0:
                raise ValueError(f"eigenstate index must be non-negative, got {idx}")
        object.__setattr__(self, "points", points)

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class TrainingSet:
    """Phase-fixed normalized training states plus the spec that produced them."""

    states: tuple[StateVector, ...]
    spec: TrainingSpec

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        if len(self.states) != len(self.spec):
            raise ValueError("state count does not match the training spec")
        for state in self.states:
            if not state.is_normalized(1e-10):
                raise ValueError("training states must be normalized")

    @property
    def n_states(self) -> int:
        return len(self.states)

    @property
    def n_qubits(self) -> int:
        return self.states[0].n_qubits


@dataclass(frozen=True)
class ReadoutNoise:
    """Symmetric-channel ancilla readout error: eps01 = P(read 1 | true 0), eps10 = P(read 0 | true 1)."""

    eps01: float
    eps10: float

    def __post_init__(self):
        for name, value in (("eps01", self.eps01), ("eps10", self.eps10)):
            if not 0.0 <= value < 0.5:
                raise ValueError(f"{name} must lie in [0, 0.5), got {value}")


@dataclass(frozen=True)
class MeasurementConfig:
    """How subspace matrix elements are obtained.

    mode "exact" uses statevector inner products; mode "shots" draws
    ``shots`` Bernoulli samples per estimated quantity.  One master seed
    feeds a deterministic substream per (pair, term, part), so results do
    not depend on evaluation order.
    """

    mode: str = "exact"
    shots: int = 20_000
    seed: int = 0
    noise: ReadoutNoise | None = None
    mitigate: bool = False

    def __post_init__(self):
        if self.mode not in ("exact", "shots"):
            raise ValueError(f"mode must be 'exact' or 'shots', got {self.mode!r}")
        if self.mode == "shots" and self.shots < 1:
            raise ValueError(f"shots must be >= 1, got {self.shots}")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError(f"seed must be a non-negative 64-bit integer, got {self.seed}")


@dataclass(frozen=True)
class SubspaceMatrices:
    """Gram matrix S plus cached per-term matrices T^k (term-order aligned).

    ``term_paulis`` records which Pauli word each T^k was measured for, so
    assembly against a different Hamiltonian is caught instead of silently
    mixing operators.
    """

    S: np.ndarray
    T: tuple[np.ndarray, ...]
    offset_rule: object | None
    term_paulis: tuple[str, ...] | None = None

    def __post_init__(self):
        S = np.array(self.S, dtype=complex)
        S.flags.writeable = False
        T = []
        for t in self.T:
            t = np.array(t, dtype=complex)
            t.flags.writeable = False
            T.append(t)
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "T", tuple(T))
        if self.term_paulis is not None and len(self.term_paulis) != len(T):
            raise ValueError("term_paulis length does not match the number of T matrices")

    @property
    def n_states(self) -> int:
        return self.S.shape[0]


def build_training_set(H: ParamHamiltonian, spec: TrainingSpec) -> TrainingSet:
    """Exact-diagonalization training states for each (g, eigenstate index)."""
    if len(spec) > 2**H.n_qubits:
        raise ValueError(f"{len(spec)} training states exceed the Hilbert-space dimension")
    states = []
    for g, idx in spec.points:
        pairs = lowest_eigenstates(H, g, idx + 1)
        states.append(pairs[idx].vector)
    return TrainingSet(tuple(states), spec)


def mitigate_readout(p0_observed: float, noise: ReadoutNoise) -> float:
    """Invert the 2x2 readout confusion map, clamping the result to [0, 1].

    The forward map is p0_obs = p0 (1 - eps01) + (1 - p0) eps10.
    """
    denom = 1.0 - noise.eps01 - noise.eps10
    if denom <= 0.0:
        raise ValueError("confusion matrix is singular (eps01 + eps10 >= 1)")
    return float(np.clip((p0_observed - noise.eps10) / denom, 0.0, 1.0))


def hadamard_estimate(
    u: StateVector,
    v: StateVector,
    P: PauliString | None,
    part: str,
    cfg: MeasurementConfig,
    key: tuple[int, ...] = (),
) -> float:
    """Estimate Re or Im of <u|P|v> from simulated ancilla statistics.

    The ancilla-0 probability of the corresponding Hadamard-test circuit
    is p0 = (1 + a)/2 with a the requested part; we compute p0 exactly,
    sample ``cfg.shots`` readouts from it (corrupting each through
    ``cfg.noise`` when configured and applying confusion-matrix mitigation
    when ``cfg.mitigate``), and return 2*p0_hat - 1.  ``P=None`` measures
    the bare overlap <u|v>.  In exact mode the exact part is returned.

    ``key`` selects the deterministic substream (derived from cfg.seed,
    key, and the part) so estimates are reproducible regardless of
    evaluation order.
    """
    if part not in ("real", "imag"):
        raise ValueError(f"part must be 'real' or 'imag', got {part!r}")
    w = apply_pauli(P, v) if P is not None else v
    amp = inner_product(u, w)
    a = amp.real if part == "real" else amp.imag
    if cfg.mode == "exact":
        return float(a)
    counters.hadamard_invocations += 1
    p0 = float(np.clip((1.0 + a) / 2.0, 0.0, 1.0))
    seq = np.random.SeedSequence(int(cfg.seed), spawn_key=tuple(key) + (0 if part == "real" else 1,))
    rng = np.random.default_rng(seq)
    true_zeros = rng.binomial(cfg.shots, p0)
    if cfg.noise is not None:
        read_zeros = rng.binomial(true_zeros, 1.0 - cfg.noise.eps01)
        read_zeros += rng.binomial(cfg.shots - true_zeros, cfg.noise.eps10)
    else:
        read_zeros = true_zeros
    p0_hat = read_zeros / cfg.shots
    if cfg.mitigate and cfg.noise is not None:
        p0_hat = mitigate_readout(p0_hat, cfg.noise)
    return float(2.0 * p0_hat - 1.0)


def measure_subspace(ts: TrainingSet, H: ParamHamiltonian, cfg: MeasurementConfig) -> SubspaceMatrices:
    """Measure S_ij = <phi_i|phi_j> and T^k_ij = <phi_i|P^k|phi_j>.

    Each of the M(M+1)/2 upper-triangle pairs is measured once per
    operator; target-parameter sweeps reuse the result via
    :func:`assemble` with no further measurement.
    """
    if ts.n_qubits != H.n_qubits:
        raise ValueError(f"qubit-count mismatch: training set {ts.n_qubits}, Hamiltonian {H.n_qubits}")
    counters.measure_subspace_calls += 1
    M = ts.n_states
    S = np.zeros((M, M), dtype=complex)
    T = [np.zeros((M, M), dtype=complex) for _ in H.terms]
    if cfg.mode == "exact":
        applied = [[apply_pauli(p, st) for st in ts.states] for p, _ in H.terms]
        for j in range(M):
            for i in range(j + 1):
                s = inner_product(ts.states[i], ts.states[j])
                if i == j:
                    s = complex(s.real)
                S[i, j] = s
                S[j, i] = np.conj(s)
                for k in range(len(H.terms)):
                    t = inner_product(ts.states[i], applied[k][j])
                    if i == j:
                        t = complex(t.real)
                    T[k][i, j] = t
                    T[k][j, i] = np.conj(t)
    else:
        for j in range(M):
            for i in range(j + 1):
                if i == j:
                    S[i, i] = 1.0  # states are normalized by construction
                else:
                    re = hadamard_estimate(ts.states[i], ts.states[j], None, "real", cfg, key=(i, j, 0))
                    im = hadamard_estimate(ts.states[i], ts.states[j], None, "imag", cfg, key=(i, j, 0))
                    S[i, j] = re + 1j * im
                    S[j, i] = re - 1j * im
                for k, (p, _) in enumerate(H.terms):
                    re = hadamard_estimate(ts.states[i], ts.states[j], p, "real", cfg, key=(i, j, k + 1))
                    if i == j:
                        T[k][i, i] = re  # Hermitian P^k has a real diagonal expectation
                    else:
                        im = hadamard_estimate(ts.states[i], ts.states[j], p, "imag", cfg, key=(i, j, k + 1))
                        T[k][i, j] = re + 1j * im
                        T[k][j, i] = re - 1j * im
    return SubspaceMatrices(
        S=S,
        T=tuple(T),
        offset_rule=H.offset,
        term_paulis=tuple(str(p) for p, _ in H.terms),
    )


def assemble(sm: SubspaceMatrices, H: ParamHamiltonian, g: float) -> tuple[np.ndarray, np.ndarray]:
    """Projected matrices at target g from the cached measurements.

    Returns (Hmat, Smat) with Hmat = sum_k c_k(g) T^k + offset(g) S; no
    quantum-side measurement happens here.
    """
    if len(sm.T) != len(H.terms):
        raise ValueError(f"term-count mismatch: {len(sm.T)} cached matrices, {len(H.terms)} terms")
    if sm.term_paulis is not None:
        words = tuple(str(p) for p, _ in H.terms)
        if words != sm.term_paulis:
            raise ValueError("cached matrices were measured for a different term list")
    Hmat = np.zeros_like(sm.S)
    for (_, c), t in zip(coefficients_at(H, g), sm.T):
        Hmat += c * t
    off = offset_at(H, g)
    if off != 0.0:
        Hmat = Hmat + off * sm.S
    return Hmat, sm.S.copy()


def _rule_meta(rule) -> dict | None:
    if rule is None:
        return None
    if isinstance(rule, Constant):
        return {"kind": "constant", "value": rule.value}
    if isinstance(rule, LinearInParam):
        return {"kind": "linear", "offset": rule.offset, "slope": rule.slope}
    if isinstance(rule, TableColumn):
        return {"kind": "table", "column": rule.column}
    return {"kind": "unknown"}


def _matrix_pairs(mat: np.ndarray) -> list[list[list[float]]]:
    return [[[float(z.real), float(z.imag)] for z in row] for row in mat]


def matrices_to_dict(sm: SubspaceMatrices, H: ParamHamiltonian) -> dict:
    """JSON-ready dump of S and all T^k as [re, im] pairs with term metadata."""
    return {
        "n_training": sm.n_states,
        "overlap": _matrix_pairs(sm.S),
        "terms": [
            {
                "pauli": str(p),
                "rule": _rule_meta(rule),
                "matrix": _matrix_pairs(t),
            }
            for (p, rule), t in zip(H.terms, sm.T)
        ],
        "offset_rule": _rule_meta(sm.offset_rule),
    }


def dump_matrices(sm: SubspaceMatrices, H: ParamHamiltonian, path) -> None:
    """Write the matrix dump as JSON."""
    Path(path).write_text(json.dumps(matrices_to_dict(sm, H), indent=2) + "\n")
