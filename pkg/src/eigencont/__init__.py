"""Eigenvector continuation as quantum subspace diagonalization.

Low-energy eigenstates of a parameterized Hamiltonian at a few training
parameter values form the subspace basis; the projected Hamiltonian and
overlap matrices are measured once (exactly, or through simulated
shot-sampled Hadamard tests) and the generalized eigenvalue problem is
solved with overlap thresholding at any target parameter.  The continued
state can be prepared as a linear combination of the training unitaries.
"""

from .exact import EigenPair, dense_matrix, lowest_eigenstates, pauli_matrix
from .gevp import (
    DEFAULT_EPS_EXACT,
    DEFAULT_EPS_SHOTS,
    GevpSolution,
    ZeroRankError,
    default_eps,
    solve_gevp,
)
from .lcu import LcuPlan, LcuResult, build_lcu_plan, energy_expectation, lcu_combine
from .models import BoundaryCondition, build_h2, build_xy, build_xxz, load_h2_table
from .pauli import (
    Constant,
    LinearInParam,
    ParamHamiltonian,
    PauliString,
    TableColumn,
    apply_hamiltonian,
    apply_pauli,
    coefficients_at,
    offset_at,
    read_coefficient_table,
)
from .states import (
    DenseUnitary,
    StateVector,
    apply_dense,
    basis_state,
    controlled_apply,
    inner_product,
    max_qubits,
    phase_fix,
    state_to_unitary,
    zero_state,
)
from .subspace import (
    MeasurementConfig,
    ReadoutNoise,
    SubspaceMatrices,
    TrainingSet,
    TrainingSpec,
    assemble,
    build_training_set,
    dump_matrices,
    hadamard_estimate,
    matrices_to_dict,
    measure_subspace,
    mitigate_readout,
)
from .cli import SweepConfig, SweepResult, parse_config, run_sweep

__version__ = "0.1.0"

__all__ = [
    "BoundaryCondition",
    "Constant",
    "DEFAULT_EPS_EXACT",
    "DEFAULT_EPS_SHOTS",
    "DenseUnitary",
    "EigenPair",
    "GevpSolution",
    "LcuPlan",
    "LcuResult",
    "LinearInParam",
    "MeasurementConfig",
    "ParamHamiltonian",
    "PauliString",
    "ReadoutNoise",
    "StateVector",
    "SubspaceMatrices",
    "SweepConfig",
    "SweepResult",
    "TableColumn",
    "TrainingSet",
    "TrainingSpec",
    "ZeroRankError",
    "apply_dense",
    "apply_hamiltonian",
    "apply_pauli",
    "assemble",
    "basis_state",
    "build_h2",
    "build_lcu_plan",
    "build_training_set",
    "build_xy",
    "build_xxz",
    "coefficients_at",
    "controlled_apply",
    "default_eps",
    "dense_matrix",
    "dump_matrices",
    "energy_expectation",
    "hadamard_estimate",
    "inner_product",
    "lcu_combine",
    "load_h2_table",
    "lowest_eigenstates",
    "matrices_to_dict",
    "max_qubits",
    "measure_subspace",
    "mitigate_readout",
    "offset_at",
    "parse_config",
    "pauli_matrix",
    "phase_fix",
    "read_coefficient_table",
    "run_sweep",
    "solve_gevp",
    "state_to_unitary",
    "zero_state",
]
