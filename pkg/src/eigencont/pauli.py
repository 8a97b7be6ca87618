"""Pauli strings and parameterized Pauli-sum Hamiltonians.

A Hamiltonian is a list of (PauliString, coefficient rule) terms plus an
optional scalar offset.  Sweeping the continuation parameter g changes
only the classical coefficients, never the operator content, which is
what makes measured per-term matrices reusable across target parameters.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .states import StateVector

PAULI_LETTERS = "IXYZ"

TABLE_KEY_TOL = 1e-12  # parameter values must match table keys exactly (no interpolation)


@dataclass(frozen=True)
class PauliString:
    """Phaseless word of single-qubit Pauli letters, one per qubit.

    Qubit 0 is the leftmost letter (and the most significant bit of the
    basis index).  Phases and coefficients live in Hamiltonian terms.
    """

    letters: str

    def __post_init__(self):
        if not self.letters:
            raise ValueError("PauliString needs at least one letter")
        bad = sorted(set(self.letters) - set(PAULI_LETTERS))
        if bad:
            raise ValueError(f"invalid Pauli letters {bad}; allowed: I, X, Y, Z")

    @property
    def n_qubits(self) -> int:
        return len(self.letters)

    def __str__(self):
        return self.letters


@dataclass(frozen=True)
class Constant:
    """c(g) = value."""

    value: float


@dataclass(frozen=True)
class LinearInParam:
    """c(g) = offset + slope * g."""

    offset: float
    slope: float


@dataclass(frozen=True)
class TableColumn:
    """c(g) = column entry of the owning Hamiltonian's table row at g."""

    column: str


CoefficientRule = Constant | LinearInParam | TableColumn


class ParamHamiltonian:
    """Parameterized Hamiltonian H(g) = sum_k c_k(g) P^k + offset(g) I.

    ``terms`` is an ordered list of (PauliString, CoefficientRule); the
    optional ``table`` maps parameter values to rows of named real columns
    and must be present when any rule (term or offset) is a TableColumn.
    Identity contributions (e.g. nuclear energy) belong in ``offset``, not
    in a Pauli term, since they shift all eigenvalues uniformly.
    """

    __slots__ = ("n_qubits", "terms", "table", "offset")

    def __init__(self, n_qubits, terms, table=None, offset=None):
        n_qubits = int(n_qubits)
        if n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        terms = tuple((p, r) for p, r in terms)
        seen = set()
        for p, rule in terms:
            if not isinstance(p, PauliString):
                raise TypeError(f"term operator must be a PauliString, got {p!r}")
            if p.n_qubits != n_qubits:
                raise ValueError(f"term {p} has {p.n_qubits} qubits, expected {n_qubits}")
            if p.letters in seen:
                raise ValueError(f"duplicate Pauli term {p}")
            seen.add(p.letters)
            self._check_rule(rule, table)
        if offset is not None:
            self._check_rule(offset, table)
        if table is not None:
            table = {float(g): dict(row) for g, row in table.items()}
            if not table:
                raise ValueError("coefficient table is empty")
            columns = None
            for g, row in table.items():
                if columns is None:
                    columns = set(row)
                elif set(row) != columns:
                    raise ValueError(f"table row at g={g} has inconsistent columns")
                for name, value in row.items():
                    if not math.isfinite(value):
                        raise ValueError(f"non-finite table entry {name}={value} at g={g}")
        object.__setattr__(self, "n_qubits", n_qubits)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "offset", offset)

    def __setattr__(self, name, value):
        raise AttributeError("ParamHamiltonian is immutable")

    @staticmethod
    def _check_rule(rule, table):
        if not isinstance(rule, (Constant, LinearInParam, TableColumn)):
            raise TypeError(f"unsupported coefficient rule {rule!r}")
        if isinstance(rule, Constant) and not math.isfinite(rule.value):
            raise ValueError(f"non-finite constant coefficient {rule.value}")
        if isinstance(rule, LinearInParam) and not (
            math.isfinite(rule.offset) and math.isfinite(rule.slope)
        ):
            raise ValueError(f"non-finite linear coefficient rule {rule}")
        if isinstance(rule, TableColumn):
            if table is None:
                raise ValueError(f"TableColumn({rule.column!r}) requires a coefficient table")
            for g, row in table.items():
                if rule.column not in row:
                    raise ValueError(f"table row at g={g} is missing column {rule.column!r}")

    @property
    def n_terms(self) -> int:
        return len(self.terms)

    def table_row(self, g: float) -> dict:
        """Table row whose key matches g within 1e-12; no interpolation."""
        if self.table is None:
            raise KeyError("Hamiltonian has no coefficient table")
        for key, row in self.table.items():
            if abs(key - g) <= TABLE_KEY_TOL:
                return row
        raise KeyError(f"g={g!r} is not a key of the coefficient table (no interpolation)")

    def __repr__(self):
        return f"ParamHamiltonian(n_qubits={self.n_qubits}, n_terms={self.n_terms})"


def _evaluate_rule(rule: CoefficientRule, g: float, row: dict | None) -> float:
    if isinstance(rule, Constant):
        return rule.value
    if isinstance(rule, LinearInParam):
        return rule.offset + rule.slope * g
    return row[rule.column]


def _needs_table(H: ParamHamiltonian) -> bool:
    rules = [r for _, r in H.terms]
    if H.offset is not None:
        rules.append(H.offset)
    return any(isinstance(r, TableColumn) for r in rules)


def coefficients_at(H: ParamHamiltonian, g: float) -> list[tuple[PauliString, float]]:
    """Concrete term coefficients c_k(g), in term order (offset excluded)."""
    row = H.table_row(g) if _needs_table(H) else None
    return [(p, _evaluate_rule(rule, g, row)) for p, rule in H.terms]


def offset_at(H: ParamHamiltonian, g: float) -> float:
    """The scalar identity contribution at g (0.0 when no offset rule is set)."""
    if H.offset is None:
        return 0.0
    row = H.table_row(g) if isinstance(H.offset, TableColumn) else None
    return _evaluate_rule(H.offset, g, row)


def apply_pauli(P: PauliString, v: StateVector) -> StateVector:
    """P|v> without materializing a dense matrix.

    X and Y flip the corresponding index bit (Y with a +/-i phase), Z
    flips the sign on set bits.  Norm is preserved.
    """
    n = P.n_qubits
    if v.n_qubits != n:
        raise ValueError(f"qubit-count mismatch: operator {n}, state {v.n_qubits}")
    flip = 0
    phase_mask = 0  # bits where Y or Z contributes a (-1)^bit factor
    n_y = 0
    for q, letter in enumerate(P.letters):
        bit = 1 << (n - 1 - q)
        if letter in "XY":
            flip |= bit
        if letter in "YZ":
            phase_mask |= bit
        if letter == "Y":
            n_y += 1
    idx = np.arange(v.dim)
    parity = np.bitwise_count(idx & phase_mask) & 1
    phase = (1j**n_y) * np.where(parity, -1.0, 1.0)
    out = np.empty(v.dim, dtype=complex)
    out[idx ^ flip] = phase * v.amplitudes
    return StateVector(out)


def apply_hamiltonian(H: ParamHamiltonian, g: float, v: StateVector) -> StateVector:
    """H(g)|v> = sum_k c_k(g) P^k|v> + offset(g)|v>; generally unnormalized."""
    if v.n_qubits != H.n_qubits:
        raise ValueError(f"qubit-count mismatch: Hamiltonian {H.n_qubits}, state {v.n_qubits}")
    out = np.zeros(v.dim, dtype=complex)
    for p, c in coefficients_at(H, g):
        out += c * apply_pauli(p, v).amplitudes
    off = offset_at(H, g)
    if off != 0.0:
        out += off * v.amplitudes
    return StateVector(out)


def read_coefficient_table(path) -> dict[float, dict[str, float]]:
    """Parse a coefficient-table CSV into {g: {column: value}}.

    The header names the parameter column first, then the coefficient
    columns (``g,<column names...>``); values are decimal or scientific
    notation reals.  Row order is preserved.
    """
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty coefficient table file") from None
        header = [h.strip() for h in header]
        if len(header) < 2:
            raise ValueError(f"{path}: header must name a parameter column and at least one coefficient column")
        columns = header[1:]
        table: dict[float, dict[str, float]] = {}
        for lineno, rec in enumerate(reader, start=2):
            if not rec or all(not cell.strip() for cell in rec):
                continue
            if len(rec) != len(header):
                raise ValueError(f"{path}:{lineno}: expected {len(header)} fields, got {len(rec)}")
            try:
                values = [float(cell) for cell in rec]
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
            table[values[0]] = dict(zip(columns, values[1:]))
    if not table:
        raise ValueError(f"{path}: coefficient table has no data rows")
    return table
