"""Builders for the three parameterized model Hamiltonians.

* transverse-field XY chain, continuation parameter B_z;
* XXZ chain, continuation parameter J_z;
* two-qubit molecular-hydrogen Hamiltonian whose coefficients are
  ingested from an external table keyed by the interatomic distance R.
"""

from __future__ import annotations

from enum import Enum

from .pauli import (
    Constant,
    LinearInParam,
    ParamHamiltonian,
    PauliString,
    TableColumn,
    read_coefficient_table,
)

H2_COLUMNS = ("c_II", "c_ZI", "c_IZ", "c_ZZ", "c_XX", "E_nuc")


class BoundaryCondition(str, Enum):
    OPEN = "open"
    PERIODIC = "periodic"


def _word(n: int, placed: dict[int, str]) -> PauliString:
    letters = ["I"] * n
    for q, letter in placed.items():
        letters[q] = letter
    return PauliString("".join(letters))


def _bonds(n: int, bc: BoundaryCondition) -> list[tuple[int, int]]:
    bonds = [(i, i + 1) for i in range(n - 1)]
    if bc is BoundaryCondition.PERIODIC:
        if n < 3:
            raise ValueError("periodic boundaries need n >= 3 (the wrap bond would duplicate a term)")
        bonds.append((n - 1, 0))
    return bonds


def build_xy(n: int, J: float = -1.0, Bx: float = 0.0,
             bc: BoundaryCondition | str = BoundaryCondition.OPEN) -> ParamHamiltonian:
    """Transverse-field XY chain; the continuation parameter g is B_z.

    Terms, in order: J*X_i X_{i+1} per bond, J*Y_i Y_{i+1} per bond,
    B_z*Z_i per site (linear in g), Bx*X_i per site.
    """
    if n < 2:
        raise ValueError("XY chain needs at least 2 sites")
    bc = BoundaryCondition(bc)
    terms = []
    for i, j in _bonds(n, bc):
        terms.append((_word(n, {i: "X", j: "X"}), Constant(J)))
    for i, j in _bonds(n, bc):
        terms.append((_word(n, {i: "Y", j: "Y"}), Constant(J)))
    for i in range(n):
        terms.append((_word(n, {i: "Z"}), LinearInParam(0.0, 1.0)))
    for i in range(n):
        terms.append((_word(n, {i: "X"}), Constant(Bx)))
    return ParamHamiltonian(n, terms)


def build_xxz(n: int, J: float = 1.0,
              bc: BoundaryCondition | str = BoundaryCondition.OPEN) -> ParamHamiltonian:
    """XXZ chain; the continuation parameter g is J_z (the ZZ term enters as -J_z)."""
    if n < 2:
        raise ValueError("XXZ chain needs at least 2 sites")
    bc = BoundaryCondition(bc)
    terms = []
    for i, j in _bonds(n, bc):
        terms.append((_word(n, {i: "X", j: "X"}), Constant(J)))
    for i, j in _bonds(n, bc):
        terms.append((_word(n, {i: "Y", j: "Y"}), Constant(J)))
    for i, j in _bonds(n, bc):
        terms.append((_word(n, {i: "Z", j: "Z"}), LinearInParam(0.0, -1.0)))
    return ParamHamiltonian(n, terms)


def build_h2(table: dict[float, dict[str, float]]) -> ParamHamiltonian:
    """Two-qubit hydrogen Hamiltonian from an ingested coefficient table.

    The table must provide, per interatomic distance R, the columns
    ``c_II, c_ZI, c_IZ, c_ZZ, c_XX, E_nuc``.  The identity coefficient and
    the nuclear energy are combined into the scalar offset; the four Pauli
    terms ZI, IZ, ZZ, XX carry TableColumn rules.
    """
    if not table:
        raise ValueError("H2 coefficient table is empty")
    for g, row in table.items():
        missing = [c for c in H2_COLUMNS if c not in row]
        if missing:
            raise ValueError(f"table row at R={g} is missing columns {missing}")
    augmented = {
        float(g): {**row, "offset": row["c_II"] + row["E_nuc"]} for g, row in table.items()
    }
    terms = [
        (PauliString("ZI"), TableColumn("c_ZI")),
        (PauliString("IZ"), TableColumn("c_IZ")),
        (PauliString("ZZ"), TableColumn("c_ZZ")),
        (PauliString("XX"), TableColumn("c_XX")),
    ]
    return ParamHamiltonian(2, terms, table=augmented, offset=TableColumn("offset"))


def load_h2_table(path) -> dict[float, dict[str, float]]:
    """Read an H2 coefficient CSV (header ``R,c_II,c_ZI,c_IZ,c_ZZ,c_XX,E_nuc``)."""
    table = read_coefficient_table(path)
    for g, row in table.items():
        missing = [c for c in H2_COLUMNS if c not in row]
        if missing:
            raise ValueError(f"{path}: row at R={g} is missing columns {missing}")
    return table
