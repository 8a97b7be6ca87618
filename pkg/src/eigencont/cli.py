"""Config-driven sweep orchestration and the ``eigencont`` command-line tool.

A sweep builds the model and training set once, measures the subspace
matrices once, then assembles and solves the generalized eigenproblem at
every target parameter, optionally verifying the ground state through LCU
preparation and comparing against the exact-diagonalization oracle.
Results go to a CSV with one row per (target, retained level).

Exit codes: 0 success, 2 config error, 3 runtime/numerics error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .exact import dense_matrix
from .gevp import default_eps, solve_gevp
from .lcu import energy_expectation, lcu_combine
from .models import build_h2, build_xy, build_xxz, load_h2_table
from .pauli import ParamHamiltonian
from .subspace import (
    MeasurementConfig,
    ReadoutNoise,
    TrainingSpec,
    assemble,
    build_training_set,
    dump_matrices,
    measure_subspace,
)

CSV_HEADER = "g,level,E_ec,retained_rank,E_exact,abs_err,E_lcu,lcu_success_prob"


class ConfigError(ValueError):
    """Malformed or invalid sweep configuration."""


class SweepRuntimeError(RuntimeError):
    """A sweep failed while processing a target point."""


@dataclass(frozen=True)
class ModelSpec:
    kind: str  # xy | xxz | h2
    n: int = 2
    J: float = -1.0
    Bx: float = 0.0
    bc: str = "open"
    table: str | None = None


@dataclass(frozen=True)
class SweepConfig:
    model: ModelSpec
    training: TrainingSpec
    targets: tuple[float, ...]
    measurement: MeasurementConfig
    gevp_eps: float
    lcu_verify: bool
    compare_exact: bool
    n_levels_reported: int
    output: str


@dataclass(frozen=True)
class SweepRow:
    g: float
    level: int
    e_ec: float
    retained_rank: int
    e_exact: float | None
    abs_err: float | None
    e_lcu: float | None
    lcu_success_prob: float | None


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]
    csv_text: str
    output_path: str
    retained_ranks: tuple[int, ...]
    max_abs_err_level0: float | None
    gevp_eps: float


def _section(doc: dict, name: str, allowed: set[str], required: set[str] = frozenset()) -> dict:
    sec = doc.get(name, {})
    if not isinstance(sec, dict):
        raise ConfigError(f"[{name}] must be a table")
    unknown = sorted(set(sec) - allowed)
    if unknown:
        raise ConfigError(f"unknown key(s) in [{name}]: {', '.join(unknown)}")
    missing = sorted(required - set(sec))
    if missing:
        raise ConfigError(f"missing required key(s) in [{name}]: {', '.join(missing)}")
    return sec


def _real(sec: dict, section: str, key: str, default=None):
    value = sec.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{section}.{key} must be a number, got {value!r}")
    return float(value)


def _integer(sec: dict, section: str, key: str, default=None):
    value = sec.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{section}.{key} must be an integer, got {value!r}")
    return int(value)


def _boolean(sec: dict, section: str, key: str, default: bool):
    value = sec.get(key, default)
    if not isinstance(value, bool):
        raise ConfigError(f"{section}.{key} must be a boolean, got {value!r}")
    return value


def _parse_model(doc: dict) -> ModelSpec:
    sec = _section(doc, "model", {"type", "n", "J", "Bx", "bc", "table"}, {"type"})
    kind = sec["type"]
    if kind not in ("xy", "xxz", "h2"):
        raise ConfigError(f"model.type must be one of xy, xxz, h2; got {kind!r}")
    if kind == "h2":
        extra = sorted(set(sec) & {"n", "J", "Bx", "bc"})
        if extra:
            raise ConfigError(f"model key(s) {', '.join(extra)} do not apply to the h2 model")
        table = sec.get("table")
        if not isinstance(table, str) or not table:
            raise ConfigError("model.table (coefficient CSV path) is required for the h2 model")
        return ModelSpec(kind="h2", n=2, table=table)
    if "table" in sec:
        raise ConfigError("model.table only applies to the h2 model")
    if kind == "xxz" and "Bx" in sec:
        raise ConfigError("model.Bx only applies to the xy model")
    if "n" not in sec:
        raise ConfigError("model.n is required for spin-chain models")
    n = _integer(sec, "model", "n")
    if n < 2:
        raise ConfigError(f"model.n must be >= 2, got {n}")
    bc = sec.get("bc", "open")
    if bc not in ("open", "periodic"):
        raise ConfigError(f"model.bc must be 'open' or 'periodic', got {bc!r}")
    J = _real(sec, "model", "J", -1.0 if kind == "xy" else 1.0)
    Bx = _real(sec, "model", "Bx", 0.0) if kind == "xy" else 0.0
    return ModelSpec(kind=kind, n=n, J=J, Bx=Bx, bc=bc)


def _parse_training(doc: dict) -> TrainingSpec:
    sec = _section(doc, "training", {"points"}, {"points"})
    points = sec["points"]
    if not isinstance(points, list) or not points:
        raise ConfigError("training.points must be a non-empty list of [g, eigenstate_index] pairs")
    pairs = []
    for item in points:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or isinstance(item[0], bool)
            or isinstance(item[1], bool)
            or not isinstance(item[0], (int, float))
            or not isinstance(item[1], int)
        ):
            raise ConfigError(f"training.points entries must be [g, eigenstate_index] pairs, got {item!r}")
        pairs.append((float(item[0]), item[1]))
    try:
        return TrainingSpec(tuple(pairs))
    except ValueError as exc:
        raise ConfigError(f"training.points: {exc}") from None


def _parse_targets(doc: dict) -> tuple[float, ...]:
    sec = _section(doc, "targets", {"values", "start", "stop", "count"})
    has_values = "values" in sec
    has_grid = any(k in sec for k in ("start", "stop", "count"))
    if has_values and has_grid:
        raise ConfigError("[targets] must use either values or start/stop/count, not both")
    if has_values:
        values = sec["values"]
        if not isinstance(values, list) or not values:
            raise ConfigError("targets.values must be a non-empty list of numbers")
        out = []
        for v in values:
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ConfigError(f"targets.values entries must be numbers, got {v!r}")
            out.append(float(v))
        return tuple(out)
    if not has_grid:
        raise ConfigError("[targets] requires either values or start/stop/count")
    for key in ("start", "stop", "count"):
        if key not in sec:
            raise ConfigError(f"targets.{key} is required for the grid form")
    start = _real(sec, "targets", "start")
    stop = _real(sec, "targets", "stop")
    count = _integer(sec, "targets", "count")
    if count < 2:
        raise ConfigError(f"targets.count must be >= 2, got {count}")
    return tuple(float(x) for x in np.linspace(start, stop, count))


def _parse_measurement(doc: dict) -> MeasurementConfig:
    sec = _section(doc, "measurement", {"mode", "shots", "seed", "mitigate", "noise"})
    mode = sec.get("mode", "exact")
    if mode not in ("exact", "shots"):
        raise ConfigError(f"measurement.mode must be 'exact' or 'shots', got {mode!r}")
    shots = _integer(sec, "measurement", "shots", 20_000)
    seed = _integer(sec, "measurement", "seed", 0)
    mitigate = _boolean(sec, "measurement", "mitigate", False)
    noise = None
    if "noise" in sec:
        nsec = sec["noise"]
        if not isinstance(nsec, dict):
            raise ConfigError("measurement.noise must be a table with eps01 and eps10")
        unknown = sorted(set(nsec) - {"eps01", "eps10"})
        if unknown:
            raise ConfigError(f"unknown key(s) in measurement.noise: {', '.join(unknown)}")
        try:
            noise = ReadoutNoise(
                eps01=_real(nsec, "measurement.noise", "eps01", 0.0),
                eps10=_real(nsec, "measurement.noise", "eps10", 0.0),
            )
        except ValueError as exc:
            raise ConfigError(f"measurement.noise: {exc}") from None
    try:
        return MeasurementConfig(mode=mode, shots=shots, seed=seed, noise=noise, mitigate=mitigate)
    except ValueError as exc:
        raise ConfigError(f"[measurement]: {exc}") from None


def parse_config(text: str) -> SweepConfig:
    """Parse and fully validate a TOML sweep description.

    Unknown keys are rejected.  Defaults: measurement.mode = "exact",
    gevp_eps per measurement mode (1e-12 exact / 1e-2 shots),
    lcu_verify = false, compare_exact = true, n_levels_reported = number
    of training points, output = "sweep.csv".
    """
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"TOML parse error: {exc}") from None
    unknown = sorted(set(doc) - {"model", "training", "targets", "measurement", "run"})
    if unknown:
        raise ConfigError(f"unknown top-level section(s): {', '.join(unknown)}")
    model = _parse_model(doc)
    training = _parse_training(doc)
    targets = _parse_targets(doc)
    measurement = _parse_measurement(doc)
    sec = _section(doc, "run", {"gevp_eps", "lcu_verify", "compare_exact", "n_levels_reported", "output"})
    gevp_eps = _real(sec, "run", "gevp_eps", default_eps(measurement.mode))
    if not 0.0 <= gevp_eps < 1.0:
        raise ConfigError(f"run.gevp_eps must lie in [0, 1), got {gevp_eps}")
    n_levels = _integer(sec, "run", "n_levels_reported", len(training))
    if n_levels < 1:
        raise ConfigError(f"run.n_levels_reported must be >= 1, got {n_levels}")
    output = sec.get("output", "sweep.csv")
    if not isinstance(output, str) or not output:
        raise ConfigError(f"run.output must be a non-empty path string, got {output!r}")
    return SweepConfig(
        model=model,
        training=training,
        targets=targets,
        measurement=measurement,
        gevp_eps=gevp_eps,
        lcu_verify=_boolean(sec, "run", "lcu_verify", False),
        compare_exact=_boolean(sec, "run", "compare_exact", True),
        n_levels_reported=n_levels,
        output=output,
    )


def build_model(spec: ModelSpec) -> ParamHamiltonian:
    """Instantiate the configured Hamiltonian (reads the H2 table from disk)."""
    if spec.kind == "xy":
        return build_xy(spec.n, J=spec.J, Bx=spec.Bx, bc=spec.bc)
    if spec.kind == "xxz":
        return build_xxz(spec.n, J=spec.J, bc=spec.bc)
    return build_h2(load_h2_table(spec.table))


def _fmt(value: float | None) -> str:
    return "" if value is None else f"{value:.12g}"


def render_csv(rows) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.g:.12g},{r.level},{_fmt(r.e_ec)},{r.retained_rank},"
            f"{_fmt(r.e_exact)},{_fmt(r.abs_err)},{_fmt(r.e_lcu)},{_fmt(r.lcu_success_prob)}"
        )
    return "\n".join(lines) + "\n"


def run_sweep(
    cfg: SweepConfig,
    out_path: str | None = None,
    dump_path: str | None = None,
    seed: int | None = None,
) -> SweepResult:
    """Run the full EC pipeline over the configured target grid.

    The training set is built and the subspace matrices are measured
    exactly once; every target point is served from the cached T^k
    matrices.  Writes the CSV and returns a summary.
    """
    measurement = cfg.measurement if seed is None else replace(cfg.measurement, seed=seed)
    try:
        H = build_model(cfg.model)
        ts = build_training_set(H, cfg.training)
        sm = measure_subspace(ts, H, measurement)
    except (ValueError, KeyError, OSError) as exc:
        raise SweepRuntimeError(f"setup failed: {exc}") from exc
    if dump_path is not None:
        dump_matrices(sm, H, dump_path)

    rows: list[SweepRow] = []
    ranks: list[int] = []
    max_err0: float | None = None
    for g in cfg.targets:
        try:
            Hmat, Smat = assemble(sm, H, g)
            sol = solve_gevp(Hmat, Smat, cfg.gevp_eps)
            n_levels = min(sol.retained_rank, cfg.n_levels_reported)
            exact_energies = None
            if cfg.compare_exact:
                exact_energies = np.linalg.eigvalsh(dense_matrix(H, g))[:n_levels]
            e_lcu = lcu_prob = None
            if cfg.lcu_verify:
                prepared = lcu_combine(ts, sol.ground_coeffs)
                e_lcu = energy_expectation(prepared.state, H, g)
                lcu_prob = prepared.success_probability
        except Exception as exc:
            raise SweepRuntimeError(f"target g={g:.12g}: {exc}") from exc
        ranks.append(sol.retained_rank)
        for level in range(n_levels):
            e_exact = float(exact_energies[level]) if exact_energies is not None else None
            abs_err = abs(sol.energies[level] - e_exact) if e_exact is not None else None
            if level == 0 and abs_err is not None:
                max_err0 = abs_err if max_err0 is None else max(max_err0, abs_err)
            rows.append(
                SweepRow(
                    g=g,
                    level=level,
                    e_ec=sol.energies[level],
                    retained_rank=sol.retained_rank,
                    e_exact=e_exact,
                    abs_err=abs_err,
                    e_lcu=e_lcu if level == 0 else None,
                    lcu_success_prob=lcu_prob if level == 0 else None,
                )
            )
    csv_text = render_csv(rows)
    path = Path(out_path if out_path is not None else cfg.output)
    path.write_text(csv_text)
    return SweepResult(
        rows=tuple(rows),
        csv_text=csv_text,
        output_path=str(path),
        retained_ranks=tuple(ranks),
        max_abs_err_level0=max_err0,
        gevp_eps=cfg.gevp_eps,
    )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="eigencont",
        description="Eigenvector continuation sweeps on a statevector simulator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run_parser = sub.add_parser("run", help="run an EC sweep described by a TOML config")
    run_parser.add_argument("config", help="path to the sweep TOML file")
    run_parser.add_argument("--out", default=None, help="override the configured CSV output path")
    run_parser.add_argument(
        "--dump-matrices", default=None, metavar="PATH",
        help="also write the measured S and T^k matrices as JSON",
    )
    run_parser.add_argument("--seed", type=int, default=None, help="override the configured seed")
    args = parser.parse_args(argv)

    try:
        text = Path(args.config).read_text()
    except OSError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        cfg = parse_config(text)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        result = run_sweep(cfg, out_path=args.out, dump_path=args.dump_matrices, seed=args.seed)
    except SweepRuntimeError as exc:
        print(f"runtime error: {exc}", file=sys.stderr)
        return 3

    ranks = result.retained_ranks
    print(f"wrote {result.output_path} ({len(result.rows)} rows, {len(ranks)} targets)")
    print(f"gevp threshold: {result.gevp_eps:.3g}; retained rank: min {min(ranks)}, max {max(ranks)}")
    if result.max_abs_err_level0 is not None:
        print(f"max |E_ec - E_exact| at level 0: {result.max_abs_err_level0:.6g}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
