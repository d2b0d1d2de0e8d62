"""Persistence: state files, run records, and sweep tables.

State file schema: {"n_qubits": N, "amplitudes": [[re, im], ...]} with
2^N entries ordered by basis index (qubit 1 = most significant bit).
"""

import csv
import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import (AmplitudeCountError, NormalizationError,
                     StateFileParseError)
from .qstate import PureState

SWEEP_HEADER = ["state", "n", "wre", "wre_per_qubit", "lower_bound", "upper_bound"]


@dataclass(frozen=True)
class RunRecord:
    tool_version: str
    timestamp: str
    state_descriptor: str
    n_qubits: int
    method: str
    value_nats: float
    second_moment: float
    std_error: float
    samples_or_shots: int
    seed: int | None
    wall_time_s: float

    def __post_init__(self):
        numeric = (self.value_nats, self.second_moment, self.std_error,
                   self.wall_time_s)
        if not all(math.isfinite(x) for x in numeric):
            raise ValueError("run record contains non-finite numeric fields")


@dataclass(frozen=True)
class SweepRow:
    state_kind: str
    n: int
    wre: float
    wre_per_qubit: float
    lower_bound: float
    upper_bound: float

    def __post_init__(self):
        if not (self.lower_bound - 1e-9 <= self.wre <= self.upper_bound + 1e-9):
            raise ValueError(f"wre {self.wre} outside bounds "
                             f"[{self.lower_bound}, {self.upper_bound}]")


def load_state_file(path):
    """Load and validate a PureState from the JSON schema above."""
    try:
        with open(path) as fh:
            data = json.load(fh)
        n = int(data["n_qubits"])
        raw = data["amplitudes"]
        pairs = [(float(re), float(im)) for re, im in raw]
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise StateFileParseError(f"{path}: {exc}") from exc
    if n < 1:
        raise StateFileParseError(f"{path}: n_qubits must be >= 1")
    if len(pairs) != 2**n:
        raise AmplitudeCountError(
            f"{path}: expected {2**n} amplitudes for n_qubits={n}, got {len(pairs)}")
    amps = np.array([complex(re, im) for re, im in pairs])
    try:
        return PureState(n, amps)
    except NormalizationError as exc:
        raise NormalizationError(f"{path}: {exc}") from exc


def write_state_file(state, path):
    data = {
        "n_qubits": state.n_qubits,
        "amplitudes": [[z.real, z.imag] for z in state.amplitudes],
    }
    _write_text(path, json.dumps(data))


def write_result_json(record, path):
    _write_text(path, json.dumps(asdict(record), indent=2))


def read_result_json(path):
    try:
        with open(path) as fh:
            return RunRecord(**json.load(fh))
    except (OSError, json.JSONDecodeError, TypeError) as exc:
        raise StateFileParseError(f"{path}: {exc}") from exc


def write_sweep_csv(rows, path):
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(SWEEP_HEADER)
            for row in rows:
                writer.writerow([
                    row.state_kind, row.n,
                    f"{row.wre:.15g}", f"{row.wre_per_qubit:.15g}",
                    f"{row.lower_bound:.15g}", f"{row.upper_bound:.15g}",
                ])
    except OSError as exc:
        raise OSError(f"failed writing sweep CSV to {path}: {exc}") from exc


def _write_text(path, text):
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"failed writing {path}: {exc}") from exc
