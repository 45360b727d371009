"""JSON record formats for functions, operators, recovery reports, and truth sidecars.

All complex values are stored as [re, im] pairs in row-major element-index
order.  Python's float serialization emits shortest round-trip decimals, so
every finite double survives a save/load cycle bit-exactly.  Non-finite
values are rejected in both directions.

Function file:   {"group": {"orders": [...]}, "side": "primal"|"dual",
                  "values": [[re, im], ...]}
Operator file:   {"group": ..., "input_side": ..., "output_side": ...,
                  "conjugate_input": bool, "matrix": [[[re, im], ...], ...]}
                 meaning apply(f) = matrix @ (conj(f) if conjugate_input else f)
Report file:     {"group": ..., "psi": [...], "conjugation": bool,
                  "residual": float, "m_samples": ..., "diagnostics": {...},
                  "hypothesis_errors": {...}|null, "version": str, "seed": int}
Truth sidecar:   {"group": ..., "psi": [...], "conjugation": bool, "seed": int}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

import numpy as np

from .errors import FileFormatError
from .functions import SIDES, GFunction
from .groups import Group
from .operators import Operator

PathLike = Union[str, Path]


def _reject_constant(token: str):
    raise FileFormatError(f"non-finite number {token!r} is not allowed in record files")


def _load_json(path: PathLike) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FileFormatError(f"{path}: top-level value must be an object")
    return data


def _dump_json(path: PathLike, payload: dict) -> None:
    Path(path).write_text(json.dumps(payload, allow_nan=False, indent=1) + "\n")


def _parse_group(data: dict, path: PathLike) -> Group:
    record = data.get("group")
    if not isinstance(record, dict) or "orders" not in record:
        raise FileFormatError(f'{path}: missing "group" record with an "orders" list')
    orders = record["orders"]
    if not isinstance(orders, list) or not orders:
        raise FileFormatError(f'{path}: "orders" must be a nonempty list')
    try:
        return Group(tuple(orders))
    except Exception as exc:
        raise FileFormatError(f"{path}: bad group orders {orders!r}: {exc}") from exc


def _parse_side(value, path: PathLike, key: str) -> str:
    if value not in SIDES:
        raise FileFormatError(f'{path}: "{key}" must be one of {SIDES}, got {value!r}')
    return value


def _pair_to_complex(pair, path: PathLike) -> complex:
    if (
        not isinstance(pair, list)
        or len(pair) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
    ):
        raise FileFormatError(f"{path}: complex values must be [re, im] number pairs, got {pair!r}")
    value = complex(float(pair[0]), float(pair[1]))
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise FileFormatError(f"{path}: non-finite value {pair!r}")
    return value


def _complex_to_pair(value: complex) -> list[float]:
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise FileFormatError(f"refusing to serialize non-finite value {value!r}")
    return [float(value.real), float(value.imag)]


def _parse_values(raw, count: int, path: PathLike) -> np.ndarray:
    if not isinstance(raw, list) or len(raw) != count:
        raise FileFormatError(
            f"{path}: expected {count} values, got "
            f"{len(raw) if isinstance(raw, list) else type(raw).__name__}"
        )
    return np.asarray([_pair_to_complex(p, path) for p in raw], dtype=np.complex128)


def save_function(path: PathLike, f: GFunction) -> None:
    _dump_json(
        path,
        {
            "group": {"orders": list(f.group.orders)},
            "side": f.side,
            "values": [_complex_to_pair(v) for v in f.values],
        },
    )


def load_function(path: PathLike) -> GFunction:
    data = _load_json(path)
    group = _parse_group(data, path)
    side = _parse_side(data.get("side"), path, "side")
    values = _parse_values(data.get("values"), group.size, path)
    return GFunction(group, side, values)


def save_operator(path: PathLike, op: Operator) -> None:
    if op.matrix is None:
        raise FileFormatError("operator has no serialized matrix form")
    _dump_json(
        path,
        {
            "group": {"orders": list(op.group.orders)},
            "input_side": op.input_side,
            "output_side": op.output_side,
            "conjugate_input": bool(op.conjugate_input),
            "matrix": [[_complex_to_pair(v) for v in row] for row in op.matrix],
        },
    )


def load_operator(path: PathLike) -> Operator:
    data = _load_json(path)
    group = _parse_group(data, path)
    input_side = _parse_side(data.get("input_side"), path, "input_side")
    output_side = _parse_side(data.get("output_side"), path, "output_side")
    conjugate_input = data.get("conjugate_input")
    if not isinstance(conjugate_input, bool):
        raise FileFormatError(f'{path}: "conjugate_input" must be a boolean')
    raw_matrix = data.get("matrix")
    if not isinstance(raw_matrix, list) or len(raw_matrix) != group.size:
        raise FileFormatError(f"{path}: matrix must have {group.size} rows")
    matrix = np.stack([_parse_values(row, group.size, path) for row in raw_matrix])
    return Operator.from_matrix(
        group, input_side, output_side, matrix, conjugate_input, label=str(path)
    )


def _parse_permutation(raw, size: int, path: PathLike) -> list[int]:
    if not isinstance(raw, list) or len(raw) != size:
        raise FileFormatError(f'{path}: "psi" must be a permutation list of length {size}')
    try:
        perm = [int(v) for v in raw]
    except (TypeError, ValueError) as exc:
        raise FileFormatError(f'{path}: "psi" entries must be integers') from exc
    if sorted(perm) != list(range(size)):
        raise FileFormatError(f'{path}: "psi" is not a bijection of 0..{size - 1}')
    return perm


def save_report(path: PathLike, payload: dict) -> None:
    _dump_json(path, payload)


def load_report(path: PathLike) -> dict:
    data = _load_json(path)
    group = _parse_group(data, path)
    data["psi"] = _parse_permutation(data.get("psi"), group.size, path)
    if not isinstance(data.get("conjugation"), bool):
        raise FileFormatError(f'{path}: "conjugation" must be a boolean')
    return data


def save_truth(path: PathLike, group: Group, perm, conjugation: bool, seed: int) -> None:
    _dump_json(
        path,
        {
            "group": {"orders": list(group.orders)},
            "psi": [int(p) for p in perm],
            "conjugation": bool(conjugation),
            "seed": int(seed),
        },
    )


def load_truth(path: PathLike) -> dict:
    data = _load_json(path)
    group = _parse_group(data, path)
    perm = _parse_permutation(data.get("psi"), group.size, path)
    if not isinstance(data.get("conjugation"), bool):
        raise FileFormatError(f'{path}: "conjugation" must be a boolean')
    return {"group": group, "psi": perm, "conjugation": data["conjugation"]}
