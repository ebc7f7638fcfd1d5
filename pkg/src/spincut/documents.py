"""JSON documents for datasets and cut specifications.

Both formats are plain UTF-8 JSON.  Serialization is canonical (fixed key
order, two-space indent, trailing newline) so equal values always produce
byte-identical documents.

Dataset schema:
    {"half_dimension": int,
     "isolated": [{"weights": [int...], "det_weight": int, "sign": int}...],
     "codim2":   [{"dim": 0|2, "normal_weight": int, "det_weight": int,
                   "sign": int, "chern_L": int?, "chern_N": int?}...]}

Cut specification schema:
    {"assignments": {"<component index>": "plus"|"minus"},
     "reduced": [{"dim": 0} | {"dim": 2, "chern_Lred": int, "chern_Nminus": int}]}

Parsing checks structure and types only; semantic rules (parity, sign values,
index coverage) belong to fixed_points.validate and cutting.build_cut_data.
"""

from __future__ import annotations

import json
from typing import Any

from .cutting import CutSpecification, ReducedComponent
from .fixed_points import Codim2Component, FixedPointData, IsolatedFixedPoint


class DocumentSyntaxError(ValueError):
    """The text is not well-formed JSON; carries line and column."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SchemaError(ValueError):
    """The document shape is wrong; carries the offending field path."""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field


def _load_json(text: str | bytes) -> Any:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from exc


def _require_object(value: Any, path: str, allowed: set[str]) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(path, f"expected an object, got {type(value).__name__}")
    for key in value:
        if key not in allowed:
            raise SchemaError(f"{path}.{key}", "unknown field")
    return value


def _require_int(obj: dict, path: str, key: str) -> int:
    if key not in obj:
        raise SchemaError(f"{path}.{key}", "required field is missing")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{path}.{key}", f"expected an integer, got {value!r}")
    return value


def _optional_int(obj: dict, path: str, key: str) -> int | None:
    if key not in obj:
        return None
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{path}.{key}", f"expected an integer, got {value!r}")
    return value


def _require_list(obj: dict, path: str, key: str) -> list:
    if key not in obj:
        return []
    value = obj[key]
    if not isinstance(value, list):
        raise SchemaError(f"{path}.{key}", f"expected a list, got {type(value).__name__}")
    return value


def parse_dataset(text: str | bytes) -> FixedPointData:
    """Parse a dataset document into FixedPointData (types checked, not semantics)."""
    doc = _require_object(
        _load_json(text), "dataset", {"half_dimension", "isolated", "codim2"}
    )
    half_dimension = _require_int(doc, "dataset", "half_dimension")
    isolated = []
    for i, entry in enumerate(_require_list(doc, "dataset", "isolated")):
        path = f"isolated[{i}]"
        entry = _require_object(entry, path, {"weights", "det_weight", "sign"})
        if "weights" not in entry or not isinstance(entry["weights"], list):
            raise SchemaError(f"{path}.weights", "expected a list of integers")
        weights = []
        for j, w in enumerate(entry["weights"]):
            if isinstance(w, bool) or not isinstance(w, int):
                raise SchemaError(f"{path}.weights[{j}]", f"expected an integer, got {w!r}")
            weights.append(w)
        isolated.append(
            IsolatedFixedPoint(
                weights=tuple(weights),
                det_weight=_require_int(entry, path, "det_weight"),
                sign=_require_int(entry, path, "sign"),
            )
        )
    codim2 = []
    for i, entry in enumerate(_require_list(doc, "dataset", "codim2")):
        path = f"codim2[{i}]"
        entry = _require_object(
            entry, path, {"dim", "normal_weight", "det_weight", "sign", "chern_L", "chern_N"}
        )
        dim = _require_int(entry, path, "dim")
        if dim not in (0, 2):
            raise SchemaError(f"{path}.dim", f"expected 0 or 2, got {dim}")
        codim2.append(
            Codim2Component(
                dim=dim,
                normal_weight=_require_int(entry, path, "normal_weight"),
                det_weight=_require_int(entry, path, "det_weight"),
                sign=_require_int(entry, path, "sign"),
                chern_l=_optional_int(entry, path, "chern_L"),
                chern_n=_optional_int(entry, path, "chern_N"),
            )
        )
    return FixedPointData(
        half_dimension=half_dimension,
        isolated=tuple(isolated),
        codim2=tuple(codim2),
    )


def serialize_dataset(data: FixedPointData) -> str:
    """Canonical document for a dataset; parse_dataset inverts it exactly."""
    doc: dict[str, Any] = {
        "half_dimension": data.half_dimension,
        "isolated": [
            {
                "weights": list(p.weights),
                "det_weight": p.det_weight,
                "sign": p.sign,
            }
            for p in data.isolated
        ],
        "codim2": [],
    }
    for comp in data.codim2:
        entry: dict[str, Any] = {
            "dim": comp.dim,
            "normal_weight": comp.normal_weight,
            "det_weight": comp.det_weight,
            "sign": comp.sign,
        }
        if comp.chern_l is not None:
            entry["chern_L"] = comp.chern_l
        if comp.chern_n is not None:
            entry["chern_N"] = comp.chern_n
        doc["codim2"].append(entry)
    return json.dumps(doc, indent=2) + "\n"


def parse_cut_spec(text: str | bytes) -> CutSpecification:
    """Parse a cut specification document (types checked, not semantics)."""
    doc = _require_object(_load_json(text), "cutspec", {"assignments", "reduced"})
    if "assignments" not in doc or not isinstance(doc["assignments"], dict):
        raise SchemaError("cutspec.assignments", "expected an object")
    assignments: dict[int, str] = {}
    for key, side in doc["assignments"].items():
        path = f"assignments.{key}"
        try:
            index = int(key)
        except ValueError:
            raise SchemaError(path, "component index must be an integer") from None
        if side not in ("plus", "minus"):
            raise SchemaError(path, f'side must be "plus" or "minus", got {side!r}')
        assignments[index] = side
    reduced = []
    for i, entry in enumerate(_require_list(doc, "cutspec", "reduced")):
        path = f"reduced[{i}]"
        entry = _require_object(entry, path, {"dim", "chern_Lred", "chern_Nminus"})
        dim = _require_int(entry, path, "dim")
        if dim not in (0, 2):
            raise SchemaError(f"{path}.dim", f"expected 0 or 2, got {dim}")
        reduced.append(
            ReducedComponent(
                dim=dim,
                chern_lred=_optional_int(entry, path, "chern_Lred"),
                chern_nminus=_optional_int(entry, path, "chern_Nminus"),
            )
        )
    return CutSpecification(assignments=assignments, reduced=tuple(reduced))


def serialize_cut_spec(spec: CutSpecification) -> str:
    """Canonical document for a cut specification."""
    doc: dict[str, Any] = {
        "assignments": {
            str(index): side for index, side in spec.assignments
        },
        "reduced": [],
    }
    for comp in spec.reduced:
        entry: dict[str, Any] = {"dim": comp.dim}
        if comp.chern_lred is not None:
            entry["chern_Lred"] = comp.chern_lred
        if comp.chern_nminus is not None:
            entry["chern_Nminus"] = comp.chern_nminus
        doc["reduced"].append(entry)
    return json.dumps(doc, indent=2) + "\n"
