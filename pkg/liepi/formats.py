"""JSON documents for algebras, actions and certificates."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from .action import ActionAlgebra, ActionGenerator, build_action_algebra, operator_generator
from .exceptions import AlgebraMismatch, DimensionMismatch, MalformedInput
from .exponent import Certificate, CertificatePair
from .lie import LieAlgebra, validate_algebra
from .linalg import Subspace, format_rational, parse_rational, rows_of
from .linalg.rational import parse_vector

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def load_json(path: PathLike) -> Dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"Invalid JSON: {e.msg} at line {e.lineno}", path=str(path))
    except OSError as e:
        raise MalformedInput(f"Cannot read file: {e.strerror}", path=str(path))
    if not isinstance(data, dict):
        raise MalformedInput("Top-level JSON value must be an object", path=str(path))
    return data


def dump_json(data: Any) -> str:
    """Deterministic JSON rendering."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def _require(data: Dict[str, Any], key: str, kind: type, path: Optional[str]) -> Any:
    if key not in data:
        raise MalformedInput(f"Missing field '{key}'", path=path)
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise MalformedInput(f"Field '{key}' must be of type {kind.__name__}", path=path)
    return value


# ----------------------------------------------------------------------
# Algebras
# ----------------------------------------------------------------------


def parse_algebra(data: Dict[str, Any], path: Optional[str] = None, validate: bool = True) -> LieAlgebra:
    """
    Build a LieAlgebra from {"name", "dim", "basis"?, "brackets": [{"i", "j", "value"}]}.

    Omitted pairs are zero. The result is validated unless validate is False.
    """
    name = _require(data, "name", str, path)
    dim = _require(data, "dim", int, path)
    if dim < 0:
        raise MalformedInput(f"Dimension must be nonnegative, got {dim}", path=path)
    labels = data.get("basis")
    if labels is not None and (not isinstance(labels, list) or not all(isinstance(s, str) for s in labels)):
        raise MalformedInput("Field 'basis' must be a list of labels", path=path)

    table: Dict = {}
    for entry in data.get("brackets", []):
        if not isinstance(entry, dict):
            raise MalformedInput("Each bracket entry must be an object", path=path)
        i = _require(entry, "i", int, path)
        j = _require(entry, "j", int, path)
        if i >= j:
            raise MalformedInput(
                f"Bracket ({i}, {j}) must be listed with i < j; [e_j, e_i] follows by antisymmetry",
                path=path,
            )
        if (i, j) in table:
            raise MalformedInput(f"Bracket ({i}, {j}) is listed twice", path=path)
        value: Dict[int, Any] = {}
        for term in _require(entry, "value", list, path):
            if not isinstance(term, list) or len(term) != 2 or not isinstance(term[0], int):
                raise MalformedInput(f"Bracket ({i}, {j}) terms must be [k, \"p/q\"] pairs", path=path)
            k, coefficient = term
            value[k] = value.get(k, 0) + parse_rational(coefficient)
        table[(i, j)] = value

    algebra = LieAlgebra(dim, table, name=name, labels=labels)
    if validate:
        validate_algebra(algebra).raise_if_invalid()
    logger.debug(f"Parsed algebra '{name}' of dim {dim} with {len(table)} brackets")
    return algebra


def parse_algebra_file(path: PathLike, validate: bool = True) -> LieAlgebra:
    return parse_algebra(load_json(path), path=str(path), validate=validate)


def emit_algebra(algebra: LieAlgebra) -> Dict[str, Any]:
    """The document parse_algebra reads back to an equal algebra."""
    return {
        "name": algebra.name,
        "dim": algebra.dim,
        "basis": list(algebra.labels),
        "brackets": [
            {
                "i": i,
                "j": j,
                "value": [[k, format_rational(c)] for k, c in sorted(value.items())],
            }
            for (i, j), value in sorted(algebra.canonical_table().items())
        ],
    }


# ----------------------------------------------------------------------
# Actions
# ----------------------------------------------------------------------


def parse_generator(entry: Dict[str, Any], dim: int, path: Optional[str] = None) -> ActionGenerator:
    name = _require(entry, "name", str, path)
    kind = _require(entry, "kind", str, path)
    matrix = _require(entry, "matrix", list, path)
    if len(matrix) != dim:
        raise DimensionMismatch(
            f"Generator '{name}' has {len(matrix)} rows, algebra has dim {dim}",
            expected=dim, actual=len(matrix),
        )
    rows = []
    for row in matrix:
        if not isinstance(row, list) or len(row) != dim:
            raise DimensionMismatch(
                f"Generator '{name}' has a row of the wrong length",
                expected=dim, actual=len(row) if isinstance(row, list) else None,
            )
        rows.append(parse_vector(row, dim))
    return operator_generator(name, kind, rows, dim)


def parse_action(data: Dict[str, Any], algebra: LieAlgebra, path: Optional[str] = None) -> ActionAlgebra:
    """
    Build the action algebra from {"algebra", "generators": [{"name", "kind", "matrix"}]}.

    Matrices act on coordinate columns.
    """
    declared = _require(data, "algebra", str, path)
    if declared != algebra.name:
        raise AlgebraMismatch(algebra.name, declared)
    generators = [
        parse_generator(entry, algebra.dim, path) for entry in _require(data, "generators", list, path)
    ]
    return build_action_algebra(algebra, generators)


def parse_action_file(path: PathLike, algebra: LieAlgebra) -> ActionAlgebra:
    return parse_action(load_json(path), algebra, path=str(path))


def emit_action(action: ActionAlgebra) -> Dict[str, Any]:
    return {
        "algebra": action.ambient.name,
        "generators": [
            {
                "name": g.name,
                "kind": g.kind,
                "matrix": [[format_rational(v) for v in row] for row in rows_of(g.matrix)],
            }
            for g in action.generators
        ],
    }


# ----------------------------------------------------------------------
# Certificates
# ----------------------------------------------------------------------


def parse_subspace(vectors: Any, dim: int, label: str, path: Optional[str] = None) -> Subspace:
    if not isinstance(vectors, list):
        raise MalformedInput(f"Subspace '{label}' must be a list of coordinate vectors", path=path)
    for v in vectors:
        if not isinstance(v, list):
            raise MalformedInput(f"Subspace '{label}' contains a non-vector entry", path=path)
    return Subspace.span((parse_vector(v, dim) for v in vectors), dim)


def parse_certificate(data: Dict[str, Any], algebra: LieAlgebra, path: Optional[str] = None) -> Certificate:
    dim = algebra.dim
    pairs: List[CertificatePair] = []
    for k, entry in enumerate(_require(data, "pairs", list, path), start=1):
        if not isinstance(entry, dict):
            raise MalformedInput(f"Pair {k} must be an object", path=path)
        pairs.append(CertificatePair(
            I=parse_subspace(entry.get("I", []), dim, f"I_{k}", path),
            J=parse_subspace(entry.get("J", []), dim, f"J_{k}", path),
            T=parse_subspace(entry["T"], dim, f"T_{k}", path) if "T" in entry else None,
        ))
    return Certificate(
        pairs=pairs,
        S=parse_subspace(data["S"], dim, "S", path) if "S" in data else None,
        B=parse_subspace(data["B"], dim, "B", path) if "B" in data else None,
    )


def parse_certificate_file(path: PathLike, algebra: LieAlgebra) -> Certificate:
    return parse_certificate(load_json(path), algebra, path=str(path))
