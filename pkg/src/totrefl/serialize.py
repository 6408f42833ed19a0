"""JSON documents for tuples, matrices over S_i and modules.

Scalars are always strings so that exact values survive the round trip.
"""

from __future__ import annotations

import json

from .algebra import Ring, SElement, parse_element
from .field import FieldSpec, KMatrix
from .linmat import LinearMatrix, SMatrix
from .modrep import FDModule
from .tuples import MatrixTuple

SCHEMA_VERSION = "1"


class SchemaError(ValueError):
    pass


def _require(doc, key, kind):
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    if key not in doc:
        raise SchemaError(f"missing key {key!r}")
    v = doc[key]
    if kind is int and (not isinstance(v, int) or isinstance(v, bool)):
        raise SchemaError(f"{key!r} must be an integer")
    if kind is not int and not isinstance(v, kind):
        raise SchemaError(f"{key!r} must be of type {kind.__name__}")
    return v


def _version(doc):
    v = doc.get("schema_version", SCHEMA_VERSION)
    if v != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {v!r}")


def _ring(doc):
    try:
        field = FieldSpec.from_name(_require(doc, "field", str))
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    i = _require(doc, "i", int)
    if i < 2:
        raise SchemaError("i must be at least 2")
    return Ring(i, field)


def grid_to_json(m: KMatrix):
    f = m.field
    return [[f.format(v) for v in r] for r in m.rows]


def grid_from_json(field, grid, nrows, ncols, what="grid"):
    if not isinstance(grid, list) or len(grid) != nrows:
        raise SchemaError(f"{what} must have {nrows} rows")
    rows = []
    for r in grid:
        if not isinstance(r, list) or len(r) != ncols:
            raise SchemaError(f"{what} rows must have {ncols} entries")
        row = []
        for v in r:
            if not isinstance(v, str):
                raise SchemaError(f"{what} entries must be strings, got {v!r}")
            try:
                row.append(field.parse(v))
            except ValueError as exc:
                raise SchemaError(str(exc)) from None
        rows.append(tuple(row))
    return KMatrix(field, tuple(rows), ncols)


# -- tuples --

def tuple_to_json(t: MatrixTuple):
    return {
        "schema_version": SCHEMA_VERSION,
        "field": t.field.name,
        "i": t.ring.i,
        "n": t.n,
        "B": [grid_to_json(b) for b in t.B],
    }


def tuple_from_json(doc) -> MatrixTuple:
    _version(doc)
    R = _ring(doc)
    n = _require(doc, "n", int)
    if n < 1:
        raise SchemaError("n must be positive")
    grids = _require(doc, "B", list)
    if len(grids) != R.i:
        raise SchemaError(f"B must hold {R.i} matrices")
    return MatrixTuple(R, tuple(grid_from_json(R.field, g, n, n, f"B[{k}]") for k, g in enumerate(grids)))


# -- linear matrices --

def linear_to_json(d: LinearMatrix):
    return {
        "schema_version": SCHEMA_VERSION,
        "field": d.ring.field.name,
        "i": d.ring.i,
        "n": d.n,
        "X": grid_to_json(d.X),
        "Y": [grid_to_json(y) for y in d.Y],
    }


def linear_from_json(doc) -> LinearMatrix:
    _version(doc)
    R = _ring(doc)
    n = _require(doc, "n", int)
    if n < 1:
        raise SchemaError("n must be positive")
    X = grid_from_json(R.field, _require(doc, "X", list), n, n, "X")
    Ys = _require(doc, "Y", list)
    if len(Ys) != R.i:
        raise SchemaError(f"Y must hold {R.i} matrices")
    return LinearMatrix(R, n, X, tuple(grid_from_json(R.field, g, n, n, f"Y[{k}]") for k, g in enumerate(Ys)))


# -- general matrices over S_i --

def element_to_json(s: SElement):
    f = s.ring.field
    return {name: f.format(c) for name, c in zip(s.ring.monomials, s.coeffs) if c != 0}


def element_from_json(ring, obj) -> SElement:
    if isinstance(obj, str):
        try:
            return parse_element(ring, obj)
        except (ValueError, KeyError) as exc:
            raise SchemaError(str(exc)) from None
    if not isinstance(obj, dict):
        raise SchemaError("ring elements are coefficient objects or expressions")
    coeffs = {}
    for name, v in obj.items():
        if name not in ring.monomials:
            raise SchemaError(f"unknown monomial {name!r}")
        if not isinstance(v, str):
            raise SchemaError("coefficients must be strings")
        try:
            coeffs[name] = ring.field.parse(v)
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
    return ring.element(coeffs)


def smatrix_to_json(m: SMatrix):
    return {
        "schema_version": SCHEMA_VERSION,
        "field": m.ring.field.name,
        "i": m.ring.i,
        "rows": m.nrows,
        "cols": m.ncols,
        "entries": [[element_to_json(e) for e in row] for row in m.entries()],
    }


def smatrix_from_json(doc) -> SMatrix:
    _version(doc)
    R = _ring(doc)
    nrows = _require(doc, "rows", int)
    ncols = _require(doc, "cols", int)
    grid = _require(doc, "entries", list)
    if len(grid) != nrows or any(not isinstance(r, list) or len(r) != ncols for r in grid):
        raise SchemaError(f"entries must be a {nrows} x {ncols} grid")
    return SMatrix.from_entries(R, [[element_from_json(R, e) for e in r] for r in grid], ncols)


def matrix_from_json(doc):
    """A LinearMatrix document (has "X") or an SMatrix document (has "entries")."""
    if isinstance(doc, dict) and "X" in doc:
        return linear_from_json(doc)
    if isinstance(doc, dict) and "entries" in doc:
        return smatrix_from_json(doc)
    raise SchemaError("matrix documents need either 'X'/'Y' or 'entries'")


# -- modules --

def module_to_json(m: FDModule):
    return {
        "schema_version": SCHEMA_VERSION,
        "field": m.ring.field.name,
        "i": m.ring.i,
        "dim": m.dim,
        "act_x": grid_to_json(m.act_x),
        "act_y": [grid_to_json(a) for a in m.act_y],
    }


def module_from_json(doc) -> FDModule:
    _version(doc)
    R = _ring(doc)
    dim = _require(doc, "dim", int)
    ax = grid_from_json(R.field, _require(doc, "act_x", list), dim, dim, "act_x")
    ays = _require(doc, "act_y", list)
    if len(ays) != R.i:
        raise SchemaError(f"act_y must hold {R.i} matrices")
    return FDModule(R, dim, ax, tuple(grid_from_json(R.field, g, dim, dim, "act_y") for g in ays))


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from None
