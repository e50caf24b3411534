"""JSON interchange for every schema the command line speaks.

Conventions: rationals travel as native ints when integral and as "p/q"
strings otherwise; parsers accept both forms (plus "p" strings). Floats are
rejected - there is no inexact mode. Schema problems raise SchemaError
naming the offending field.
"""

from __future__ import annotations

from .cuts import CornerInstance, Cut, SFreeBody, make_body
from .polyhedra import HPolyhedron, VPolytope, normalize
from .rationals import json_scalar, parse_rational, vector


class SchemaError(ValueError):
    """Malformed input document; the message names the field."""


def _fail(path: str, problem: str):
    raise SchemaError(f"field '{path}': {problem}")


def _require(obj, key: str, path: str):
    if not isinstance(obj, dict):
        _fail(path or key, "expected an object")
    if key not in obj:
        _fail(f"{path}{key}", "missing")
    return obj[key]


def scalar_from_json(value, path: str):
    try:
        return parse_rational(value)
    except ValueError as exc:
        _fail(path, str(exc))


def vector_from_json(value, path: str, dim: int | None = None):
    if not isinstance(value, list):
        _fail(path, "expected a list")
    if dim is not None and len(value) != dim:
        _fail(path, f"expected {dim} entries, got {len(value)}")
    return tuple(
        scalar_from_json(v, f"{path}[{i}]") for i, v in enumerate(value)
    )


def vector_list_from_json(value, path: str, dim: int | None = None):
    if not isinstance(value, list):
        _fail(path, "expected a list")
    return tuple(
        vector_from_json(row, f"{path}[{i}]", dim)
        for i, row in enumerate(value)
    )


def _dim_from_json(obj, path: str) -> int:
    dim = _require(obj, "dim", path)
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        _fail(f"{path}dim", "expected a positive integer")
    return dim


def vector_to_json(v) -> list:
    return [json_scalar(x) for x in v]


def vector_list_to_json(vs) -> list:
    return [vector_to_json(v) for v in vs]


def polyhedron_from_json(obj) -> HPolyhedron:
    """{"dim", "rows", "rhs"} -> canonical set (normalization included)."""
    dim = _dim_from_json(obj, "")
    rows = vector_list_from_json(_require(obj, "rows", ""), "rows", dim)
    rhs = vector_from_json(_require(obj, "rhs", ""), "rhs", len(rows))
    return normalize(rows, rhs)


def polyhedron_to_json(h: HPolyhedron) -> dict:
    return {
        "dim": h.dim,
        "rows": vector_list_to_json(h.rows),
        "rhs": [1] * len(h.rows),
    }


def vpolytope_to_json(v: VPolytope) -> dict:
    return {"dim": v.dim, "points": vector_list_to_json(v.points)}


def points_from_json(obj, dim: int):
    return vector_list_from_json(_require(obj, "points", ""), "points", dim)


def corner_instance_from_json(obj) -> CornerInstance:
    """{"dim", "f", "rays", "P": {"rows", "rhs"}}; "P" may be absent or null
    for the whole space."""
    dim = _dim_from_json(obj, "")
    f = vector_from_json(_require(obj, "f", ""), "f", dim)
    rays = vector_list_from_json(_require(obj, "rays", ""), "rays", dim)
    p_rows: tuple = ()
    p_rhs: tuple = ()
    if obj.get("P") is not None:
        p = obj["P"]
        p_rows = vector_list_from_json(_require(p, "rows", "P."), "P.rows", dim)
        p_rhs = vector_from_json(_require(p, "rhs", "P."), "P.rhs", len(p_rows))
    try:
        return CornerInstance(dim, f, rays, p_rows, p_rhs)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def corner_instance_to_json(inst: CornerInstance) -> dict:
    doc = {
        "dim": inst.dim,
        "f": vector_to_json(inst.f),
        "rays": vector_list_to_json(inst.rays),
        "P": None,
    }
    if inst.p_rows:
        doc["P"] = {
            "rows": vector_list_to_json(inst.p_rows),
            "rhs": vector_to_json(inst.p_rhs),
        }
    return doc


def body_from_json(obj, f) -> SFreeBody:
    """{"rows", "rhs"} in x-space; the anchor comes from the instance."""
    rows = vector_list_from_json(_require(obj, "rows", "body."), "body.rows", len(f))
    rhs = vector_from_json(_require(obj, "rhs", "body."), "body.rhs", len(rows))
    return make_body(rows, rhs, f)


def body_to_json(body: SFreeBody) -> dict:
    return {
        "rows": vector_list_to_json(body.rows),
        "rhs": vector_to_json(body.rhs),
    }


def cut_from_json(obj) -> Cut:
    alpha = vector_from_json(_require(obj, "alpha", "cut."), "cut.alpha")
    provenance = obj.get("provenance", "")
    if not isinstance(provenance, str):
        _fail("cut.provenance", "expected a string")
    return Cut(alpha=alpha, provenance=provenance)


def cut_to_json(cut: Cut) -> dict:
    return {"alpha": vector_to_json(cut.alpha), "provenance": cut.provenance}


def lp_to_json(lp) -> dict:
    """Debug dump of a program; not an input schema."""
    return {
        "direction": lp.direction,
        "objective": vector_to_json(lp.objective),
        "rows": [
            {"coeffs": vector_to_json(c), "rel": rel, "rhs": json_scalar(b)}
            for c, rel, b in lp.rows
        ],
        "bounds": list(lp.bounds),
    }
