"""JSON wire formats. Complex numbers are two-element [re, im] arrays;
every emitted document carries the schema tag "polygeom/1".
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .errors import InvalidInput
from .poly import Polynomial
from .regions import (
    DISK,
    EXTERIOR,
    HALFPLANE,
    CircularRegion,
    Disk,
    disk,
    exterior_disk,
    half_plane,
)
from .rootfind import RootSet

SCHEMA = "polygeom/1"


def complex_to_json(z: complex) -> list[float]:
    return [z.real, z.imag]


def complex_from_json(v: Any) -> complex:
    if not (isinstance(v, (list, tuple)) and len(v) == 2):
        raise InvalidInput(f"expected [re, im], got {v!r}")
    return complex(float(v[0]), float(v[1]))


def poly_to_json(p: Polynomial) -> dict:
    return {"coeffs": [complex_to_json(c) for c in p.coeffs]}


def poly_from_json(d: dict) -> Polynomial:
    if "coeffs" not in d:
        raise InvalidInput("polynomial JSON needs a 'coeffs' field")
    return Polynomial([complex_from_json(c) for c in d["coeffs"]])


def points_to_json(points: Sequence[complex]) -> list[list[float]]:
    return [complex_to_json(z) for z in points]


def points_from_json(v: Any) -> list[complex]:
    if isinstance(v, dict):
        v = v.get("points")
    if not isinstance(v, list):
        raise InvalidInput("points JSON must be a list of [re, im] pairs")
    return [complex_from_json(z) for z in v]


def region_to_json(r: CircularRegion) -> dict:
    out: dict[str, Any] = {"kind": r.kind, "closed": r.closed}
    if r.kind in (DISK, EXTERIOR):
        out["center"] = complex_to_json(r.center)
        out["radius"] = r.radius
    else:
        out["direction"] = complex_to_json(r.direction)
        out["offset"] = r.offset
    return out


def region_from_json(d: dict) -> CircularRegion:
    kind = d.get("kind")
    closed = bool(d.get("closed", True))
    if kind == DISK:
        return disk(complex_from_json(d["center"]), float(d["radius"]), closed)
    if kind == EXTERIOR:
        return exterior_disk(complex_from_json(d["center"]), float(d["radius"]), closed)
    if kind == HALFPLANE:
        return half_plane(complex_from_json(d["direction"]), float(d["offset"]), closed)
    raise InvalidInput(f"unknown region kind {kind!r}")


def disk_to_json(d: Disk) -> dict:
    return {"center": complex_to_json(d.center), "radius": d.radius}


def disk_from_json(d: dict) -> Disk:
    return Disk(complex_from_json(d["center"]), float(d["radius"]))


def rootset_to_json(rs: RootSet) -> dict:
    return {
        "schema": SCHEMA,
        "roots": points_to_json(rs.roots),
        "residuals": list(rs.residuals),
        "clusters": [
            {"representative": complex_to_json(rep), "multiplicity": mult}
            for rep, mult in rs.clusters
        ],
    }


def dumps(obj: Any) -> str:
    """Canonical serialization: sorted keys, minimal separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def load_file(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)
