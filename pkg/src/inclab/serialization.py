"""Reading and writing ``.inc.json`` instance files.

Schema (version 1): rationals are ``[numerator, denominator]`` pairs,
points are arrays of rationals, flats are ``{"A": rows, "b": vector}``
with ``A`` row-major.  Generated instances carry a ``construction`` block
with the verified bookkeeping so they can be re-checked and embedded.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .constructions import ConstructionOutput
from .errors import InvalidInput
from .geometry import Flat, IntVector, RatPoint
from .incidence import IncidenceInstance

SCHEMA_VERSION = 1
FILE_SUFFIX = ".inc.json"


def _enc(x: Fraction) -> list[int]:
    f = Fraction(x)
    return [f.numerator, f.denominator]


def _dec(pair: Any) -> Fraction:
    if not (isinstance(pair, list) and len(pair) == 2):
        raise InvalidInput(f"expected [numerator, denominator], got {pair!r}")
    return Fraction(int(pair[0]), int(pair[1]))


def instance_to_dict(
    inst: IncidenceInstance, construction: ConstructionOutput | None = None
) -> dict:
    doc: dict = {
        "schema": SCHEMA_VERSION,
        "kind": "incidence-instance",
        "ambient_dim": inst.ambient_dim,
        "s": inst.s,
        "t": inst.t,
        "points": [[_enc(c) for c in p.coords] for p in inst.points],
        "flats": [
            {
                "A": [[_enc(a) for a in row] for row in f.equations],
                "b": [_enc(c) for c in f.rhs],
            }
            for f in inst.flats
        ],
    }
    if construction is not None:
        doc["construction"] = {
            "variant": construction.variant,
            "normals_used": [list(v.coords) for v in construction.normals_used],
            "t_measured": construction.t_measured,
            "t_verified": construction.t_verified,
            "predicted_incidences": construction.predicted_incidences,
            "padding_start": construction.padding_start,
            "core_point_count": construction.core_point_count,
            "seed": construction.seed,
            "inner_ambient_dim": construction.inner_ambient_dim,
            "notes": list(construction.notes),
        }
    return doc


def dict_to_instance(doc: dict) -> IncidenceInstance:
    if doc.get("schema") != SCHEMA_VERSION:
        raise InvalidInput(f"unsupported schema {doc.get('schema')!r}")
    dim = int(doc["ambient_dim"])
    points = tuple(RatPoint([_dec(c) for c in row]) for row in doc["points"])
    flats = tuple(
        Flat(
            dim,
            [[_dec(a) for a in row] for row in spec["A"]],
            [_dec(c) for c in spec["b"]],
        )
        for spec in doc["flats"]
    )
    return IncidenceInstance(points, flats, int(doc.get("s", 2)), int(doc.get("t", 1)))


def dict_to_construction(doc: dict) -> ConstructionOutput:
    block = doc.get("construction")
    if block is None:
        raise InvalidInput("file has no construction block")
    inst = dict_to_instance(doc)
    inner = block.get("inner_ambient_dim")
    return ConstructionOutput(
        variant=block["variant"],
        ambient_dim=inst.ambient_dim,
        points=inst.points,
        flats=inst.flats,
        normals_used=tuple(IntVector(v) for v in block["normals_used"]),
        t_measured=int(block["t_measured"]),
        t_verified=bool(block["t_verified"]),
        predicted_incidences=int(block["predicted_incidences"]),
        padding_start=int(block["padding_start"]),
        core_point_count=int(block["core_point_count"]),
        seed=int(block["seed"]),
        inner_ambient_dim=None if inner is None else int(inner),
        notes=tuple(block.get("notes", ())),
    )


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def save_instance(
    path: str | Path,
    inst: IncidenceInstance,
    construction: ConstructionOutput | None = None,
) -> Path:
    path = Path(path)
    path.write_text(canonical_json(instance_to_dict(inst, construction)))
    return path


def save_construction(
    path: str | Path, out: ConstructionOutput, s: int, t: int
) -> Path:
    inst = IncidenceInstance(out.points, out.flats, s, t)
    return save_instance(path, inst, out)


def load_document(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())


def load_instance(path: str | Path) -> IncidenceInstance:
    return dict_to_instance(load_document(path))


def load_construction(path: str | Path) -> ConstructionOutput:
    return dict_to_construction(load_document(path))
