"""JSON interchange for complexes, fields and Morse functions."""

from __future__ import annotations

import json

from .complexes import Cell, RegularComplex
from .fields import make_field


def complex_to_dict(K):
    return {
        "name": K.name,
        "cells": [
            {
                "id": c.id,
                "dim": c.dim,
                "label": c.label,
                "facets": sorted(K.facets(c.id)),
            }
            for c in K.cells
        ],
    }


def complex_to_json(K):
    return json.dumps(complex_to_dict(K), sort_keys=True, indent=2) + "\n"


def complex_from_dict(data):
    cells = [Cell(c["id"], c["dim"], c["label"]) for c in data["cells"]]
    facets = {c["id"]: set(c["facets"]) for c in data["cells"]}
    return RegularComplex(data["name"], cells, facets)


def complex_from_json(text):
    return complex_from_dict(json.loads(text))


def field_to_dict(K, V):
    return {
        "complex": K.name,
        "pairs": [[l, u] for l, u in sorted(V.pairs)],
    }


def field_to_json(K, V):
    return json.dumps(field_to_dict(K, V), sort_keys=True, indent=2) + "\n"


def field_from_dict(K, data):
    if data.get("complex") != K.name:
        raise ValueError(
            f"field file targets complex {data.get('complex')!r}, got {K.name!r}")
    return make_field(K, [tuple(p) for p in data["pairs"]])


def field_from_json(K, text):
    return field_from_dict(K, json.loads(text))


def morse_function_to_json(K, f):
    """Map of cell label to exact rational value rendered as "p/q"."""
    values = {
        K.label(c): f"{v.numerator}/{v.denominator}" for c, v in f.items()}
    return json.dumps(values, sort_keys=True, indent=2) + "\n"
