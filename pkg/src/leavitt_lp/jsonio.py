"""JSON wire formats for elements and core matrices.

Element:
    { "d": int, "components": [ { "degree": int, "level": int,
        "entries": [ { "row": [int..], "col": [int..],
                       "re": "p/q", "im": "p/q" } ] } ] }

Core matrix:
    { "d": int, "m": int, "rows": [[ {"re": "p/q", "im": "p/q"} .. ]] }

Coefficients travel as exact fraction strings so round trips never lose
precision.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict

from .elements import GradedComponent, LeavittElement
from .scalars import GaussianRational

SCHEMA = "leavitt-lp/1"


def _scalar_to_json(z: GaussianRational) -> Dict[str, str]:
    return {"re": str(z.re), "im": str(z.im)}


def _scalar_from_json(obj: Any) -> GaussianRational:
    if isinstance(obj, dict):
        return GaussianRational(Fraction(str(obj.get("re", 0))), Fraction(str(obj.get("im", 0))))
    # bare number: treated as an exact rational via its string form
    return GaussianRational(Fraction(str(obj)))


def element_to_json(a: LeavittElement) -> Dict[str, Any]:
    components = []
    for degree in sorted(a.components):
        comp = a.components[degree]
        entries = [
            {"row": list(row), "col": list(col), **_scalar_to_json(comp.entries[(row, col)])}
            for row, col in sorted(comp.entries)
        ]
        components.append({"degree": degree, "level": comp.level, "entries": entries})
    return {"d": a.d, "components": components}


def element_from_json(obj: Dict[str, Any]) -> LeavittElement:
    if "element" in obj:
        obj = obj["element"]
    if "d" not in obj:
        raise ValueError('element JSON is missing the "d" field')
    d = int(obj["d"])
    components = {}
    for comp in obj.get("components", ()):
        try:
            degree = int(comp["degree"])
            level = int(comp["level"])
            raw_entries = comp.get("entries", ())
        except KeyError as missing:
            raise ValueError(f"component JSON is missing {missing}") from None
        entries = {}
        for e in raw_entries:
            try:
                key = (tuple(int(x) for x in e["row"]), tuple(int(x) for x in e["col"]))
            except KeyError as missing:
                raise ValueError(f"entry JSON is missing {missing}") from None
            coeff = _scalar_from_json(e)
            if key in entries:
                coeff = entries[key] + coeff
            entries[key] = coeff
        if degree in components:
            raise ValueError(f"duplicate degree {degree} in element JSON")
        components[degree] = GradedComponent(degree, level, entries)
    return LeavittElement(d, components)


def corematrix_to_json(d: int, m: int, rows) -> Dict[str, Any]:
    return {
        "d": d,
        "m": m,
        "rows": [[_scalar_to_json(z) for z in row] for row in rows],
    }


def corematrix_from_json(obj: Dict[str, Any]):
    from .uhf import CoreMatrix

    try:
        d = int(obj["d"])
        m = int(obj["m"])
        raw_rows = obj["rows"]
    except KeyError as missing:
        raise ValueError(f"core matrix JSON is missing {missing}") from None
    rows = [[_scalar_from_json(z) for z in row] for row in raw_rows]
    return CoreMatrix(d, m, rows)
