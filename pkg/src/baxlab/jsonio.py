"""JSON forms for every value type, with validating loaders.

Loaders re-run the type invariants and raise ValueError naming what was
violated, so malformed files fail loudly rather than flow downstream.
"""
from __future__ import annotations

from typing import Any

from .laguerre import LaguerreHistory
from .paths import LatticePath, PathTriple, tlp_parameters
from .perm import Perm, as_permutation
from .qseries import TQPoly


def perm_to_obj(p: Perm) -> list[int]:
    return list(p)


def perm_from_obj(obj: Any) -> Perm:
    """Accept a list of integers, or a digit string for n <= 9."""
    if isinstance(obj, str):
        if not obj or not obj.isdigit():
            raise ValueError(f"compact permutation form must be digits 1-9: {obj!r}")
        if "0" in obj:
            raise ValueError("compact permutation form cannot contain 0")
        return as_permutation(int(ch) for ch in obj)
    if isinstance(obj, list):
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in obj):
            raise ValueError("permutation array must contain only integers")
        return as_permutation(obj)
    raise ValueError(f"expected a JSON array or digit string, got {type(obj).__name__}")


def path_to_obj(path: LatticePath) -> dict:
    return {"start": list(path.start), "steps": path.steps}


def path_from_obj(obj: Any) -> LatticePath:
    if not isinstance(obj, dict) or set(obj) != {"start", "steps"}:
        raise ValueError('a path object needs exactly the keys "start" and "steps"')
    start = obj["start"]
    if (
        not isinstance(start, list)
        or len(start) != 2
        or not all(isinstance(v, int) and not isinstance(v, bool) for v in start)
    ):
        raise ValueError('"start" must be a [x, y] pair of integers')
    if not isinstance(obj["steps"], str):
        raise ValueError('"steps" must be a string over "HV"')
    return LatticePath((start[0], start[1]), obj["steps"])


def triple_to_obj(t: PathTriple) -> dict:
    return {
        "bottom": path_to_obj(t.bottom),
        "middle": path_to_obj(t.middle),
        "top": path_to_obj(t.top),
    }


def triple_from_obj(obj: Any, strict: bool = False) -> PathTriple:
    """Load a triple; with ``strict`` also require vertex-disjointness and
    equal horizontal-step counts."""
    if not isinstance(obj, dict) or set(obj) != {"bottom", "middle", "top"}:
        raise ValueError('a triple object needs exactly the keys "bottom", "middle", "top"')
    t = PathTriple(
        path_from_obj(obj["bottom"]),
        path_from_obj(obj["middle"]),
        path_from_obj(obj["top"]),
    )
    if strict:
        tlp_parameters(t)
    return t


def history_to_obj(h: LaguerreHistory) -> dict:
    return {"word": h.word, "weights": list(h.weights)}


def history_from_obj(obj: Any) -> LaguerreHistory:
    if not isinstance(obj, dict) or set(obj) != {"word", "weights"}:
        raise ValueError('a history object needs exactly the keys "word" and "weights"')
    if not isinstance(obj["word"], str):
        raise ValueError('"word" must be a string over "UDBR"')
    weights = obj["weights"]
    if not isinstance(weights, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in weights
    ):
        raise ValueError('"weights" must be an array of integers')
    return LaguerreHistory(obj["word"], tuple(weights))


def tqpoly_to_obj(poly: TQPoly) -> list[dict]:
    """Term list sorted by (t-degree, q-degree); coefficients as decimal strings."""
    return [{"t": a, "q": b, "c": str(c)} for a, b, c in poly.terms()]


def tqpoly_from_obj(obj: Any) -> TQPoly:
    if not isinstance(obj, list):
        raise ValueError("a polynomial must be an array of term objects")
    coeffs: dict[tuple[int, int], int] = {}
    for term in obj:
        if not isinstance(term, dict) or set(term) != {"t", "q", "c"}:
            raise ValueError('each term needs exactly the keys "t", "q", "c"')
        key = (term["t"], term["q"])
        if key in coeffs:
            raise ValueError(f"duplicate term for degrees {key}")
        coeffs[key] = int(term["c"])
    return TQPoly(coeffs)
