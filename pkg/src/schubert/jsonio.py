"""JSON forms for the exact types: every number is a string or an int.

Rationals serialize as "p/q" ("p" when q == 1); quadratic irrationals as
{"a": "p/q", "b": "p/q", "d": int}; matrices as row-major nested arrays.
"""

from __future__ import annotations

from fractions import Fraction

from .flags import BilinearForm, Flag, GroupKind
from .grassmann import GrPoint, PermCondition, SchubertCondition, TransversalityCertificate
from .linalg import Matrix, QuadExt
from .poly import PolyQ
from .wronski import EHReport, PolyPlane

__all__ = [
    "rational_to_str",
    "parse_rational",
    "scalar_to_json",
    "scalar_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "kind_to_json",
    "kind_from_json",
    "flag_to_json",
    "flag_from_json",
    "condition_to_json",
    "condition_from_json",
    "perm_condition_to_json",
    "certificate_to_json",
    "grpoint_to_json",
    "poly_to_json",
    "plane_to_json",
    "eh_report_to_json",
]


def rational_to_str(x) -> str:
    return str(Fraction(x))


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(str(s).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: {s!r}") from e


def scalar_to_json(x):
    if isinstance(x, QuadExt):
        if not x.b:
            return rational_to_str(x.a)
        return {"a": rational_to_str(x.a), "b": rational_to_str(x.b), "d": x.d}
    return rational_to_str(x)


def scalar_from_json(v):
    if isinstance(v, dict):
        return QuadExt(parse_rational(v["a"]), parse_rational(v["b"]), int(v["d"]))
    if isinstance(v, (str, int)):
        return parse_rational(v)
    raise ValueError(f"not an exact scalar: {v!r}")


def matrix_to_json(M: Matrix) -> list:
    return [[scalar_to_json(x) for x in row] for row in M.to_rows()]


def matrix_from_json(rows: list) -> Matrix:
    return Matrix([[scalar_from_json(x) for x in row] for row in rows])


def kind_to_json(kind: GroupKind) -> dict:
    key = "m" if kind.tag == "SL" else "n"
    return {"type": kind.tag, key: kind.param}


def kind_from_json(d: dict) -> GroupKind:
    tag = d["type"]
    param = d["m"] if tag == "SL" else d["n"]
    return GroupKind(tag, int(param))


def flag_to_json(f: Flag) -> dict:
    return {"ambient_dim": f.ambient_dim, "basis": matrix_to_json(f.basis)}


def flag_from_json(d: dict) -> Flag:
    return Flag(int(d["ambient_dim"]), matrix_from_json(d["basis"]))


def condition_to_json(c: SchubertCondition) -> dict:
    return {"k": c.k, "m": c.m, "indices": list(c.indices)}


def condition_from_json(d: dict) -> SchubertCondition:
    return SchubertCondition(int(d["k"]), int(d["m"]),
                             tuple(int(i) for i in d["indices"]))


def perm_condition_to_json(c: PermCondition) -> dict:
    return {"m": c.m, "perm": list(c.perm),
            "descent_bound": list(c.descent_bound)}


def certificate_to_json(c: TransversalityCertificate) -> dict:
    return {"transverse": c.transverse, "tangent_codim": c.tangent_codim,
            "codim_sum": c.codim_sum}


def grpoint_to_json(p: GrPoint) -> dict:
    return {"ambient_dim": p.ambient_dim, "k": p.k,
            "basis": matrix_to_json(p.basis)}


def poly_to_json(p: PolyQ) -> list:
    return [scalar_to_json(c) for c in p.coeffs]


def plane_to_json(p: PolyPlane) -> dict:
    return {"m": p.m, "k": p.k, "basis": [poly_to_json(q) for q in p.basis]}


def eh_report_to_json(r: EHReport) -> dict:
    return {"codim": r.codim, "wronski_order": r.wronski_order, "equal": r.equal}


def form_to_json(f: BilinearForm) -> dict:
    return {"kind": f.kind, "gram": matrix_to_json(f.gram)}
