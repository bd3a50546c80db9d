"""JSON readers and writers for semigroups, cochains, twists, complexes and
paths.  Rationals travel as "p/q" strings."""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .cochains import RATIONALS, Cochain, make_cochain, mod
from .errors import TailleurError
from .geometry import PlanePolyline, SphereGeodesicPath, unit
from .nerve import SimplicialComplex, complex_from_maximal
from .semigroup import (
    Poset,
    SemigroupTable,
    build_from_table,
    make_poset,
    make_quiver,
    matrix_units,
    monomial_semigroup,
    poset_semigroup,
    quiver_path_semigroup,
)
from .twists import CIRCLE, REAL, Twist, circle_twist, exp_twist


class InvalidInput(TailleurError):
    pass


def frac(x) -> Fraction:
    try:
        return Fraction(str(x).strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidInput(f"not a rational number: {x!r}") from None


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def read_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise InvalidInput(f"{path}: {e}") from None


# --- semigroups ---------------------------------------------------------------


def load_poset(obj: dict) -> Poset:
    return make_poset([str(e) for e in obj["elements"]], [(str(a), str(b)) for a, b in obj.get("relations", [])])


def poset_to_json(p: Poset) -> dict:
    rel = sorted((i, j) for i, j in p.relation if i != j)
    return {"elements": list(p.elements), "relations": [list(r) for r in rel]}


def _split_key(key: str, elements: set) -> tuple[str, str]:
    hits = [(key[:i], key[i + 1:]) for i, ch in enumerate(key) if ch == ","
            if key[:i] in elements and key[i + 1:] in elements]
    if len(hits) != 1:
        raise InvalidInput(f"cannot split table key {key!r} into two elements")
    return hits[0]


def load_semigroup(obj: dict) -> SemigroupTable:
    """Any semigroup description: explicit table, poset, quiver, monomials or
    matrix units (selected by ``kind`` or by the keys present)."""
    kind = obj.get("kind")
    try:
        if kind == "table" or (kind is None and "table" in obj):
            elements = [str(e) for e in obj["elements"]]
            es = set(elements)
            table = {_split_key(k, es): str(v) for k, v in obj["table"].items()}
            return build_from_table(
                elements, str(obj.get("zero", "0")), table,
                obj.get("objects"), obj.get("start"), obj.get("end"),
            )
        if kind == "poset" or (kind is None and "relations" in obj):
            return poset_semigroup(load_poset(obj))
        if kind == "quiver" or (kind is None and "arrows" in obj):
            arrows = [(a["label"], a["from"], a["to"]) for a in obj["arrows"]]
            return quiver_path_semigroup(make_quiver(obj["nodes"], arrows, obj.get("max_len")))
        if kind == "monomial":
            return monomial_semigroup(int(obj["num_vars"]), int(obj["max_degree"]))
        if kind == "matrix_units":
            return matrix_units(int(obj["n"]))
    except KeyError as e:
        raise InvalidInput(f"semigroup description lacks {e}") from None
    raise InvalidInput("unrecognised semigroup description")


def semigroup_to_json(S: SemigroupTable) -> dict:
    out = {
        "kind": "table",
        "elements": list(S.elements),
        "zero": S.zero,
        "table": {f"{a},{b}": S.mul(a, b) for a in S.elements for b in S.elements},
    }
    if S.has_objects:
        out.update(objects=list(S.objects), start=dict(S.start), end=dict(S.end))
    return out


# --- cochains and twists ----------------------------------------------------


def load_coeffs(obj) -> object:
    if not obj or obj.get("kind", "rationals") == "rationals":
        return RATIONALS
    if obj["kind"] == "mod":
        return mod(frac(obj["tau"]))
    raise InvalidInput(f"unknown coefficient kind {obj.get('kind')!r}")


def load_cochain(obj: dict, S: SemigroupTable) -> Cochain:
    coeffs = load_coeffs(obj.get("coeffs"))
    vals = {tuple(map(str, v["args"])): frac(v["value"]) for v in obj.get("values", [])}
    fill = obj.get("fill")
    return make_cochain(S, int(obj["degree"]), vals, coeffs, fill=None if fill is None else frac(fill))


def cochain_to_json(F: Cochain) -> dict:
    coeffs = {"kind": "rationals"} if not F.coeffs.is_mod else {"kind": "mod", "tau": frac_str(F.coeffs.tau)}
    return {
        "degree": F.degree,
        "coeffs": coeffs,
        "values": [{"args": list(k), "value": frac_str(v)} for k, v in F.values.items()],
    }


def load_twist(obj: dict, S: SemigroupTable, hbar=None, tau=None) -> Twist:
    """Twist JSON, or a bare 2-cochain turned into a twist by ``hbar`` (real)
    or ``tau`` (reduced mod tau, circle)."""
    mode = obj.get("mode")
    if mode is None:
        if tau is not None:
            mode, obj = CIRCLE, {**obj, "tau": tau}
        else:
            mode, obj = REAL, {**obj, "hbar": hbar if hbar is not None else 1}
    if mode == REAL:
        F = load_cochain(obj, S)
        return exp_twist(F, frac(obj.get("hbar", 1)))
    if mode == CIRCLE:
        t = frac(obj["tau"])
        raw = load_cochain({**obj, "coeffs": {"kind": "mod", "tau": str(t)}}, S)
        return circle_twist(raw)
    raise InvalidInput(f"unknown twist mode {mode!r}")


def twist_to_json(t: Twist, semigroup: dict | None = None) -> dict:
    out = cochain_to_json(t.exponent)
    if t.mode == REAL:
        out.update(mode=REAL, hbar=frac_str(t.hbar))
    else:
        out.update(mode=CIRCLE, tau=frac_str(t.tau))
    if semigroup is not None:
        out["semigroup"] = semigroup
    return out


# --- complexes and paths ------------------------------------------------------


def load_complex(obj: dict) -> SimplicialComplex:
    return complex_from_maximal(obj["vertices"], obj.get("maximal_simplices", []))


def load_path(obj: dict):
    space = obj.get("space", "plane")
    if space == "plane":
        return PlanePolyline(tuple(tuple(v) for v in obj["vertices"]))
    if space == "sphere":
        return SphereGeodesicPath(tuple(tuple(unit(v)) for v in obj["vertices"]), float(obj.get("radius", 1.0)))
    raise InvalidInput(f"unknown space {space!r}")


def path_to_json(g) -> dict:
    if isinstance(g, PlanePolyline):
        return {"space": "plane", "vertices": [list(v) for v in g.vertices]}
    return {"space": "sphere", "vertices": [list(v) for v in g.waypoints], "radius": g.radius}
