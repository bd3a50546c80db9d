"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (JSON naming the error on
stderr), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import csv
import io as _io
import json
import math
import os
import sys
from fractions import Fraction

from . import cochains, geometry, lattice, nerve, twists
from .errors import TailleurError
from .io import (
    InvalidInput,
    cochain_to_json,
    frac,
    frac_str,
    load_complex,
    load_poset,
    load_semigroup,
    load_twist,
    poset_to_json,
    read_json,
    twist_to_json,
)

SEED_ENV = "TAILLEUR_SEED"


def fmt(x) -> str:
    if isinstance(x, Fraction):
        x = float(x)
    if isinstance(x, float):
        return format(x + 0.0, ".15g")  # no "-0"
    return str(x)


def _csv(header, rows) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([fmt(x) for x in r])
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InvalidInput(f"{SEED_ENV}={env!r} is not an integer") from None
    return 0


def _need_input(args) -> dict:
    if not args.input:
        raise InvalidInput("--input is required")
    return read_json(args.input)


def _load_semigroup_for(args, obj: dict):
    if "semigroup" in obj:
        return load_semigroup(obj["semigroup"])
    if getattr(args, "semigroup", None):
        return load_semigroup(read_json(args.semigroup))
    raise InvalidInput("no semigroup: embed a 'semigroup' key or pass --semigroup")


def _load_twist(args):
    obj = _need_input(args)
    S = _load_semigroup_for(args, obj)
    return S, load_twist(obj, S, hbar=args.hbar, tau=args.tau)


# --- commands -----------------------------------------------------------------


def cmd_semigroup_validate(args):
    S = load_semigroup(_need_input(args))
    info = {
        "valid": True,
        "elements": len(S.elements),
        "nonzero": len(S.nonzero),
        "objects": list(S.objects or []),
        "composable": {str(n): len(S.tuples(n)) for n in range(1, (args.max_degree or 3) + 1)},
    }
    _emit(args, _json(info))


def cmd_cohomology_ranks(args):
    S = load_semigroup(_need_input(args))
    top = args.max_degree if args.max_degree is not None else 2
    rows = []
    for n in range(top + 1):
        r = cochains.cohomology_rank(S, n, cc0_zero=args.cc0_zero)
        rows.append((n, r.dim_Z, r.dim_B, r.dim_H))
    if args.format == "json":
        _emit(args, _json([dict(zip(("degree", "dim_Z", "dim_B", "dim_H"), r)) for r in rows]))
    else:
        _emit(args, _csv(("degree", "dim_Z", "dim_B", "dim_H"), rows))


def cmd_nerve_compare(args):
    obj = _need_input(args)
    if "maximal_simplices" in obj:
        p = nerve.face_poset(load_complex(obj))
    else:
        p = load_poset(obj)
    top = args.max_degree if args.max_degree is not None else 2
    rows = [(r.degree, r.semigroup_rank, r.simplicial_rank, "match" if r.match else "mismatch")
            for r in nerve.compare_poset_cohomology(p, top, cc0_zero=args.cc0_zero)]
    if args.format == "json":
        _emit(args, _json([dict(zip(("degree", "semigroup_rank", "simplicial_rank", "match"), r)) for r in rows]))
    else:
        _emit(args, _csv(("degree", "semigroup_rank", "simplicial_rank", "match"), rows))


def cmd_twist_verify(args):
    S, t = _load_twist(args)
    exact = t.satisfies_identity()
    numeric = twists.verify_twist(S, t.values(), tol=args.tol)
    _emit(args, _json({"mode": t.mode, "exact": exact, "numeric": numeric, "valid": exact and numeric}))


def cmd_twist_trivial(args):
    _, t = _load_twist(args)
    res = twists.triviality_check(t)
    out = {"mode": t.mode, "verdict": str(res)}
    if res.trivial:
        out["g"] = cochain_to_json(res.g)
        out["roundtrip"] = twists.roundtrip_ok(t, res)
    _emit(args, _json(out))


def _element(S, spec: str) -> twists.AlgebraElement:
    spec = spec.strip()
    if spec.startswith("{"):
        terms = {k: frac(v) for k, v in json.loads(spec).items()}
        for k in terms:
            if k not in S.elements:
                raise InvalidInput(f"unknown element {k!r}")
        return twists.AlgebraElement(S, terms)
    if spec not in S.elements:
        raise InvalidInput(f"unknown element {spec!r}")
    return twists.basis(S, spec)


def cmd_star_eval(args):
    S, t = _load_twist(args)
    if not args.left or not args.right:
        raise InvalidInput("--left and --right are required")
    out = twists.star(t, _element(S, args.left), _element(S, args.right))
    rows = []
    for k in sorted(out.terms):
        c = complex(out.terms[k])
        rows.append((k, c.real, c.imag))
    _emit(args, _csv(("element", "re", "im"), rows))


def _grid(t_max, steps: int):
    if steps < 1:
        raise InvalidInput("--steps must be >= 1")
    return [t_max * k / steps for k in range(steps + 1)]


def cmd_debroglie(args):
    p, v, h, t_max = (frac(x) for x in (args.p, args.v, args.h, args.t_max))
    rows = []
    for t in _grid(t_max, args.steps):
        s = geometry.free_particle_phase(p, v, t, h)
        rows.append((t, s.area, s.phase.real, s.phase.imag, frac_str(t), frac_str(s.area)))
    _emit(args, _csv(("t", "area_mod_h", "phase_re", "phase_im", "t_exact", "area_exact"), rows))


def cmd_sphere_phase(args):
    colat = float(frac(args.colat))
    lam_max = float(frac(args.lambda_max))
    lams = _grid(lam_max, args.steps)
    res = geometry.equator_scenario(colat, lams, skip_undefined=True)
    for lam in res.skipped:
        print(json.dumps({"skipped_lambda": lam, "error": "AntipodalUndefined"}), file=sys.stderr)
    rows = [(s.t, s.area, s.phase.real, s.phase.imag, r) for s, r in zip(res.samples, res.residuals)]
    _emit(args, _csv(("lambda", "area", "phase_re", "phase_im", "linear_fit_residual"), rows))


def cmd_sphere_twist_export(args):
    exp = geometry.export_sphere_twist(args.triangulation)
    P = nerve.face_poset(geometry._polyhedron(args.triangulation)[0])
    obj = twist_to_json(exp.twist, semigroup={"kind": "poset", **poset_to_json(P)})
    obj["unit"] = exp.unit
    obj["cells"] = len(exp.cells)
    _emit(args, _json(obj))


def cmd_sphere_residual(args):
    r = geometry.tailleur_cocycle_residual(args.samples, _seed(args), space=args.space)
    _emit(args, _json({"samples": args.samples, "seed": _seed(args), "space": args.space, "residual": r}))


def cmd_walk_pmf(args):
    d = lattice.n_cell_mean_pmf(args.steps, frac(args.prob), args.cells)
    if args.format == "json":
        _emit(args, _json({frac_str(x): frac_str(w) for x, w in d.pmf.items()}))
    else:
        rows = [(frac_str(x), float(w), frac_str(w)) for x, w in sorted(d.pmf.items())]
        _emit(args, _csv(("position", "probability", "probability_exact"), rows))


def cmd_walk_mc(args):
    params = lattice.WalkParams(frac(args.prob), args.steps, args.cells, _seed(args))
    d = lattice.monte_carlo_walk(params, args.trials)
    rows = [(frac_str(x), float(w), frac_str(w)) for x, w in sorted(d.pmf.items())]
    _emit(args, _csv(("position", "frequency", "frequency_exact"), rows))


def cmd_walk_compare(args):
    r = lattice.gaussian_compare(args.steps, frac(args.prob))
    _emit(args, _json(r.as_dict()))


# --- parser -------------------------------------------------------------------


def _common(p: argparse.ArgumentParser):
    p.add_argument("--input")
    p.add_argument("--output")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--tau")
    p.add_argument("--hbar")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--cc0-zero", action="store_true")
    p.add_argument("--semigroup")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tailleur")
    sub = parser.add_subparsers(dest="group", required=True)

    def leaf(parent, name, fn, **kw):
        p = parent.add_parser(name, **kw)
        _common(p)
        p.set_defaults(fn=fn)
        return p

    def group(name):
        g = sub.add_parser(name)
        return g.add_subparsers(dest="cmd", required=True)

    leaf(group("semigroup"), "validate", cmd_semigroup_validate)
    leaf(group("cohomology"), "ranks", cmd_cohomology_ranks)
    leaf(group("nerve"), "compare", cmd_nerve_compare)
    tw = group("twist")
    leaf(tw, "verify", cmd_twist_verify)
    leaf(tw, "trivial", cmd_twist_trivial)
    st = leaf(group("star"), "eval", cmd_star_eval)
    st.add_argument("--left")
    st.add_argument("--right")

    db = leaf(sub, "debroglie", cmd_debroglie)
    db.add_argument("--p", required=True)
    db.add_argument("--v", required=True)
    db.add_argument("--h", required=True)
    db.add_argument("--t-max", required=True)
    db.add_argument("--steps", type=int, default=100)

    sp = group("sphere")
    ph = leaf(sp, "phase", cmd_sphere_phase)
    ph.add_argument("--colat", required=True, help="radians south of the equator")
    ph.add_argument("--lambda-max", required=True)
    ph.add_argument("--steps", type=int, default=100)
    ex = leaf(sp, "twist-export", cmd_sphere_twist_export)
    ex.add_argument("--triangulation", choices=("tetrahedral", "octahedral"), default="octahedral")
    rs = leaf(sp, "residual", cmd_sphere_residual)
    rs.add_argument("--samples", type=int, default=1000)
    rs.add_argument("--space", choices=("sphere", "plane"), default="sphere")

    wk = group("walk")
    for name, fn in (("pmf", cmd_walk_pmf), ("mc", cmd_walk_mc), ("compare", cmd_walk_compare)):
        p = leaf(wk, name, fn)
        p.add_argument("--steps", type=int, required=True)
        p.add_argument("--prob", required=True)
        p.add_argument("--cells", type=int, default=1)
        if name == "mc":
            p.add_argument("--trials", type=int, default=10_000)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        args.fn(args)
    except TailleurError as e:
        print(json.dumps({"error": type(e).__name__, "message": str(e)}), file=sys.stderr)
        return 1
    except (KeyError, TypeError, ValueError) as e:
        print(json.dumps({"error": "InvalidInput", "message": str(e)}), file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
