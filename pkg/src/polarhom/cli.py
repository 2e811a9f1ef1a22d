"""Command line entry point: ``polarhom <command> [scene.json] ...``.

Reports are JSON with sorted keys. Exit codes: 0 ok, 2 malformed input,
3 mathematical precondition failure, 4 a checked invariant did not hold.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

import jsonschema

from polarhom import scene as sc
from polarhom.arith.numfield import NumberFieldElement
from polarhom.arith.scalar import Scalar
from polarhom.curves.model import CurvePoint, Fiber

REPORT_VERSION = 1
SEED_ENV = "POLARHOM_SEED"

EXIT_OK, EXIT_SCHEMA, EXIT_MATH, EXIT_INVARIANT = 0, 2, 3, 4


class SceneError(Exception):
    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer}: {message}")
        self.pointer = pointer
        self.message = message


class InvariantBreach(Exception):
    pass


def _math_errors() -> tuple:
    from polarhom.arith.scalar import TauMismatch
    from polarhom.curves import CurveError, HigherOrderPole
    from polarhom.intersect import NonTransverse, PolarPrecondition
    from polarhom.surface import ArrangementError

    return (CurveError, HigherOrderPole, NonTransverse, PolarPrecondition, ArrangementError, TauMismatch,
            ZeroDivisionError, NotImplementedError, ValueError)


# -- rendering -----------------------------------------------------------------------

class Renderer:
    def __init__(self, decimal: int | None = None):
        self.decimal = decimal

    def __call__(self, obj):
        if isinstance(obj, Scalar):
            return sc.scalar_json(obj, self.decimal)
        if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
            return obj
        if isinstance(obj, float):
            return float(f"{obj:.12g}")
        if isinstance(obj, complex):
            return {"re": self(obj.real), "im": self(obj.imag)}
        if isinstance(obj, (Fraction, NumberFieldElement)):
            out = sc.value_json(obj)
            if self.decimal is not None:
                return {"value": out, "decimal": sc.approx(Scalar(obj).to_complex(), self.decimal)}
            return out
        if isinstance(obj, (CurvePoint, Fiber)):
            return sc.point_json(obj)
        if isinstance(obj, dict):
            return {str(k): self(v) for k, v in obj.items()}
        if isinstance(obj, (list, tuple)):
            return [self(v) for v in obj]
        return repr(obj)


def dump(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- scene loading -------------------------------------------------------------------------

def load_scene(path: str, schema_name: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise SceneError("", f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise SceneError("", f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    validator = jsonschema.Draft202012Validator(sc.SCHEMAS[schema_name])
    errors = sorted(validator.iter_errors(data), key=lambda e: (len(e.absolute_path), list(map(str, e.absolute_path))))
    if errors:
        err = jsonschema.exceptions.best_match(errors)
        pointer = "/" + "/".join(str(p) for p in err.absolute_path)
        raise SceneError(pointer, err.message)
    return data


def resolve_seed(args, data: dict | None = None) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SceneError("$" + SEED_ENV, f"not an integer: {env!r}") from None
    if data and "seed" in data:
        return data["seed"]
    return 0


# -- commands -----------------------------------------------------------------------------------

def cmd_curve_info(args) -> dict:
    from polarhom.arith.factor import factor_rational
    from polarhom.curves import divisor_of, holomorphic_basis, pole_places, residue_sum_check
    from polarhom.curves.differential import residue_value

    data = load_scene(args.scene, "curve")
    C = sc.curve(data["curve"])
    out = {"curve": C.describe(), "genus": C.genus, "holomorphic_basis": [sc.form_json(w) for w in holomorphic_basis(C)]}
    if not C.is_p1:
        out["weierstrass_orbits"] = [sc.poly_json(m) for m, _ in factor_rational(C.f)]
    forms = []
    for i, fd in enumerate(data.get("forms", [])):
        w = sc.form(C, fd)
        entry = {"form": sc.form_json(w)}
        entry["divisor"] = [{"place": p, "order": k, "degree": p.degree} for p, k in divisor_of(w).items()]
        residues = []
        for p, m, _ in pole_places(w):
            if p is not None:
                residues.append({"point": p, "residue": Scalar(residue_value(w, p), 0)})
        entry["residues"] = residues
        total = residue_sum_check(w)
        entry["residue_sum"] = total
        if not total.is_zero():
            raise InvariantBreach(f"form {i}: residue sum {total.render()} is not zero")
        forms.append(entry)
    out["forms"] = forms
    return out


def cmd_boundary(args) -> dict:
    from polarhom.polar.chains import Chain1, boundary1

    data = load_scene(args.scene, "boundary")
    C = sc.curve(data["curve"])
    chain = Chain1()
    for t in data["chain"]:
        chain = chain + Chain1.of(sc.form(C, t["form"]), sc.field_value(t.get("weight", 1)))
    b = boundary1(chain)
    total = b.total_weight()
    if not total.is_zero():
        raise InvariantBreach(f"boundary has total weight {total.render()}")
    return {"boundary": [{"point": p, "weight": s} for p, s in b.items()], "total_weight": total}


def cmd_homology(args) -> dict:
    from polarhom.polar import PuncturedCurve, hp0_stabilized, hp1_punctured, hp_projective

    data = load_scene(args.scene, "curve")
    C = sc.curve(data["curve"])
    seed = resolve_seed(args, data)
    punctures = []
    if args.mode == "punctured":
        if not args.punctures:
            raise SceneError("--punctures", "punctured homology needs --punctures FILE")
        pdata = load_scene(args.punctures, "punctures")
        punctures = [sc.point(C, p) for p in pdata["punctures"]]
    X = PuncturedCurve(C, punctures)
    st = hp0_stabilized(X, seed)
    hp1 = hp1_punctured(X)
    out = {
        "curve": C.describe(),
        "punctures": X.sorted_punctures(),
        "hp0": st.value,
        "hp1": hp1,
        "support_sizes": st.support_sizes,
        "matrices_rank": [n - v for n, v in zip(st.support_sizes, st.values)],
        "seed": seed,
    }
    if args.mode == "projective":
        closed = list(hp_projective(C))
        out["closed_form"] = {"hp0": closed[0], "hp1": closed[1]}
        if closed != [st.value, hp1]:
            raise InvariantBreach(f"finite-support pipeline gave {[st.value, hp1]}, closed form {closed}")
    return out


def cmd_mv(args) -> dict:
    from polarhom.polar import mv_check

    data = load_scene(args.scene, "mv")
    C = sc.curve(data["curve"])
    seed = resolve_seed(args, data)
    S1 = [sc.point(C, p) for p in data["S1"]]
    S2 = [sc.point(C, p) for p in data["S2"]]
    r = mv_check(C, S1, S2, seed=seed)
    out = {
        "dims": {k: list(v) for k, v in r.dims.items()},
        "sequence": r.sequence,
        "nodes": r.nodes,
        "chain_level": r.chain_level,
        "support_size": r.support_size,
        "alternating_sum": r.alternating_sum,
        "ok": r.ok,
        "seed": seed,
    }
    if not r.ok:
        raise InvariantBreach(f"not exact at {r.failures()}", out)
    return out


def cmd_d2(args) -> dict:
    from polarhom.surface import Plane2Form, d2_check

    data = load_scene(args.scene, "d2")
    beta = Plane2Form(sc.terms(data["numerator"], 2), [tuple(sc.rational(c) for c in ln) for ln in data["lines"]])
    rep = d2_check(beta)
    pts = [
        {"point": list(p), "lines": [list(l1), list(l2)], "residues": [r1, r2], "sum": s}
        for p, l1, l2, r1, r2, s in rep.points
    ]
    out = {"points": pts, "ok": rep.ok}
    if not rep.ok:
        raise InvariantBreach("a double point has nonzero residue sum", out)
    return out


def _form1(d: dict, nvars: int = 2):
    from polarhom.arith import MPoly
    from polarhom.intersect import Form1

    D = sc.terms(d["D"], nvars) if "D" in d else MPoly.const(1, nvars)
    return Form1(sc.terms(d["P"], nvars), sc.terms(d["Q"], nvars), D)


def cmd_intersect(args) -> dict:
    from polarhom.intersect import AmbientPlane, EmbeddedCycle1, polar_intersection, transverse_points

    data = load_scene(args.scene, "intersect")
    amb = AmbientPlane()
    if "ambient" in data:
        a = data["ambient"]
        amb = AmbientPlane(*(sc.terms(a[k], 2) if k in a else v for k, v in (("num", amb.num), ("den", amb.den))))
    A = EmbeddedCycle1(sc.terms(data["A"]["curve"], 2), _form1(data["A"]["form"]))
    B = EmbeddedCycle1(sc.terms(data["B"]["curve"], 2), _form1(data["B"]["form"]))
    groups = transverse_points(A.F, B.F)
    value = polar_intersection(amb, A, B)
    return {
        "intersection_points": [{"minpoly_x": sc.poly_json(g.minpoly), "degree": g.degree} for g in groups],
        "value": value,
    }


def _plane(v):
    from polarhom.linking import Plane

    return Plane(*(sc.rational(c) for c in v))


def cmd_link(args) -> dict:
    from polarhom.linking import (
        Ambient3,
        BoundingChain2,
        PlaneCycle1,
        canonical_cycle,
        pairing,
        polar_linking,
        preserves_gamma,
        pushforward_chain,
        pushforward_cycle,
        verify_bounding,
    )

    data = load_scene(args.scene, "link")
    seed = resolve_seed(args, data)
    amb = Ambient3()
    if "ambient" in data:
        a = data["ambient"]
        amb = Ambient3(*(sc.terms(a[k], 3) if k in a else v for k, v in (("num", amb.num), ("den", amb.den))))
    c = data["cycle"]
    pl = _plane(c["plane"])
    F = sc.terms(c["curve"], 2)
    form = c.get("form", "canonical")
    C = canonical_cycle(pl, F) if form == "canonical" else PlaneCycle1(pl, F, _form1(form))
    s = data["chain"]
    S = BoundingChain2(_plane(s["plane"]), sc.terms(s["numerator"], 2), sc.terms(s["denominator"], 2))
    value = polar_linking(amb, C, S)
    out = {"value": value}
    if not args.invariance_check:
        return out
    from polarhom.intersect import PolarPrecondition
    from polarhom.suites import random_gamma
    from polarhom.linking import boundary3

    bounding, message = verify_bounding(S, C)
    checks = {"bounding": {"ok": bounding, "message": message}}
    lam = (Fraction(2), Fraction(1, 2), Fraction(1))
    keeps = preserves_gamma(amb, lam)
    diag = {"lambda": list(lam), "preserves_gamma": keeps}
    if keeps:
        moved = polar_linking(amb, pushforward_cycle(C, lam), pushforward_chain(S, lam))
        diag["value"] = moved
        diag["unchanged"] = moved == value
    checks["pushforward"] = diag
    rng = random.Random(seed)
    rows = []
    while len(rows) < 10:
        try:
            chains = boundary3(random_gamma(rng))
            standalone = sum((pairing(amb, C, ch) for ch in chains), Fraction(0))
            shifted = polar_linking(amb, C, [S] + chains)
        except PolarPrecondition:
            continue
        rows.append({"pairing_with_boundary": standalone, "value": shifted, "unchanged": shifted == value})
    checks["boundary_shifts"] = rows
    checks["seed"] = seed
    out["invariance"] = checks
    ok = all(r["unchanged"] and r["pairing_with_boundary"] == 0 for r in rows) and diag.get("unchanged", True)
    if not ok:
        raise InvariantBreach("linking value changed under an admissible modification", out)
    return out


def _floats(text: str, what: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise SceneError(what, f"expected comma-separated numbers, got {text!r}") from None


def cmd_stokes(args) -> dict:
    from polarhom.arith import UniPoly
    from polarhom.curves import CurveModel, Differential1
    from polarhom.stokes import QuadratureConfig, SmoothTestForm, packaged_configs, stokes_check

    if args.packaged:
        configs = packaged_configs()
        if not 1 <= args.packaged <= len(configs):
            raise SceneError("--packaged", f"choose 1..{len(configs)}")
        _, w, v, _ = configs[args.packaged - 1]
    else:
        if "/" not in args.omega:
            raise SceneError("--omega", "expected 'A/C' with comma-separated rational coefficients, e.g. '1/0,1' for dz/z")
        num, den = args.omega.split("/", 1)
        try:
            A = UniPoly([Fraction(c) for c in num.split(",")])
            C = UniPoly([Fraction(c) for c in den.split(",")])
        except ValueError:
            raise SceneError("--omega", f"bad coefficients in {args.omega!r}") from None
        w = Differential1(CurveModel.p1(), A, None, C)
        bump = _floats(args.bump, "--bump")
        if len(bump) != 3 or bump[2] <= 0:
            raise SceneError("--bump", "expected re,im,radius with radius > 0")
        poly = []
        for part in filter(None, (args.poly or "0,0,1,0").split(";")):
            vals = _floats(part, "--poly")
            if len(vals) not in (3, 4):
                raise SceneError("--poly", "terms are j,k,re[,im] separated by ';'")
            poly.append((int(vals[0]), int(vals[1]), complex(vals[2], vals[3] if len(vals) == 4 else 0.0)))
        v = SmoothTestForm(complex(bump[0], bump[1]), bump[2], tuple(poly))
    r = stokes_check(w, v, QuadratureConfig(tol=args.tol), sign=-1 if args.flip else 1, backend=args.backend)
    out = {"lhs": r.lhs, "rhs": r.rhs, "rel_error": r.rel_error, "cells": r.cells, "levels": len(r.levels),
           "backend": r.backend, "tol": r.tol, "passed": r.passed}
    if not r.passed and not args.flip:
        raise InvariantBreach(f"rel_error {r.rel_error:.3e} exceeds {r.tol:g}", out)
    return out


def cmd_reproduce(args) -> dict:
    from polarhom.suites import SUITES, reproduce

    seed = resolve_seed(args)
    only = None
    if args.only:
        only = [s.strip() for s in args.only.split(",") if s.strip()]
        bad = [s for s in only if s not in SUITES]
        if bad:
            raise SceneError("--only", f"unknown suites {bad}; choose from {sorted(SUITES)}")
    rep = reproduce(seed, only)
    if not rep["all_pass"]:
        raise InvariantBreach("some rows failed", rep)
    return rep


def render_table(rep: dict) -> str:
    rows = [("suite", "case", "expected", "computed", "")]
    for r in rep["rows"]:
        rows.append((r["suite"], r["case"], _cell(r["expected"]), _cell(r["computed"]), "PASS" if r["pass"] else "FAIL"))
    widths = [max(len(r[i]) for r in rows) for i in range(5)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    lines.append(f"seed {rep['seed']}: {'all pass' if rep['all_pass'] else 'FAILURES'}")
    return "\n".join(lines) + "\n"


def _cell(v) -> str:
    return v if isinstance(v, str) else json.dumps(v)


# -- argument parsing -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--decimal", type=int, metavar="N", help="add N-digit decimal renderings marked (approx)")
    common.add_argument("--seed", type=int, help=f"seed for randomized steps (else ${SEED_ENV}, else the scene, else 0)")
    p = argparse.ArgumentParser(prog="polarhom", description="Polar chains, residues and homology of curves.")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, fn, help_, scene=True):
        s = sub.add_parser(name, help=help_, parents=[common])
        if scene:
            s.add_argument("scene", help="scene JSON file")
        s.set_defaults(fn=fn)
        return s

    cmd("curve-info", cmd_curve_info, "genus, Weierstrass orbits, divisors and residues of forms")
    cmd("boundary", cmd_boundary, "polar boundary of a 1-chain")
    h = sub.add_parser("homology", help="polar homology dimensions", parents=[common])
    h.add_argument("mode", choices=["projective", "punctured"])
    h.add_argument("scene", help="scene JSON file with the curve")
    h.add_argument("--punctures", help="JSON file with the puncture list")
    h.set_defaults(fn=cmd_homology)
    cmd("mv-check", cmd_mv, "Mayer-Vietoris exactness")
    cmd("d2-check", cmd_d2, "boundary of boundary on a line arrangement")
    cmd("intersect", cmd_intersect, "polar intersection number in the plane")
    cmd("link", cmd_link, "polar linking number in 3-space").add_argument("--invariance-check", action="store_true")
    st = cmd("stokes-check", cmd_stokes, "numerical Cauchy-Stokes check on P^1", scene=False)
    st.add_argument("--omega", default="1/0,1", help="'A/C': coefficients of numerator and denominator, low degree first")
    st.add_argument("--bump", default="0,0,1", help="re,im,radius of the bump support")
    st.add_argument("--poly", help="polynomial factor 'j,k,re[,im];...' for z^j conj(z)^k terms")
    st.add_argument("--tol", type=float, default=1e-6)
    st.add_argument("--packaged", type=int, metavar="K", help="use packaged configuration K instead")
    st.add_argument("--flip", action="store_true", help="negative control: flip the residue side")
    st.add_argument("--backend", choices=["cython", "numpy"])
    rp = cmd("reproduce-paper", cmd_reproduce, "run every reference suite against expected values", scene=False)
    rp.add_argument("--only", help="comma-separated subset of suites")
    rp.add_argument("--table", action="store_true", help="print an aligned text table instead of JSON")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    render = Renderer(args.decimal)
    header = {"report_version": REPORT_VERSION, "scene_version": sc.SCHEMA_VERSION, "command": args.command}
    code, body = EXIT_OK, None
    try:
        body = args.fn(args)
    except SceneError as e:
        code, body = EXIT_SCHEMA, {"error": "schema", "pointer": e.pointer, "message": e.message}
    except InvariantBreach as e:
        code = EXIT_INVARIANT
        body = {"error": "invariant", "message": e.args[0]}
        if len(e.args) > 1:
            body["report"] = e.args[1]
    except _math_errors() as e:
        code, body = EXIT_MATH, {"error": "precondition", "type": type(e).__name__, "message": str(e)}
    except Exception as e:  # noqa: BLE001 - classified as an internal failure
        from polarhom.polar import NotStabilized
        from polarhom.stokes import QuadratureFailure

        if not isinstance(e, (NotStabilized, QuadratureFailure)):
            raise
        code, body = EXIT_INVARIANT, {"error": "invariant", "type": type(e).__name__, "message": str(e)}
    if getattr(args, "table", False) and "rows" in body.get("report", body):
        sys.stdout.write(render_table(render(body.get("report", body))))
        return code
    report = render({**header, **body})
    sys.stdout.write(dump(report))
    if code != EXIT_OK:
        sys.stderr.write(f"polarhom: {body.get('error')} error: {body.get('pointer', '')} {body['message']}\n".replace("  ", " "))
    return code


if __name__ == "__main__":
    sys.exit(main())
