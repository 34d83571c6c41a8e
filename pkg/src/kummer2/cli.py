"""Command-line front end.  Every subcommand prints one JSON document on stdout.

Exit codes: 0 success, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .f2quad import (QuadFormError, arf_invariant, count_zeros, overlattice_count,
                     r_residue, standard_form, totally_singular_subspaces)
from .gf2k import FieldError, FieldSpec
from .kummer import DeltaField, KummerError, surface_report
from .lattice import LatticeError, direct_sum, parse_lattice_name, summary
from .liealg import LieElement, ProductLieElement, classify_line, is_p_closed, p_map

SCHEMA = 1


class InputError(Exception):
    pass


def _report(command, inputs, outputs, passed=True):
    return {"schema": SCHEMA, "version": __version__, "command": command,
            "inputs": inputs, "outputs": outputs, "pass": passed}


def cmd_surface(args):
    try:
        field = FieldSpec.parse(args.field)
        delta = DeltaField.parse(field, args.coeffs)
    except (FieldError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    try:
        rep = surface_report(delta)
    except KummerError as exc:
        raise InputError(str(exc)) from exc
    out = rep.to_dict()
    out["singularity_string"] = rep.singularity_string() if rep.singularities else None
    return _report("surface", {"field": str(field), "coeffs": delta.hex()}, out)


def cmd_graph(args):
    from . import curveconfig as cc

    suites = {"figure1": cc.figure1_report, "figure2": cc.figure2_report,
              "sec4": cc.sec4_report, "sec6": cc.sec6_report}
    g = None
    if args.file:
        try:
            with open(args.file) as fh:
                g = cc.CurveGraph.parse(fh.read())
        except (OSError, cc.GraphError) as exc:
            raise InputError(str(exc)) from exc
    try:
        out = suites[args.check](g)
    except (cc.GraphError, LatticeError, KeyError) as exc:
        raise InputError(f"graph does not carry the {args.check} structure: {exc}") from exc
    passed = out.pop("pass")
    return _report("graph", {"check": args.check, "file": args.file}, out, passed)


def cmd_lattice(args):
    if args.op == "sum":
        try:
            L = direct_sum([parse_lattice_name(t) for t in args.names])
        except (LatticeError, ValueError) as exc:
            raise InputError(str(exc)) from exc
        return _report("lattice", {"op": "sum", "names": args.names}, summary(L))
    raise InputError(f"unknown lattice operation {args.op}")  # pragma: no cover


def cmd_quadform(args):
    try:
        res = r_residue(args.r)
        q = standard_form(args.sigma, res)
        if 2 * args.sigma > args.r:
            raise QuadFormError("need 2 sigma <= r")
    except QuadFormError as exc:
        raise InputError(str(exc)) from exc
    inputs = {"op": args.op, "r": args.r, "sigma": args.sigma}
    out = {"form": str(q), "form_hex": q.to_hex()}
    passed = True
    if args.op == "count":
        lines = len(totally_singular_subspaces(q, 1))
        out["singular_lines"] = lines
        out["closed_form"] = overlattice_count(args.r, args.sigma)
        passed = lines == out["closed_form"]
    elif args.op == "planes":
        out["totally_singular_planes"] = len(totally_singular_subspaces(q, 2))
    elif args.op == "enumerate":
        subs = totally_singular_subspaces(q, args.dim)
        out["dim"] = args.dim
        out["count"] = len(subs)
        out["subspaces"] = [[f"{v:#x}" for v in s] for s in subs]
    elif args.op == "arf":
        out["zeros"] = count_zeros(q)
        out["arf"] = arf_invariant(q)
    return _report("quadform", inputs, out, passed)


def cmd_lie(args):
    try:
        field = FieldSpec.parse(args.field)
        parts = [field.element(t) for t in args.coeffs.split(",")]
    except (FieldError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    if len(parts) not in (4, 8):
        raise InputError("give 4 hex literals (l4,l2,l0,lambda) or 8 for a pair")
    left = LieElement(tuple(parts[:3]), parts[3])
    x = left if len(parts) == 4 else ProductLieElement(
        left, LieElement(tuple(parts[4:7]), parts[7]))
    if x.is_zero():
        raise InputError("p-closedness needs a nonzero vector")
    c = is_p_closed(x)
    out = {"p_closed": c is not None, "eigenvalue": None if c is None else c.hex(),
           "group_type": None if c is None else classify_line(x).value}
    if isinstance(x, LieElement):
        out["p_image"] = json.loads(p_map(x).to_json())
    return _report("lie", {"field": str(field), "coeffs": [p.hex() for p in parts]}, out)


def cmd_selftest(args):
    from .acceptance import run_all

    results = run_all(stream=sys.stderr)
    out = {"criteria": [{"id": r.number, "name": r.name, "pass": r.passed,
                         "detail": r.detail} for r in results]}
    return _report("selftest", {}, out, all(r.passed for r in results))


def build_parser():
    p = argparse.ArgumentParser(prog="kummer2", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("surface", help="analyse a diagonal vector field on C x C")
    s.add_argument("--field", default="gf16:0x13")
    s.add_argument("--coeffs", required=True,
                   help="lam4,lam2,lam0,mu4,mu2,mu0,tau as hex literals")
    s.set_defaults(func=cmd_surface)

    g = sub.add_parser("graph", help="run a curve-configuration check suite")
    g.add_argument("check", choices=["figure1", "figure2", "sec4", "sec6"])
    g.add_argument("--file", help="graph text file replacing the built-in configuration")
    g.set_defaults(func=cmd_graph)

    la = sub.add_parser("lattice", help="lattice invariants")
    la.add_argument("op", choices=["sum"])
    la.add_argument("names", nargs="+", help="U, A<n>, D<n>, E<n> (suffix + for positive)")
    la.set_defaults(func=cmd_lattice)

    q = sub.add_parser("quadform", help="standard discriminant forms over F_2")
    q.add_argument("op", choices=["count", "planes", "enumerate", "arf"])
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--sigma", type=int, required=True)
    q.add_argument("--dim", type=int, default=1)
    q.set_defaults(func=cmd_quadform)

    li = sub.add_parser("lie", help="p-closedness in a x| b or its square")
    li.add_argument("--field", default="gf4:0x7")
    li.add_argument("--coeffs", required=True)
    li.set_defaults(func=cmd_lie)

    st = sub.add_parser("selftest", help="run the acceptance suite")
    st.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        report = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    json.dump(report, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")
    return 0 if report["pass"] else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
