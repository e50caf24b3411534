"""Command line front end.

Subcommands: polar, gauge, rho, verify, cut, check-cut, sfree, maximal.
Reports go to stdout as JSON (default) or as equivalent flat text; both are
byte-identical across runs on the same inputs. Exit codes: 0 pass/success,
1 property violation or refused precondition, 2 input error (malformed
JSON or schema problems, diagnosed to stderr).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import jsonio
from .cuts import (
    DEFAULT_RADIUS,
    NotSFreeError,
    check_cut_validity,
    generate_cut,
    is_s_free,
    maximality_certificate,
)
from .polyhedra import exposed_witness, in_recession, polar, random_polyhedron
from .rationals import dot, json_scalar
from .sublinear import (
    gauge,
    minimal_sublinear,
    off_recession_check,
    random_unit_ball_rep,
    reconstruct_check,
    sample_points,
    sandwich_check,
)

VERIFY_CANDIDATES = 3  # unit-ball representations tried per instance


def _load_document(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
        return
    lines: list[str] = []

    def walk(prefix: str, value) -> None:
        if isinstance(value, dict):
            for k, v in value.items():
                walk(f"{prefix}{k}." if isinstance(v, dict) else f"{prefix}{k}", v)
        else:
            lines.append(f"{prefix}: {json.dumps(value)}")

    walk("", report)
    print("\n".join(lines))


def _cmd_polar(args) -> tuple[int, dict]:
    h = jsonio.polyhedron_from_json(_load_document(args.input))
    body = polar(h)
    return 0, {"command": "polar", **jsonio.vpolytope_to_json(body)}


def _cmd_gauge(args) -> tuple[int, dict]:
    doc = _load_document(args.input)
    h = jsonio.polyhedron_from_json(doc)
    points = jsonio.points_from_json(doc, h.dim)
    values = [json_scalar(gauge(h, x)) for x in points]
    return 0, {"command": "gauge", "dim": h.dim, "values": values}


def _cmd_rho(args) -> tuple[int, dict]:
    doc = _load_document(args.input)
    h = jsonio.polyhedron_from_json(doc)
    points = jsonio.points_from_json(doc, h.dim)
    values = [json_scalar(minimal_sublinear(h, x)) for x in points]
    return 0, {"command": "rho", "dim": h.dim, "values": values}


def _verify_one(h, index: int, seed: int, samples: int, tally: dict) -> None:
    pts = sample_points(h, seed + 7919 * index, samples)

    for c in range(VERIFY_CANDIDATES):
        sf = random_unit_ball_rep(h, seed + 104729 * index + c, 5)
        report = sandwich_check(h, sf, pts)
        tally["sandwich"]["pairs"] += 1
        tally["sandwich"]["samples_checked"] += report.samples_checked
        tally["sandwich"]["violations"] += len(report.violations)
        if report.violations and tally["sandwich"]["first_violation"] is None:
            x = report.violations[0][0]
            tally["sandwich"]["first_violation"] = jsonio.vector_to_json(x)

    tally["reconstruct"]["instances_checked"] += 1
    if not reconstruct_check(h, pts):
        tally["reconstruct"]["failures"] += 1

    for x in pts:
        if in_recession(h, x):
            continue
        tally["off_recession"]["samples_checked"] += 1
        if not off_recession_check(h, x):
            tally["off_recession"]["violations"] += 1
            if tally["off_recession"]["first_violation"] is None:
                tally["off_recession"]["first_violation"] = jsonio.vector_to_json(x)

    for i, row in enumerate(h.rows):
        tally["exposed"]["rows_checked"] += 1
        witness = exposed_witness(h, i)
        tight = dot(row, witness) == 1
        slack = all(
            dot(other, witness) < 1
            for j, other in enumerate(h.rows)
            if j != i
        )
        if not (tight and slack):
            tally["exposed"]["failures"] += 1


def _cmd_verify(args) -> tuple[int, dict]:
    if args.random is not None and args.input is not None:
        raise jsonio.SchemaError("give an input file or --random, not both")
    if args.random is None and args.input is None:
        raise jsonio.SchemaError("give an input file or --random")

    if args.random is not None:
        rng = random.Random(args.seed)
        instances = [
            random_polyhedron(rng.randint(1, 4), rng.randint(3, 10), rng)
            for _ in range(args.random)
        ]
        mode = "random"
    else:
        instances = [jsonio.polyhedron_from_json(_load_document(args.input))]
        mode = "file"

    tally = {
        "sandwich": {
            "pairs": 0,
            "samples_checked": 0,
            "violations": 0,
            "first_violation": None,
        },
        "reconstruct": {"instances_checked": 0, "failures": 0},
        "off_recession": {
            "samples_checked": 0,
            "violations": 0,
            "first_violation": None,
        },
        "exposed": {"rows_checked": 0, "failures": 0},
    }
    for index, h in enumerate(instances):
        _verify_one(h, index, args.seed, args.samples, tally)

    total = (
        tally["sandwich"]["violations"]
        + tally["reconstruct"]["failures"]
        + tally["off_recession"]["violations"]
        + tally["exposed"]["failures"]
    )
    report = {
        "command": "verify",
        "mode": mode,
        "instances": len(instances),
        "seed": args.seed,
        "samples": args.samples,
        "checks": tally,
        "violations": total,
        "passed": total == 0,
    }
    return (0 if total == 0 else 1), report


def _cmd_cut(args) -> tuple[int, dict]:
    doc = _load_document(args.input)
    inst = jsonio.corner_instance_from_json(jsonio._require(doc, "instance", ""))
    body = jsonio.body_from_json(jsonio._require(doc, "body", ""), inst.f)
    try:
        cut = generate_cut(inst, body, args.radius)
    except NotSFreeError as exc:
        report = {
            "command": "cut",
            "refused": True,
            "radius": exc.radius,
            "z": jsonio.vector_to_json(exc.witness),
        }
        return 1, report
    return 0, {
        "command": "cut",
        "radius": args.radius,
        **jsonio.cut_to_json(cut),
    }


def _cmd_check_cut(args) -> tuple[int, dict]:
    doc = _load_document(args.input)
    inst = jsonio.corner_instance_from_json(jsonio._require(doc, "instance", ""))
    cut = jsonio.cut_from_json(jsonio._require(doc, "cut", ""))
    report = check_cut_validity(inst, cut, args.radius)
    out = {
        "command": "check-cut",
        "valid_on_region": report.valid_on_region,
        "radius": report.radius,
        "violation": None,
    }
    if report.violation is not None:
        out["violation"] = {
            "x": jsonio.vector_to_json(report.violation.x),
            "s": jsonio.vector_to_json(report.violation.s),
            "improving_ray": report.violation.improving_ray,
        }
    return (0 if report.valid_on_region else 1), out


def _cmd_sfree(args) -> tuple[int, dict]:
    doc = _load_document(args.input)
    inst = jsonio.corner_instance_from_json(jsonio._require(doc, "instance", ""))
    body = jsonio.body_from_json(jsonio._require(doc, "body", ""), inst.f)
    verdict = is_s_free(body, inst, args.radius)
    report = {
        "command": "sfree",
        "free_on_region": verdict.free_on_region,
        "radius": verdict.radius,
        "z": None
        if verdict.witness is None
        else jsonio.vector_to_json(verdict.witness),
    }
    return (0 if verdict.free_on_region else 1), report


def _cmd_maximal(args) -> tuple[int, dict]:
    doc = _load_document(args.input)
    inst = jsonio.corner_instance_from_json(jsonio._require(doc, "instance", ""))
    body = jsonio.body_from_json(jsonio._require(doc, "body", ""), inst.f)
    report = maximality_certificate(body, inst, args.radius)
    out = {
        "command": "maximal",
        "certified": report.certified,
        "heuristic": report.heuristic,
        "radius": report.radius,
        "uncertified_facets": list(report.uncertified_facets),
    }
    return (0 if report.certified else 1), out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarcut",
        description=(
            "Exact polar duality, gauge evaluators, and corner-relaxation "
            "cuts over rational arithmetic."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, needs_input=True, radius=False):
        p = sub.add_parser(name, help=help_text)
        if needs_input:
            p.add_argument("input", help="path to a JSON document")
        if radius:
            p.add_argument(
                "--radius",
                type=int,
                default=DEFAULT_RADIUS,
                help=f"lattice scan radius (default {DEFAULT_RADIUS})",
            )
        p.add_argument(
            "--format",
            choices=("json", "text"),
            default="json",
            help="report format (default json)",
        )
        p.set_defaults(handler=handler)
        return p

    add("polar", _cmd_polar, "polar body of a canonical set")
    add("gauge", _cmd_gauge, "gauge values at the given points")
    add("rho", _cmd_rho, "minimal sublinear values at the given points")

    p_verify = add(
        "verify",
        _cmd_verify,
        "run the full property suite on given or random instances",
        needs_input=False,
    )
    p_verify.add_argument(
        "input", nargs="?", default=None, help="path to a JSON set document"
    )
    p_verify.add_argument(
        "--random", type=int, default=None, metavar="N",
        help="verify N seeded random instances instead of a file",
    )
    p_verify.add_argument("--seed", type=int, default=0, help="random seed")
    p_verify.add_argument(
        "--samples", type=int, default=200, help="sample points per instance"
    )

    add("cut", _cmd_cut, "generate a cut from an instance and a body", radius=True)
    add(
        "check-cut",
        _cmd_check_cut,
        "check a cut against every reachable lattice point of the region",
        radius=True,
    )
    add("sfree", _cmd_sfree, "scan a body for interior lattice points", radius=True)
    add(
        "maximal",
        _cmd_maximal,
        "certify facet-by-facet maximality on the region",
        radius=True,
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, report = args.handler(args)
    except json.JSONDecodeError as exc:
        print(
            f"input error: line {exc.lineno} column {exc.colno}: {exc.msg}",
            file=sys.stderr,
        )
        return 2
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # SchemaError and the geometric input errors (origin/anchor not
        # interior, improper set, malformed fields) all land here.
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
