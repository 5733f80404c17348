"""Command-line interface: catalog queries, curvature forms, connectivity
ranges and the verification battery, with text and JSON output."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction as Q
from typing import Dict, List, Optional, Sequence

from .catalog import HermitianSpace, resolve
from .connectivity import connectivity
from .curvature import (TangentVector, complex_positivity, hermitian_form,
                        nullity, orbit_positivity_values)
from .errors import ConfigError
from .roots import Root
from .verify import run_verify

SCHEMA_VERSION = "1"

CATALOG_BOUNDS = [
    ("gr:p,q", "p, q >= 1", "pq", "p+q-1", "n+m-2pq+p+q-1"),
    ("quadric:p", "p >= 3, p != 2", "p", "p-1", "n+m-p-1"),
    ("lagr:r", "r >= 2", "r(r+1)/2", "r", "n+m-r^2"),
    ("spinor:r", "r >= 3", "r(r-1)/2", "2r-3", "n+m-r^2+3r-3"),
    ("e6", "", "16", "11", "n+m-21"),
    ("e7", "", "27", "17", "n+m-37"),
]

TABLE_SPACES = [
    "gr:1,2", "gr:2,2", "gr:2,3", "gr:3,3", "quadric:3", "quadric:4",
    "quadric:5", "quadric:6", "lagr:2", "lagr:3", "lagr:4", "spinor:4",
    "spinor:5", "e6", "e7",
]


def fmt_q(x: Q) -> str:
    x = Q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def root_name(space: HermitianSpace, r: Root) -> str:
    if space.family in ("e6", "e7"):
        return "(" + ":".join(fmt_q(c) for c in r) + ")"
    parts = []
    for i, c in enumerate(r):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else fmt_q(abs(c))
        term = f"{mag}e{i + 1}"
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("-" if c < 0 else "+") + term)
    return "".join(parts)


_TERM = re.compile(r"([+-]?)(\d*)e(\d+)")


def parse_root(space: HermitianSpace, text: str) -> Root:
    text = text.strip()
    if text.startswith("#"):
        try:
            k = int(text[1:])
        except ValueError:
            raise ConfigError(f"bad root index {text!r}")
        if not 0 <= k < space.v:
            raise ConfigError(f"root index {text!r} out of range 0..{space.v - 1}")
        return space.psi[k]
    if text.startswith("("):
        if not text.endswith(")"):
            raise ConfigError(f"unclosed coordinate tuple {text!r}")
        coords = tuple(Q(p) for p in text[1:-1].split(":"))
        if len(coords) != space.rs.dim:
            raise ConfigError(
                f"expected {space.rs.dim} coordinates in {text!r}"
            )
        r = coords
    else:
        pos = 0
        coords_l = [Q(0)] * space.rs.dim
        while pos < len(text):
            m = _TERM.match(text, pos)
            if not m:
                raise ConfigError(f"cannot parse root name {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            mag = int(m.group(2)) if m.group(2) else 1
            idx = int(m.group(3)) - 1
            if not 0 <= idx < space.rs.dim:
                raise ConfigError(f"coordinate e{idx + 1} out of range in {text!r}")
            coords_l[idx] += sign * mag
            pos = m.end()
        r = tuple(coords_l)
    if r not in space.psi_set:
        raise ConfigError(f"{text!r} is not a complementary root of {space.id}")
    return r


def parse_vector(space: HermitianSpace, text: str) -> TangentVector:
    coeffs: Dict[Root, Q] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ConfigError(f"expected root=rational, got {item!r}")
        key, _, val = item.partition("=")
        try:
            c = Q(val.strip())
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"bad rational {val.strip()!r}")
        r = parse_root(space, key)
        coeffs[r] = coeffs.get(r, Q(0)) + c
    if not coeffs or all(c == 0 for c in coeffs.values()):
        raise ConfigError("vector has no nonzero coefficient")
    return TangentVector(space, coeffs)


def _use_color() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _paint(text: str, code: str) -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if _use_color() else text


def emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _report(command: str, inputs: dict, results: dict, seed: int,
            checks: Optional[List[dict]] = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "checks": checks or [],
        "seed": seed,
    }


# -- subcommands ---------------------------------------------------------


def cmd_spaces(args) -> int:
    rows = [
        {"id": sid, "bounds": b, "v": v, "ell": ell, "range": rng}
        for sid, b, v, ell, rng in CATALOG_BOUNDS
    ]
    if args.json:
        emit_json(_report("spaces", {"what": "list"}, {"families": rows}, args.seed))
    else:
        print(f"{'family':<12} {'parameters':<16} {'dim v':<10} {'ell':<10} range")
        for sid, b, v, ell, rng in CATALOG_BOUNDS:
            print(f"{sid:<12} {b:<16} {v:<10} {ell:<10} {rng}")
    return 0


def cmd_positivity(args) -> int:
    space = resolve(args.space)
    ell = complex_positivity(space)
    orbit = orbit_positivity_values(space)
    names = [root_name(space, r) for r in space.psi]
    results = {
        "space": space.id,
        "v": space.v,
        "ell": ell,
        "orbit_values": list(orbit),
        "psi": names,
    }
    if args.json:
        emit_json(_report("positivity", {"space": args.space}, results, args.seed))
    elif args.quiet:
        print(f"{space.id} v={space.v} ell={ell}")
    else:
        print(f"space {space.id}: v = {space.v}, ell = {ell}")
        print(f"per-orbit positivity values: {list(orbit)}")
        print("Psi (canonical order):")
        for i, name in enumerate(names):
            print(f"  #{i}  {name}")
    return 0


def cmd_form(args) -> int:
    space = resolve(args.space)
    x = parse_vector(space, args.vector)
    form = hermitian_form(x)
    nul = nullity(x)
    ell_line = space.v - nul
    matrix = [[fmt_q(e) for e in row] for row in form.matrix]
    results = {
        "space": space.id,
        "vector": {root_name(space, r): fmt_q(c) for r, c in sorted(x.coeffs.items())},
        "matrix": matrix,
        "nullity": nul,
        "ell_line": ell_line,
    }
    if args.json:
        emit_json(_report(
            "form", {"space": args.space, "vector": args.vector}, results, args.seed
        ))
    else:
        if not args.quiet:
            width = max(len(e) for row in matrix for e in row)
            for row in matrix:
                print("  " + " ".join(e.rjust(width) for e in row))
        print(f"nullity = {nul}, ell(line) = {ell_line}")
    return 0


def cmd_range(args) -> int:
    space = resolve(args.space)
    rep = connectivity(space, args.m, args.n, ell_override=args.ell0)
    results = {
        "space": rep.space_id,
        "v": rep.v,
        "ell": rep.ell,
        "m": rep.m,
        "n": rep.n,
        "lambda0": rep.lambda0,
        "iso_max": rep.iso_max,
        "surj_at": rep.surj_at,
        "pi_vanish_max": rep.pi_vanish_max,
        "pair_vanish_max": rep.pair_vanish_max,
        "vacuous": rep.vacuous,
    }
    if args.json:
        inputs = {"space": args.space, "m": args.m, "n": args.n, "ell0": args.ell0}
        emit_json(_report("range", inputs, results, args.seed))
    else:
        tag = " (vacuous)" if rep.vacuous else ""
        print(f"space {rep.space_id}: v = {rep.v}, ell = {rep.ell}")
        print(f"isomorphism for j <= {rep.iso_max}, surjection at j = {rep.surj_at}{tag}")
        if not args.quiet:
            print(f"pi_j vanishing for j <= {rep.pi_vanish_max} (with n := m)")
            print(f"pair vanishing for j <= {rep.pair_vanish_max}")
    return 0


def cmd_table(args) -> int:
    rows = []
    for sid in TABLE_SPACES:
        space = resolve(sid)
        rows.append({"space": sid, "v": space.v, "ell": complex_positivity(space)})
    results = {
        "formulas": [
            {"family": sid, "v": v, "ell": ell, "range": rng}
            for sid, _b, v, ell, rng in CATALOG_BOUNDS
        ],
        "values": rows,
    }
    if args.json:
        emit_json(_report("table", {}, results, args.seed))
    else:
        print(f"{'family':<12} {'v':<12} {'ell':<10} isomorphism range")
        for sid, _b, v, ell, rng in CATALOG_BOUNDS:
            print(f"{sid:<12} {v:<12} {ell:<10} j <= {rng}")
        if not args.quiet:
            print()
            print(f"{'space':<12} {'v':<5} ell")
            for row in rows:
                print(f"{row['space']:<12} {row['v']:<5} {row['ell']}")
    return 0


def cmd_verify(args) -> int:
    ok, payload = run_verify(args.space, args.seed, args.samples)
    inputs = {"space": args.space, "samples": args.samples}
    if args.json:
        emit_json(_report(
            "verify", inputs, payload["results"], args.seed, payload["checks"]
        ))
    else:
        for c in payload["checks"]:
            if c["status"] == "pass":
                if not args.quiet:
                    print(f"{_paint('pass', '32')}  {c['name']}: {c['detail']}")
            else:
                print(f"{_paint('FAIL', '31')}  {c['name']}: {c['detail']}")
        n = len(payload["checks"])
        bad = [c["name"] for c in payload["checks"] if c["status"] != "pass"]
        if ok:
            print(f"all {n} checks passed")
        else:
            print(f"{len(bad)} of {n} checks failed: {', '.join(bad)}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermpos",
        description="Exact curvature positivity and connectivity ranges for "
        "compact irreducible hermitian symmetric spaces.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--quiet", action="store_true", help="suppress detail lines")
    common.add_argument("--seed", type=int, default=42,
                        help="seed for randomized sweeps")
    common.add_argument("--samples", type=int, default=500,
                        help="sample budget for randomized sweeps")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add(name: str, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add("spaces", help="catalog families and parameter bounds")
    p.add_argument("what", choices=["list"])
    p.set_defaults(func=cmd_spaces)

    p = add("positivity", help="v, ell and the Psi basis of a space")
    p.add_argument("space")
    p.set_defaults(func=cmd_positivity)

    p = add("form", help="curvature form of a tangent vector")
    p.add_argument("space")
    p.add_argument("--vector", required=True,
                   help="comma-separated root=rational pairs; roots named like "
                   "e1-e3, 2e1, #4 (Psi index) or (a:b:...) coordinates")
    p.set_defaults(func=cmd_form)

    p = add("range", help="connectivity report for dimensions m, n")
    p.add_argument("space")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--ell0", type=int, default=None,
                   help="strengthened positivity value to use instead of ell")
    p.set_defaults(func=cmd_range)

    p = add("table", help="closed-form positivity and range table")
    p.set_defaults(func=cmd_table)

    p = add("verify", help="run the full invariant battery")
    p.add_argument("--space", default=None, help="restrict to one space id")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
