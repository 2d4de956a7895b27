"""Command-line interface.

Subcommands expose the invariant calculators (`invariants`), the
classification verdicts (`classify`), the sphere-bundle residue solver
(`ediffeo`), enumeration of positively curved spaces (`enumerate`),
cross-family matching (`match`), and catalog verification (`tables`).

All numeric output is exact: fractions are serialized as "num/den"
strings and residues as "value mod modulus" strings, never as binary
floating point.  Exit status is 0 on success, 1 on a domain error (the
error name is written to stderr), and 2 on a usage error.  Negative
parameter values are accepted either as plain arguments (`-b -607`) or
with `=` (`--s2=-1/36`).

Fixture spaces are read from `--fixtures PATH`, else from the
KRECKSTOLZ_FIXTURES environment variable, else from the catalog bundled
with the package.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .atlas_search import (
    build_index,
    circle_grid,
    eschenburg_descriptor,
    fixture_entries,
    match_all,
    render_matches_text,
    render_matches_tsv,
    render_table_text,
    reproduce_table,
    sphere_grid,
)
from .bundle_families import (
    BundleSpec,
    Family,
    describe_bundle_spec,
    parse_bundle_spec,
    profile,
)
from .classification import (
    EdiffeoProblem,
    Orientation,
    ediffeo_solve,
    ks_diffeomorphic,
    ks_homeomorphic,
    kruggel_homotopy,
)
from .errors import (
    CongruenceFailure,
    DivisibilityFailure,
    DomainError,
    MissingFixture,
    ParityFailure,
)
from .eschenburg import (
    enumerate_positively_curved,
    fixture_profile,
    invariants,
    load_fixtures,
)
from .profiles import InvariantProfile

__all__ = ["main", "run"]


class _UsageError(Exception):
    """Invalid flag combination detected after argument parsing."""


def _emit_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _get_fixtures(args):
    source = args.fixtures or os.environ.get("KRECKSTOLZ_FIXTURES") or None
    return load_fixtures(source)


# ---------------------------------------------------------------------------
# Space descriptors.
# ---------------------------------------------------------------------------


def _parse_int_tuple(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise DomainError(f"cannot parse {what} {text!r}: expected comma-separated integers") from exc


def _parse_space(text: str, args) -> tuple[str, InvariantProfile]:
    """Resolve a space descriptor to (normalized descriptor, profile).

    Bundle descriptors ('sphere:a,b', 'spin-sphere:a,b', 'circle:t,a,b',
    'spin-circle:t,a,b') are computed directly.  Eschenburg descriptors
    ('eschenburg:k1,k2,k3|l1,l2,l3') are resolved against the fixture
    catalog, since the s-values of these spaces are external inputs; if
    several fixtures share (k, l) the first in catalog order is used.
    """
    if text.startswith("eschenburg:"):
        body = text[len("eschenburg:") :]
        k_text, sep, l_text = body.partition("|")
        if not sep:
            raise DomainError(f"cannot parse {text!r}: expected eschenburg:k1,k2,k3|l1,l2,l3")
        k = _parse_int_tuple(k_text, "parameters")
        l = _parse_int_tuple(l_text, "parameters")
        for fixture in _get_fixtures(args):
            if tuple(fixture.space.k) == k and tuple(fixture.space.l) == l:
                return eschenburg_descriptor(fixture.space), fixture_profile(fixture)
        raise MissingFixture(f"no fixture with k={k}, l={l}")
    spec = parse_bundle_spec(text)
    return describe_bundle_spec(spec), profile(spec)


def _profile_payload(descriptor: str, prof: InvariantProfile) -> dict:
    lk = None
    if prof.lk is not None:
        lk = [str(c) for c in sorted(prof.lk, key=lambda c: c.value)]
    return {
        "space": descriptor,
        "cohomology_type": prof.cohomology_type.value,
        "r": prof.r,
        "s1": str(prof.s1),
        "s2": str(prof.s2),
        "s3": str(prof.s3),
        "p1": str(prof.p1),
        "lk": lk,
        "pi4": prof.pi4.value,
    }


def _profile_lines(payload: dict) -> list[tuple[str, str]]:
    lk = payload["lk"]
    return [
        ("space", payload["space"]),
        ("cohomology type", payload["cohomology_type"]),
        ("r", str(payload["r"])),
        ("s1", payload["s1"]),
        ("s2", payload["s2"]),
        ("s3", payload["s3"]),
        ("p1", payload["p1"]),
        ("lk", ", ".join(lk) if lk else "trivial"),
        ("pi4", payload["pi4"]),
    ]


# ---------------------------------------------------------------------------
# Subcommand handlers.  Each returns (exit code, output text).
# ---------------------------------------------------------------------------


def _cmd_invariants(args) -> tuple[int, str]:
    flag_style = args.family is not None or args.a is not None or args.b is not None or args.t is not None
    if args.space is not None and flag_style:
        raise _UsageError("give either a space descriptor or --family with -a/-b, not both")
    if args.space is not None:
        descriptor, prof = _parse_space(args.space, args)
    elif args.family is not None:
        if args.a is None or args.b is None:
            raise _UsageError("--family requires -a and -b")
        family = Family(args.family)
        needs_t = family in (Family.CIRCLE, Family.SPIN_CIRCLE)
        if needs_t and args.t is None:
            raise _UsageError(f"family {family.value!r} requires -t")
        if not needs_t and args.t is not None:
            raise _UsageError(f"family {family.value!r} does not take -t")
        spec = BundleSpec(family, args.a, args.b, t=args.t)
        descriptor, prof = describe_bundle_spec(spec), profile(spec)
    else:
        raise _UsageError("give a space descriptor or --family with -a/-b")
    payload = _profile_payload(descriptor, prof)
    if args.format == "json":
        return 0, _emit_json(payload)
    sep = "\t" if args.format == "tsv" else ": "
    return 0, "".join(f"{key}{sep}{value}\n" for key, value in _profile_lines(payload))


def _cmd_classify(args) -> tuple[int, str]:
    left_desc, left = _parse_space(args.left, args)
    right_desc, right = _parse_space(args.right, args)
    diffeo = ks_diffeomorphic(left, right)
    homeo = ks_homeomorphic(left, right)
    homotopy = kruggel_homotopy(left, right)
    payload = {
        "left": left_desc,
        "right": right_desc,
        "diffeomorphic": diffeo.value if diffeo else None,
        "homeomorphic": homeo.value if homeo else None,
        "homotopy": homotopy.value,
    }
    if args.format == "json":
        return 0, _emit_json(payload)
    sep = "\t" if args.format == "tsv" else ": "
    lines = [
        f"left{sep}{payload['left']}",
        f"right{sep}{payload['right']}",
        f"diffeomorphic{sep}{payload['diffeomorphic'] or 'none'}",
        f"homeomorphic{sep}{payload['homeomorphic'] or 'none'}",
        f"homotopy{sep}{payload['homotopy']}",
    ]
    return 0, "".join(line + "\n" for line in lines)


def _cmd_ediffeo(args) -> tuple[int, str]:
    problem = EdiffeoProblem(args.r, args.s1, args.s2, args.s3)
    wanted = (
        list(Orientation)
        if args.orientation == "both"
        else [Orientation(args.orientation)]
    )
    payload: dict = {"r": args.r}
    for orientation in wanted:
        try:
            solution = ediffeo_solve(problem, orientation)
        except (DivisibilityFailure, ParityFailure, CongruenceFailure) as exc:
            payload[orientation.value] = {
                "residues": None,
                "reason": f"{type(exc).__name__}: {exc}",
            }
        else:
            payload[orientation.value] = {
                "residues": [str(c) for c in solution.residues],
            }
    if args.format == "json":
        return 0, _emit_json(payload)
    lines = []
    for orientation in wanted:
        entry = payload[orientation.value]
        if entry["residues"] is None:
            value = f"no solution ({entry['reason']})"
        else:
            value = ", ".join(entry["residues"])
        if args.format == "tsv":
            lines.append(f"{orientation.value}\t{value}")
        else:
            lines.append(f"{orientation.value}: {value}")
    return 0, "".join(line + "\n" for line in lines)


def _cmd_enumerate(args) -> tuple[int, str]:
    rows = []
    for space in enumerate_positively_curved(args.r_max):
        inv = invariants(space)
        rows.append(
            {
                "space": eschenburg_descriptor(space),
                "r": inv.r,
                "s_signed": inv.s_signed,
                "p1": str(inv.p1),
            }
        )
    if args.format == "json":
        return 0, _emit_json(rows)
    if args.format == "tsv":
        return 0, "".join(
            f"{row['space']}\t{row['r']}\t{row['s_signed']}\t{row['p1']}\n" for row in rows
        )
    return 0, "".join(
        f"{row['space']}  r={row['r']}  s={row['s_signed']}  p1={row['p1']}\n" for row in rows
    )


def _parse_source(text: str, args) -> list[tuple[str, InvariantProfile]]:
    head, _, rest = text.partition(":")
    params = {}
    if rest:
        for pair in rest.split(","):
            key, sep, value = pair.partition("=")
            if not sep:
                raise DomainError(f"cannot parse source parameter {pair!r}: expected key=value")
            try:
                params[key] = int(value)
            except ValueError as exc:
                raise DomainError(f"source parameter {pair!r} is not an integer") from exc
    if head == "fixtures":
        if params:
            raise DomainError("source 'fixtures' takes no parameters")
        return fixture_entries(_get_fixtures(args))
    if head == "sphere":
        missing = {"r", "start", "stop"} - params.keys()
        if missing:
            raise DomainError(f"sphere source needs r, start, stop (missing {sorted(missing)})")
        return sphere_grid(params["r"], params["start"], params["stop"])
    if head == "circle":
        missing = {"r", "bound"} - params.keys()
        if missing:
            raise DomainError(f"circle source needs r, bound (missing {sorted(missing)})")
        return circle_grid(params["r"], params["bound"])
    raise DomainError(
        f"unknown source {head!r}: expected fixtures, sphere:r=..,start=..,stop=.., or circle:r=..,bound=.."
    )


def _cmd_match(args) -> tuple[int, str]:
    left = build_index(_parse_source(args.left, args))
    right = build_index(_parse_source(args.right, args))
    records = match_all(left, right, require_pi4_compat=not args.ignore_pi4)
    if args.format == "json":
        payload = [
            {
                "left": rec.left,
                "right": rec.right,
                "orientation": rec.orientation.value,
                "r": rec.evidence[0],
                "s1": str(rec.evidence[1]),
                "s2": str(rec.evidence[2]),
                "s3": str(rec.evidence[3]),
            }
            for rec in records
        ]
        return 0, _emit_json(payload)
    if args.format == "tsv":
        return 0, render_matches_tsv(records)
    return 0, render_matches_text(records)


def _cmd_tables(args) -> tuple[int, str]:
    report = reproduce_table(args.table, _get_fixtures(args))
    code = 0 if report.passed else 1
    if args.format == "json":
        rows = []
        for result in report.rows:
            rows.append(
                {
                    "r": result.row.r,
                    "starred": result.row.starred,
                    "space": result.space,
                    "partner": result.partner,
                    "orientation": result.orientation.value if result.orientation else None,
                    "residues": [str(c) for c in result.residues],
                    "p1": str(result.p1) if result.p1 is not None else None,
                    "passed": result.passed,
                    "problems": list(result.problems),
                }
            )
        return code, _emit_json({"table": report.table, "passed": report.passed, "rows": rows})
    if args.format == "tsv":
        lines = []
        for result in report.rows:
            lines.append(
                "\t".join(
                    (
                        report.table,
                        str(result.row.r),
                        "*" if result.row.starred else "",
                        result.orientation.value if result.orientation else "undetermined",
                        result.partner,
                        "pass" if result.passed else "fail",
                        "; ".join(result.problems),
                    )
                )
            )
        return code, "".join(line + "\n" for line in lines)
    return code, render_table_text(report)


# ---------------------------------------------------------------------------
# Parser.
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json", "tsv"),
        default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--fixtures",
        metavar="PATH",
        default=None,
        help="fixture catalog path (default: $KRECKSTOLZ_FIXTURES, else the bundled catalog)",
    )

    parser = argparse.ArgumentParser(
        prog="kreckstolz",
        description="Exact classification invariants for five families of 7-manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser(
        "invariants",
        parents=[common],
        help="invariant profile of one space",
        description="Compute the invariant profile of a bundle or fixture space.",
    )
    p_inv.add_argument("space", nargs="?", help="space descriptor, e.g. sphere:2,-1 or eschenburg:1,1,-2|0,0,0")
    p_inv.add_argument("--family", choices=[f.value for f in Family])
    p_inv.add_argument("-a", type=int, default=None)
    p_inv.add_argument("-b", type=int, default=None)
    p_inv.add_argument("-t", type=int, default=None, help="twisting parameter (circle families only)")
    p_inv.set_defaults(handler=_cmd_invariants)

    p_cls = sub.add_parser(
        "classify",
        parents=[common],
        help="diffeomorphism/homeomorphism/homotopy verdicts for two spaces",
    )
    p_cls.add_argument("left")
    p_cls.add_argument("right")
    p_cls.set_defaults(handler=_cmd_classify)

    p_ed = sub.add_parser(
        "ediffeo",
        parents=[common],
        help="sphere-bundle residues realizing given s-values",
        description=(
            "Solve for all a with S_{a,a-r} carrying the given s-values; "
            "residues are reported mod 168r."
        ),
    )
    p_ed.add_argument("-r", type=int, required=True)
    p_ed.add_argument("--s1", type=Fraction, required=True)
    p_ed.add_argument("--s2", type=Fraction, required=True)
    p_ed.add_argument("--s3", type=Fraction, required=True)
    p_ed.add_argument(
        "--orientation",
        choices=("preserving", "reversing", "both"),
        default="both",
    )
    p_ed.set_defaults(handler=_cmd_ediffeo)

    p_enum = sub.add_parser(
        "enumerate",
        parents=[common],
        help="positively curved parameter pairs up to a bound on r",
    )
    p_enum.add_argument("--r-max", type=int, required=True)
    p_enum.set_defaults(handler=_cmd_enumerate)

    p_match = sub.add_parser(
        "match",
        parents=[common],
        help="all diffeomorphic pairs between two collections",
        description=(
            "Sources: 'fixtures', 'sphere:r=3,start=0,stop=504', or 'circle:r=17,bound=1000'."
        ),
    )
    p_match.add_argument("--left", required=True)
    p_match.add_argument("--right", required=True)
    p_match.add_argument(
        "--ignore-pi4",
        action="store_true",
        help="do not let a proven pi4 difference block a match",
    )
    p_match.set_defaults(handler=_cmd_match)

    p_tab = sub.add_parser(
        "tables",
        parents=[common],
        help="verify a bundled catalog table row by row",
    )
    p_tab.add_argument("table", choices=("A", "B"))
    p_tab.set_defaults(handler=_cmd_tables)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, dispatch, and return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        code, output = args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(output)
    return code


def main() -> None:
    sys.exit(run())
