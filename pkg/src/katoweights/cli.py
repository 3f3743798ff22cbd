"""Command-line front end.

Subcommands: ``decompose`` (splitting with conformal weights), ``elliptic``
(classification), ``kato`` (constants), ``table`` (dimension 3/4 tables),
``verify`` (exact identity suites), ``oracle`` (numerical cross-check).
Every command renders either a human table or JSON; exit codes are 0 on
success, 2 on invalid input, 3 on an internal consistency failure.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__, ellipticity, kato, oracle, suites, tables
from .decomposition import decompose, to_json_dict
from .scalars import format_rational, sqrt_string
from .weights import parse_weight

JSON_SCHEMA_VERSION = "1"


def _emit(args, query: dict, result: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps({"version": JSON_SCHEMA_VERSION, "query": query, "result": result}, indent=2))
    else:
        print(text)


def _parse_subset(text: str) -> frozenset[int]:
    try:
        return frozenset(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise ValueError(f"cannot parse index set {text!r}: {exc}") from None


def _k_decimal(k_squared: Fraction) -> float:
    return math.sqrt(float(k_squared))


def cmd_decompose(args) -> None:
    lam = parse_weight(args.n, args.weight)
    dec = decompose(lam)
    lines = [str(lam), f"N = {dec.num_components} (case {dec.case}, nu = {dec.nu})"]
    lines.append(f"{'j':>3}  {'target(s)':<28} {'w':>8} {'w~':>8} {'dim':>10}")
    for comp in dec.components:
        targets = " + ".join(t.label() for t in comp.targets)
        lines.append(
            f"{comp.index:>3}  {targets:<28} {format_rational(comp.w):>8} "
            f"{format_rational(comp.translated_weight):>8} {comp.dim:>10}"
        )
    _emit(
        args,
        {"command": "decompose", "n": args.n, "weight": args.weight},
        to_json_dict(dec),
        "\n".join(lines),
    )


def cmd_elliptic(args) -> None:
    lam = parse_weight(args.n, args.weight)
    dec = decompose(lam)
    minimal = ellipticity.minimal_elliptic_sets(dec)
    ne_family = list(ellipticity.ne_sets(dec))
    maximal = ellipticity.maximal_non_elliptic_sets(dec)
    result = {
        "N": dec.num_components,
        "minimal_elliptic": [sorted(s) for s in minimal],
        "ne_family": [sorted(s) for s in ne_family],
        "maximal_non_elliptic": [sorted(s) for s in maximal],
    }
    lines = [
        str(lam),
        f"N = {dec.num_components}",
        "minimal elliptic sets: " + _render_sets(minimal),
        "choice family (NE):    " + _render_sets(ne_family),
        "maximal non-elliptic:  " + _render_sets(maximal),
    ]
    if args.I is not None:
        subset = _parse_subset(args.I)
        report = ellipticity.is_elliptic(dec, subset)
        result["query_set"] = sorted(subset)
        result["elliptic"] = report.elliptic
        result["witness"] = sorted(report.witness)
        verdict = "elliptic" if report.elliptic else "non-elliptic"
        lines.append(
            f"I = {sorted(subset)}: {verdict} (witness {sorted(report.witness)})"
        )
        if lam.n >= 4:
            necessary = ellipticity.check_nonelliptic_necessary(dec, subset)
            result["branching_necessary_condition"] = necessary
            lines.append(f"branching necessary condition: {necessary}")
    _emit(args, {"command": "elliptic", "n": args.n, "weight": args.weight, "I": args.I}, result, "\n".join(lines))


def cmd_kato(args) -> None:
    lam = parse_weight(args.n, args.weight)
    dec = decompose(lam)
    subset = _parse_subset(args.I)
    res = kato.kato_constant(dec, subset)
    closed = kato.closed_form(dec, subset)
    k_sq = res.k_squared
    result = {
        "N": dec.num_components,
        "I": sorted(subset),
        "elliptic": res.elliptic,
        "k_squared": format_rational(k_sq),
        "k": sqrt_string(k_sq),
        "k_decimal": f"{_k_decimal(k_sq):.12g}",
        "sharp": res.sharp,
        "extremal_set": sorted(res.extremal_set),
        "equality_case": {
            "gradient_set": sorted(res.equality.gradient_set),
            "vanishing_set": sorted(res.equality.vanishing_set),
        },
        "closed_form": format_rational(closed) if closed is not None else None,
    }
    lines = [
        f"{lam}, I = {sorted(subset)}",
        f"elliptic: {'yes' if res.elliptic else 'no'}",
        f"k^2 = {format_rational(k_sq)}",
        f"k   = {sqrt_string(k_sq)} = {_k_decimal(k_sq):.12g}",
        f"sharp: {'yes' if res.sharp else 'no'}",
        f"extremal choice set: {sorted(res.extremal_set)}",
        "equality case: derivative in summands "
        f"{sorted(res.equality.gradient_set)} with projections "
        f"{sorted(res.equality.vanishing_set)} vanishing",
    ]
    if closed is not None:
        lines.append(f"closed form: {format_rational(closed)}")
    _emit(args, {"command": "kato", "n": args.n, "weight": args.weight, "I": args.I}, result, "\n".join(lines))


def cmd_table(args) -> None:
    if args.dim3 == args.dim4:
        raise ValueError("choose exactly one of --dim3 / --dim4")
    rows = tables.dim3_table(args.rmax) if args.dim3 else tables.dim4_table(args.rmax)
    mismatches = [r for r in rows if r.k_squared != r.formula_k_squared]
    if mismatches:
        raise AssertionError(
            f"{len(mismatches)} cells disagree with the published formulas"
        )
    header = f"{'operator':<18} {'condition':<16} {'r':>3} {'s':>3} {'k^2':>10} {'k':>14} {'decimal':>15}"
    lines = [header, "-" * len(header)]
    for row in rows:
        lines.append(
            f"{row.operator:<18} {row.condition:<16} {row.r:>3} "
            f"{'-' if row.s is None else row.s:>3} {format_rational(row.k_squared):>10} "
            f"{row.k_string:>14} {_k_decimal(row.k_squared):>15.10f}"
        )
    result = {
        "dimension": 3 if args.dim3 else 4,
        "rmax": args.rmax,
        "rows": [
            {
                "operator": row.operator,
                "condition": row.condition,
                "r": row.r,
                "s": row.s,
                "I": sorted(row.index_set),
                "k_squared": format_rational(row.k_squared),
                "k": row.k_string,
                "k_decimal": f"{_k_decimal(row.k_squared):.12g}",
            }
            for row in rows
        ],
    }
    _emit(args, {"command": "table", "dim": 3 if args.dim3 else 4, "rmax": args.rmax}, result, "\n".join(lines))


def cmd_verify(args) -> None:
    names = sorted(suites.SUITES) if args.suite == "all" else [args.suite]
    results = [suites.run_suite(name) for name in names]
    lines = [res.line() for res in results]
    for res in results:
        for failure in res.failures:
            lines.append(f"    {failure}")
    result = {
        "suites": [
            {"name": res.name, "checks": res.checks, "failures": res.failures}
            for res in results
        ]
    }
    _emit(args, {"command": "verify", "suite": args.suite}, result, "\n".join(lines))
    if any(not res.passed for res in results):
        raise AssertionError("verification suite failed")


def cmd_oracle(args) -> None:
    model = oracle.build_rep(args.n, args.rep)
    bm = oracle.build_b_operator(model)
    dec = bm.dec
    n_comp = dec.num_components
    if args.I is not None:
        subsets = [ellipticity.validate_subset(dec, _parse_subset(args.I))]
    else:
        subsets = [
            frozenset(c)
            for size in range(1, n_comp + 1)
            for c in itertools.combinations(range(1, n_comp + 1), size)
        ]
    lines = [
        f"{model.kind} module of so({model.n}): dim V = {model.dim_v}"
        + (f" ({model.weight_multiplicity} chirality copies)" if model.weight_multiplicity > 1 else ""),
        f"eigenvalue defect vs conformal weights: {bm.eigen_defect:.3e}",
        f"zero-form defect: {oracle.bzero_defect(bm, seed=args.seed):.3e}",
    ]
    rows = []
    for subset in subsets:
        res = kato.kato_constant(dec, subset)
        complement = frozenset(range(1, n_comp + 1)) - subset
        sup = oracle.numeric_sup(bm, complement, seed=args.seed, restarts=args.restarts)
        defect = abs(sup.value ** 2 - float(res.k_squared))
        rows.append(
            {
                "I": sorted(subset),
                "elliptic": res.elliptic,
                "symbolic_k_squared": format_rational(res.k_squared),
                "numeric_sup": sup.value,
                "defect": defect,
            }
        )
        lines.append(
            f"I={sorted(subset)!s:<12} elliptic={'yes' if res.elliptic else 'no ':<3} "
            f"k^2={format_rational(res.k_squared):>8} numeric^2={sup.value ** 2:.9f} "
            f"defect={defect:.3e}"
        )
    result = {
        "n": args.n,
        "rep": args.rep,
        "dim_v": model.dim_v,
        "eigen_defect": bm.eigen_defect,
        "rows": rows,
    }
    _emit(args, {"command": "oracle", "n": args.n, "rep": args.rep, "I": args.I, "seed": args.seed}, result, "\n".join(lines))


def _render_sets(sets) -> str:
    return "  ".join("{" + ",".join(str(i) for i in sorted(s)) + "}" for s in sets)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="katoweights",
        description="Exact refined Kato constants for SO(n)/Spin(n) gradient operators",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, weight=True):
        if weight:
            p.add_argument("--n", type=int, required=True, help="dimension n >= 3")
            p.add_argument("--weight", required=True, help='comma-separated coordinates, e.g. "3/2,1/2"')
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("decompose", help="splitting of R^n (x) V with conformal weights")
    add_common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("elliptic", help="ellipticity classification")
    add_common(p)
    p.add_argument("--I", help="comma-separated summand indices to classify")
    p.set_defaults(func=cmd_elliptic)

    p = sub.add_parser("kato", help="refined Kato constant for an index set")
    add_common(p)
    p.add_argument("--I", required=True, help="comma-separated summand indices")
    p.set_defaults(func=cmd_kato)

    p = sub.add_parser("table", help="constant tables in dimension 3 or 4")
    p.add_argument("--dim3", action="store_true")
    p.add_argument("--dim4", action="store_true")
    p.add_argument("--rmax", type=int, default=8)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run exact verification suites")
    p.add_argument(
        "--suite",
        default="identities",
        choices=sorted(suites.SUITES) + ["all"],
    )
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="numerical cross-check on a tensor module")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rep", required=True, help="standard | sym2 | lambda^p")
    p.add_argument("--I", help="single index set; default sweeps all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
