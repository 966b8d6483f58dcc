"""Command-line pipeline: enumerate, classify, count, verify, reproduce tables.

Exit status is 0 iff every verification invoked by the command passed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .census import appendix_polynomials, burnside_census
from .classify import DEFAULT_BOUND, SCOPES, load_store, render_tables, run_classify, summarise
from .counting import count_octant, count_quadrant
from .group import explore_group, orbit_sum, orbit_sum_is_zero
from .guess import guess_precursive, verify_candidate
from .hadamard import detect_hadamard, hadamard_assemble
from .modp import DEFAULT_PRIME
from .steps import StepSet, QuadrantModel, dimension, parse_model, project_to_quadrant, unused_steps
from .verify import (
    ALGEBRAIC_SELECTORS,
    CLOSED_FORM_MODELS,
    verify_algebraic_results,
    verify_closed_form,
    verify_extraction,
    verify_functional_equation,
)


def _parse_any(text: str):
    """A 3D model string/mask, or a quadrant model when steps are 2 chars."""
    stripped = text.strip()
    if not stripped.startswith("0x"):
        tokens = [t.strip() for t in stripped.replace(",", ";").split(";") if t.strip()]
        if tokens and len(tokens[0].partition("*")[0]) == 2:
            return QuadrantModel.parse(stripped)
    return parse_model(stripped)


def _mode(arg: str):
    return "exact" if arg == "exact" else int(arg)


def cmd_census(args) -> int:
    t0 = time.time()
    j, k, i = appendix_polynomials()
    out = {"J": j.to_json(), "K": k.to_json(), "I": i.to_json()}
    if not args.formulas_only:
        for name, pred in (("J", "no-unused-step"), ("K", "dim<=1"), ("I", "dim2or3")):
            swept = burnside_census(pred)
            out[f"{name}_brute"] = swept.to_json()
            if swept.to_json() != out[name]:
                print(json.dumps(out, indent=1))
                print(f"MISMATCH between formulas and brute force for {name}", file=sys.stderr)
                return 1
    out["seconds"] = round(time.time() - t0, 2)
    print(json.dumps(out, indent=1))
    return 0


def cmd_classify(args) -> int:
    def progress(done, total):
        print(f"  {done}/{total}", file=sys.stderr)

    summary = run_classify(
        args.max_card, args.scope, args.store, args.bound, args.order,
        jobs=args.jobs, progress=progress if args.verbose else None,
    )
    print(json.dumps(summary, indent=1))
    return 0 if summary["verifications_all_passed"] and not summary["errors"] else 1


def cmd_tables(args) -> int:
    header, records = load_store(args.store)
    summary = summarise(records)
    if args.json:
        print(json.dumps(summary, indent=1))
    else:
        print(render_tables(summary, header.get("scope", "?")))
    return 0


def cmd_count(args) -> int:
    model = _parse_any(args.model)
    mode = _mode(args.mod)
    counter = count_octant if isinstance(model, StepSet) else count_quadrant
    table = counter(model, args.order, mode=mode, keep_tables=False)
    if args.out:
        table.export_json(args.out)
        print(f"wrote {args.out}")
    else:
        print(json.dumps({
            "model": model.render(),
            "N": args.order,
            "mode": mode if mode == "exact" else int(mode),
            "series": {"".join(map(str, pt)): [str(v) for v in vals] for pt, vals in sorted(table.series.items())},
        }, indent=1))
    return 0


def cmd_project(args) -> int:
    model = parse_model(args.model)
    da = dimension(model)
    out = {
        "model": model.render(),
        "dimension": da.dimension,
        "redundant_axes": sorted(da.redundant_axes),
        "unused_steps": [''.join('-0+'[c + 1] for c in s) for s in sorted(unused_steps(model))],
        "projections": {},
    }
    for axis in sorted(da.redundant_axes):
        out["projections"][axis] = project_to_quadrant(model, axis).render()
    if da.alpha_beta:
        perm, (a, b) = da.alpha_beta
        out["alpha_beta"] = {"permutation": list(perm), "alpha": str(a), "beta": str(b)}
    print(json.dumps(out, indent=1))
    return 0


def cmd_group(args) -> int:
    model = _parse_any(args.model)
    grp = explore_group(model, bound=args.bound)
    flag = orbit_sum_is_zero(grp) if grp.finite else None
    print(json.dumps(grp.to_report(flag), indent=1))
    return 0


def cmd_orbitsum(args) -> int:
    model = _parse_any(args.model)
    grp = explore_group(model, bound=args.bound)
    if not grp.finite:
        print(json.dumps({"order": f">={args.bound}", "orbit_sum": None}))
        return 1
    osum = orbit_sum(grp)
    names = ("x", "y", "z")[: grp.nvars]
    print(json.dumps({"order": grp.order, "orbit_sum_zero": osum.is_zero(), "orbit_sum": osum.render(names)}, indent=1))
    return 0


def cmd_hadamard(args) -> int:
    model = parse_model(args.model)
    decs = detect_hadamard(model)
    out = {"model": model.render(), "decompositions": [d.to_json() for d in decs]}
    if decs and args.check:
        asm = hadamard_assemble(decs[0], args.order)
        table = count_octant(model, args.order)
        agree = all(
            asm.count((i, j, k), n) == table.count((i, j, k), n)
            for n in range(args.order + 1)
            for i in range(n + 1) for j in range(n + 1) for k in range(n + 1)
        )
        out["assembly_matches_octant"] = agree
        if not agree:
            print(json.dumps(out, indent=1))
            return 1
    print(json.dumps(out, indent=1))
    return 0


def cmd_verify(args) -> int:
    reports = []
    if args.suite == "functional":
        model = _parse_any(args.model)
        reports.append(verify_functional_equation(model, args.order))
    elif args.suite == "extraction":
        model = _parse_any(args.model)
        reports.append(verify_extraction(model, args.order))
    elif args.suite == "closed-form":
        which = [args.model] if args.model else list(CLOSED_FORM_MODELS)
        for mid in which:
            reports.append(verify_closed_form(mid, args.order))
    elif args.suite == "algebraic":
        which = [args.model] if args.model else list(ALGEBRAIC_SELECTORS)
        for sel in which:
            reports.append(verify_algebraic_results(sel, args.order))
    else:
        raise ValueError(f"unknown suite {args.suite!r}")
    print(json.dumps([r.to_json() for r in reports], indent=1))
    return 0 if all(r.passed for r in reports) else 1


def cmd_guess(args) -> int:
    if args.input == "-":
        seq = json.load(sys.stdin)
    else:
        with open(args.input) as fh:
            payload = json.load(fh)
        if isinstance(payload, dict):  # counting-table export
            seq = [int(v) for v in payload["series"][args.series]]
        else:
            seq = [int(v) for v in payload]
    prime = DEFAULT_PRIME if args.mod == "exact" else int(args.mod)
    cands = guess_precursive(seq, args.r_max, args.d_max, prime=prime)
    out = []
    for c in cands:
        out.append({
            "order": c.order,
            "degree": c.degree,
            "prime": c.prime,
            "coefficients": c.coeffs,
            "verified_full": verify_candidate(c, seq),
        })
    print(json.dumps(out, indent=1))
    return 0 if out else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="octantwalks", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="counts of models by cardinality, formulas vs brute force")
    p.add_argument("--formulas-only", action="store_true")
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("classify", help="run the classification pipeline")
    p.add_argument("--max-card", type=int, default=6)
    p.add_argument("--scope", choices=SCOPES, default="3d")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--order", type=int, default=None, help="series order for extraction checks (0 skips)")
    p.add_argument("--store", default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("tables", help="render classification trees from a store")
    p.add_argument("--store", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_tables)

    p = sub.add_parser("count", help="octant/quadrant counting series")
    p.add_argument("model")
    p.add_argument("--order", type=int, default=20)
    p.add_argument("--mod", default="exact")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("project", help="dimension analysis and quadrant projection")
    p.add_argument("model")
    p.set_defaults(fn=cmd_project)

    p = sub.add_parser("group", help="explore the group of a model")
    p.add_argument("model")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.set_defaults(fn=cmd_group)

    p = sub.add_parser("orbitsum", help="orbit sum of a finite-group model")
    p.add_argument("model")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.set_defaults(fn=cmd_orbitsum)

    p = sub.add_parser("hadamard", help="Hadamard decompositions of a model")
    p.add_argument("model")
    p.add_argument("--check", action="store_true", help="cross-check assembly against the octant DP")
    p.add_argument("--order", type=int, default=10)
    p.set_defaults(fn=cmd_hadamard)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["functional", "extraction", "closed-form", "algebraic"])
    p.add_argument("model", nargs="?", default=None)
    p.add_argument("--order", type=int, default=12)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("guess", help="guess a P-recursive recurrence from terms")
    p.add_argument("input", help="JSON integer array file, '-' for stdin, or a table export")
    p.add_argument("--series", default="00", help="which specialisation of a table export")
    p.add_argument("--r-max", type=int, default=8)
    p.add_argument("--d-max", type=int, default=8)
    p.add_argument("--mod", default=str(DEFAULT_PRIME))
    p.set_defaults(fn=cmd_guess)

    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_escape_model_args(list(argv)))
    return args.fn(args)


def _escape_model_args(argv):
    """Model strings may start with '-', which argparse would read as a flag.

    Tokens over the step-grammar alphabet (which no real flag matches: flags
    contain letters) get a leading ';'; the parsers skip empty tokens, so the
    model is unchanged.  A literal '--' separator is honoured and removed.
    """
    out = []
    for tok in argv:
        if tok == "--":
            continue
        if tok.startswith("-") and len(tok) > 1 and set(tok) <= set("-0+*;,0123456789") and any(
            c in "+;,0" for c in tok
        ):
            tok = ";" + tok
        out.append(tok)
    return out


if __name__ == "__main__":
    sys.exit(main())
