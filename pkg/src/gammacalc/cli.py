"""Command-line front end.

Subcommands: expected-dim, count, chow-class, multidegree, oracle,
ff-enum, verify.  Exit codes: 0 success, 2 usage error, 3 precondition
failure, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, chow, ffield_enum, split_oracle, verify
from .errors import (
    BudgetExceeded,
    DefectMismatch,
    GammaCalcError,
    GeneralPositionUnreachable,
    NegativeExpectedDim,
    NotStable,
    ParseError,
)
from .fields import QQ, PrimeField, field_from_spec, field_spec
from .relations import (
    parse_relations,
    random_split_relations,
    relations_to_tensors,
    serialize_relations,
)
from .shapes import defect, expected_dim, is_stable, parse_shape

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4


def _header(args, shape=None):
    head = {"version": __version__}
    if shape is not None:
        head["shape"] = str(shape)
    if getattr(args, "seed", None) is not None:
        head["seed"] = args.seed
    return head


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _class_text(cls: chow.ChowClass) -> str:
    """Render like the written form: 4e1e2e3+3e1e2e4+..."""
    return str(cls)


def cmd_expected_dim(args) -> int:
    shape = parse_shape(args.shape)
    df = defect(shape)
    dim = expected_dim(shape)
    payload = {
        **_header(args, shape),
        "defect": df,
        "n_times_rminus1": shape.n * (shape.r - 1),
        "expected_dim": dim,
        "stable": is_stable(shape),
        "overdetermined": dim < 0,
    }
    _emit(args, payload,
          f"defect={df} n(r-1)={shape.n * (shape.r - 1)} "
          f"expected_dim={dim} stable={is_stable(shape)}")
    return EXIT_OK


def cmd_count(args) -> int:
    shape = parse_shape(args.shape)
    count = chow.point_count(shape)
    payload = {**_header(args, shape), "point_count": count,
               "route": "chow-ring top coefficient"}
    _emit(args, payload, f"{count} points, counted with multiplicity")
    return EXIT_OK


def cmd_chow_class(args) -> int:
    shape = parse_shape(args.shape)
    cls = chow.gamma_class(shape)
    payload = {**_header(args, shape), "class": chow.to_json_dict(cls)}
    _emit(args, payload, _class_text(cls))
    return EXIT_OK


def cmd_multidegree(args) -> int:
    shape = parse_shape(args.shape)
    table = chow.multidegree_table(shape)
    payload = {
        **_header(args, shape),
        "table": [
            {"exp": list(exp), "coeff": str(table[exp])} for exp in sorted(table)
        ],
    }
    if shape.r == 2 and expected_dim(shape) == 1:
        md = chow.multidegree_tuple(shape)
        payload["multidegree"] = list(md)
        _emit(args, payload, f"multidegree {md}")
    else:
        _emit(args, payload, "\n".join(
            f"{exp}: {table[exp]}" for exp in sorted(table)))
    return EXIT_OK


def _load_or_sample_splits(args, shape, field):
    if args.relations:
        with open(args.relations) as fh:
            r, file_field, rels = parse_relations(fh.read())
        if r != shape.r:
            raise ParseError(f"relation file has r={r}, shape has r={shape.r}")
        return file_field, rels
    seed = args.seed if args.seed is not None else 0
    return field, random_split_relations(shape, seed=seed, field=field)


def cmd_oracle(args) -> int:
    shape = parse_shape(args.shape)
    field = field_from_spec(args.field)
    field, splits = _load_or_sample_splits(args, shape, field)
    census = split_oracle.profile_census(shape)
    cls = chow.gamma_class(shape)
    match = census == cls.terms
    pts = split_oracle.realize_points(splits, shape)
    payload = {
        **_header(args, shape),
        "field": field_spec(field),
        "census": [
            {"profile": list(prof), "count": census[prof]}
            for prof in sorted(census)
        ],
        "points": [[list(map(field.to_str, pt.coords)) for pt in tup]
                   for tup in pts],
        "chow_match": match,
        "count": len(pts),
    }
    _emit(args, payload,
          f"{len(pts)} distinct tuples; census vs Chow: "
          f"{'MATCH' if match else 'MISMATCH'}")
    return EXIT_OK if match else EXIT_VERIFY


def cmd_ff_enum(args) -> int:
    shape = parse_shape(args.shape)
    p = args.p
    budget = args.budget
    if args.relations:
        with open(args.relations) as fh:
            r, field, rels = parse_relations(fh.read())
        if not isinstance(field, PrimeField) or field.p != p:
            raise ParseError(f"relation file field {field.name} is not F{p}")
        tuples = ffield_enum.enumerate_gamma(rels, shape, p, budget=budget)
        payload = {
            **_header(args, shape), "p": p, "count": len(tuples),
            "status": "ENUMERATED",
        }
        if args.tuples:
            payload["tuples"] = [
                [list(map(field.to_str, pt.coords)) for pt in tup]
                for tup in tuples
            ]
        _emit(args, payload, f"{len(tuples)} tuples over F{p}")
        return EXIT_OK
    seed = args.seed if args.seed is not None else 0
    try:
        splits = random_split_relations(shape, seed=seed, field=PrimeField(p))
    except GeneralPositionUnreachable as exc:
        payload = {**_header(args, shape), "p": p, "status": "SKIPPED",
                   "reason": str(exc), "count": 0}
        _emit(args, payload, f"SKIPPED: {exc}")
        return EXIT_OK
    report = ffield_enum.compare_with_oracle(splits, shape, p, budget=budget)
    payload = {**_header(args, shape), **report, "seed": seed}
    if not args.tuples:
        payload.pop("only_scanned", None)
        payload.pop("only_realized", None)
    _emit(args, payload, f"{report['status']}, {report['count']} tuples over F{p}")
    return EXIT_OK if report["status"] != "MISMATCH" else EXIT_VERIFY


def cmd_verify(args) -> int:
    results = verify.run_all(
        s_max=args.s_max, n_max=args.n_max,
        seed=args.seed if args.seed is not None else 42,
        budget=args.budget,
    )
    all_ok = all(r.ok for r in results)
    if args.json:
        print(json.dumps({
            **_header(args),
            "checks": [
                {"name": r.name, "ok": r.ok, "detail": r.detail}
                for r in results
            ],
            "ok": all_ok,
        }, indent=2))
    else:
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            detail = f"  ({r.detail})" if r.detail else ""
            print(f"{status} {r.name}{detail}")
        for shape in verify.outside_hypothesis_shapes(n_max=2, s_max=3):
            if chow.is_zero(chow.gamma_class(shape)):
                print(f"NOTE {shape}: zero class, outside lemma hypothesis")
    return EXIT_OK if all_ok else EXIT_VERIFY


def cmd_sample_relations(args) -> int:
    shape = parse_shape(args.shape)
    field = field_from_spec(args.field)
    seed = args.seed if args.seed is not None else 0
    splits = random_split_relations(shape, seed=seed, field=field)
    print(serialize_relations(shape.r, field, splits))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammacalc",
        description="Exact calculator for truncated point schemes of graded "
                    "algebras: Chow classes, point counts, multidegrees, and "
                    "independent combinatorial and finite-field verification.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_shape=True):
        if needs_shape:
            p.add_argument("--shape", required=True,
                           help="shape literal, e.g. 'r=2 d=3,4 n=5'")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--relations", default=None,
                       help="relation file (JSON)")
        p.add_argument("--field", default="Q", help="Q or Fp:<p>")
        p.add_argument("--budget", type=int,
                       default=int(os.environ.get("GAMMACALC_BUDGET",
                                                  ffield_enum.DEFAULT_BUDGET)))
        return p

    common(sub.add_parser("expected-dim", help="defect and expected dimension"))
    common(sub.add_parser("count", help="point count with multiplicity"))
    common(sub.add_parser("chow-class", help="Chow class of the scheme"))
    common(sub.add_parser("multidegree", help="multidegree table/tuple"))
    common(sub.add_parser("oracle",
                          help="choice-function census and realized points"))
    ff = common(sub.add_parser("ff-enum",
                               help="exhaustive scan over a prime field"))
    ff.add_argument("--p", type=int, default=7, help="field characteristic")
    ff.add_argument("--tuples", action="store_true",
                    help="include tuples in the report")
    ver = common(sub.add_parser("verify", help="run the invariant suite"),
                 needs_shape=False)
    ver.add_argument("--s-max", type=int, default=6)
    ver.add_argument("--n-max", type=int, default=6)
    common(sub.add_parser("sample-relations",
                          help="emit seeded split relations as a file"))
    return parser


_HANDLERS = {
    "expected-dim": cmd_expected_dim,
    "count": cmd_count,
    "chow-class": cmd_chow_class,
    "multidegree": cmd_multidegree,
    "oracle": cmd_oracle,
    "ff-enum": cmd_ff_enum,
    "verify": cmd_verify,
    "sample-relations": cmd_sample_relations,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return _HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DefectMismatch, NotStable, NegativeExpectedDim, BudgetExceeded,
            GeneralPositionUnreachable) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except GammaCalcError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
