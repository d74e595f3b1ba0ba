"""JSON batch front end.

Exit codes: 0 success (and "equivalent" for `equiv`), 1 malformed input,
2 precondition violation, 3 not equivalent, 4 unknown.  Diagnostics go to
stderr, data to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify, jsonio, oracle
from .errors import QuadlawError
from .jsonio import FormatError
from .sbl import SBL

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_PRECONDITION = 2
EXIT_NOT_EQUIVALENT = 3
EXIT_UNKNOWN = 4


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise FormatError(str(e)) from e


def _read_law(path: str) -> SBL:
    return jsonio.sbl_from_json(_read_json(path))


def _emit(obj, pretty: bool) -> None:
    json.dump(obj, sys.stdout, indent=2 if pretty else None)
    sys.stdout.write("\n")


def _cmd_qform(args) -> int:
    F = _read_law(args.law)
    q = F.qform()
    _emit(
        {
            "field": jsonio.spec_to_json(F.spec),
            "gram": {
                "q11": jsonio.value_to_json(q.q11),
                "q12": jsonio.value_to_json(q.q12),
                "q22": jsonio.value_to_json(q.q22),
            },
        },
        args.pretty,
    )
    return EXIT_OK


def _cmd_trace(args) -> int:
    F = _read_law(args.law)
    t = F.trace()
    _emit(
        {
            "field": jsonio.spec_to_json(F.spec),
            "trace": [jsonio.value_to_json(t.l1), jsonio.value_to_json(t.l2)],
        },
        args.pretty,
    )
    return EXIT_OK


def _cmd_regular(args) -> int:
    F = _read_law(args.law)
    d = F.det_qbar()
    _emit(
        {"det_qbar": jsonio.value_to_json(d), "regular": not d.is_zero()},
        args.pretty,
    )
    return EXIT_OK


def _cmd_invariants(args) -> int:
    F = _read_law(args.law)
    i1, i2 = F.invariants()
    out = {"I1": jsonio.value_to_json(i1), "I2": jsonio.value_to_json(i2)}
    if not F.qform().is_degenerate():
        nf = classify.normal_form(F)
        if nf is not None:
            out["K"] = jsonio.value_to_json(classify.K(nf))
            out["Na"] = jsonio.value_to_json(classify.Na(nf))
            j1, j2 = classify.invariants_J(nf)
            out["J1"] = jsonio.value_to_json(j1)
            out["J2"] = jsonio.value_to_json(j2)
    _emit(out, args.pretty)
    return EXIT_OK


def _cmd_normal_form(args) -> int:
    F = _read_law(args.law)
    nf = classify.normal_form(F)
    if nf is None:
        print("could not represent -1 within the search bound", file=sys.stderr)
        return EXIT_UNKNOWN
    _emit(jsonio.normal_form_to_json(nf), args.pretty)
    return EXIT_OK


def _cmd_equiv(args) -> int:
    F1 = _read_law(args.law1)
    F2 = _read_law(args.law2)
    res = classify.equivalent(F1, F2)
    _emit(jsonio.equiv_result_to_json(res), args.pretty)
    if res.verdict == "equivalent":
        return EXIT_OK
    if res.verdict == "not_equivalent":
        return EXIT_NOT_EQUIVALENT
    return EXIT_UNKNOWN


def _cmd_isotropy(args) -> int:
    F = _read_law(args.law)
    nf = classify.normal_form(F)
    if nf is None:
        print("could not represent -1 within the search bound", file=sys.stderr)
        return EXIT_UNKNOWN
    _emit(jsonio.isotropy_to_json(classify.isotropy(nf)), args.pretty)
    return EXIT_OK


_FILTERS = {"all": "all", "qN": "qform_equals_N", "regular": "regular"}


def _cmd_census(args) -> int:
    records = oracle.census(args.p, _FILTERS[args.filter], beta=args.beta)
    out = {
        "p": args.p,
        "filter": args.filter,
        "beta": args.beta,
        "total_laws": sum(r.members_in_filter for r in records),
        "orbits": [
            {
                "representative": jsonio.sbl_to_json(r.representative)["coeffs"],
                "orbit_size": r.orbit_size,
                "stabilizer_size": r.stabilizer_size,
                "regular": r.regular,
                "invariants": (
                    [jsonio.value_to_json(r.invariants[0]), jsonio.value_to_json(r.invariants[1])]
                    if r.invariants
                    else None
                ),
                "members_in_filter": r.members_in_filter,
            }
            for r in records
        ],
    }
    _emit(out, args.pretty)
    return EXIT_OK


def _cmd_cross_validate(args) -> int:
    report = oracle.cross_validate(
        args.p, seed=args.seed, sample_pairs=args.pairs, fixture_dir=args.fixture_dir
    )
    _emit(report.to_json(), args.pretty)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadlaw",
        description="Classify symmetric bilinear composition laws on the plane.",
    )
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, nlaws in (
        ("qform", _cmd_qform, 1),
        ("trace", _cmd_trace, 1),
        ("regular", _cmd_regular, 1),
        ("invariants", _cmd_invariants, 1),
        ("normal-form", _cmd_normal_form, 1),
        ("isotropy", _cmd_isotropy, 1),
        ("equiv", _cmd_equiv, 2),
    ):
        p = sub.add_parser(name)
        if nlaws == 1:
            p.add_argument("law", help="law JSON file, or - for stdin")
        else:
            p.add_argument("law1")
            p.add_argument("law2")
        p.set_defaults(fn=fn)

    p = sub.add_parser("census")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--filter", choices=sorted(_FILTERS), default="all")
    p.add_argument("--beta", type=int, default=None)
    p.set_defaults(fn=_cmd_census)

    p = sub.add_parser("cross-validate")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pairs", type=int, default=1000)
    p.add_argument("--fixture-dir", default=None)
    p.set_defaults(fn=_cmd_cross_validate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except FormatError as e:
        print(f"malformed input: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except QuadlawError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
