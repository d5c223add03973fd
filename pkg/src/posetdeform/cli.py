"""Command-line front end.

Seven verbs: validate, cohomology, hochschild, verify, deform,
mc-check, gauge-equiv.  Posets and deformation elements are read from
JSON files; reports go to standard output as a table (default) or as
exactly one JSON document (--format json).  Exit status: 0 for success
or a passing check, 1 for a negative mathematical answer (a failing
suite, a non-MC element, inequivalent deformations, disagreeing
complexes), 2 for usage or input problems.

All sampling is driven by the --seed value through named generators, so
a report is a pure function of argv plus file contents; --no-meta drops
the generation timestamp to make that reproducibility byte-exact.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .deform import MCElement, NotMC, gauge_equivalent, mc_check, moduli
from .gsiso import verify_morphism
from .hochschild import TooLarge, hh_dims
from .posets import Poset, PosetError
from .simplicial import cohomology_dims
from .suites import SUITES


class _InputError(Exception):
    """Anything that should terminate with exit code 2."""


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise _InputError("%s: %s" % (path, e.strerror or e)) from e
    except json.JSONDecodeError as e:
        raise _InputError(
            "%s: invalid JSON at line %d column %d: %s"
            % (path, e.lineno, e.colno, e.msg)
        ) from e


def _load_poset(path):
    data = _load_json(path)
    try:
        return Poset.from_dict(data)
    except (PosetError, KeyError, TypeError, ValueError) as e:
        raise _InputError("%s: %s" % (path, e)) from e


def _load_mc(path, poset):
    data = _load_json(path)
    try:
        return MCElement.from_dict(poset, data)
    except (KeyError, TypeError, ValueError) as e:
        raise _InputError("%s: %s" % (path, e)) from e


def _parser():
    top = argparse.ArgumentParser(
        prog="posetdeform",
        description="Poset cochain operads, Hochschild comparison, and "
        "formal deformations of incidence algebras.",
    )
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="verb", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument(
        "--no-meta",
        action="store_true",
        help="omit the version/timestamp block for byte-stable output",
    )

    v = sub.add_parser("validate", parents=[common], help="check a poset file")
    v.add_argument("poset")

    c = sub.add_parser(
        "cohomology", parents=[common], help="betti numbers of the nerve"
    )
    c.add_argument("poset")
    c.add_argument("--max-degree", type=int, default=2)
    c.add_argument(
        "--unnormalized",
        action="store_true",
        help="use all weak chains instead of the strict-chain complex",
    )

    h = sub.add_parser(
        "hochschild",
        parents=[common],
        help="compare simplicial, relative, and full cohomology dimensions",
    )
    h.add_argument("poset")
    h.add_argument("--max-degree", type=int, default=2)

    ver = sub.add_parser(
        "verify", parents=[common], help="run randomized verification suites"
    )
    ver.add_argument("poset")
    ver.add_argument(
        "--suite",
        choices=("operad", "brace", "hga", "dgla", "iso", "all"),
        default="all",
    )
    ver.add_argument("--samples", type=int, default=50)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--max-degree", type=int, default=3)

    d = sub.add_parser(
        "deform", parents=[common], help="moduli of formal deformations"
    )
    d.add_argument("poset")
    d.add_argument("--order", type=int, default=1)

    mc = sub.add_parser(
        "mc-check", parents=[common], help="test the Maurer-Cartan equation"
    )
    mc.add_argument("poset")
    mc.add_argument("element")

    ge = sub.add_parser(
        "gauge-equiv", parents=[common], help="decide gauge equivalence"
    )
    ge.add_argument("poset")
    ge.add_argument("element1")
    ge.add_argument("element2")

    return top


def _run_validate(args):
    p = _load_poset(args.poset)
    report = {
        "verb": "validate",
        "poset": p.name,
        "elements": p.n,
        "intervals": len(p.intervals()),
        "status": "ok",
    }
    return report, 0


def _run_cohomology(args):
    p = _load_poset(args.poset)
    if args.max_degree < 0:
        raise _InputError("--max-degree must be >= 0")
    strict = not args.unnormalized
    betti = cohomology_dims(p, args.max_degree, strict=strict)
    report = {
        "verb": "cohomology",
        "poset": p.name,
        "max_degree": args.max_degree,
        "mode": "strict" if strict else "weak",
        "betti": betti,
    }
    return report, 0


def _run_hochschild(args):
    p = _load_poset(args.poset)
    n = args.max_degree
    if not 0 <= n <= 2:
        raise _InputError("--max-degree must lie in 0..2 (full-complex cap)")
    try:
        simp = cohomology_dims(p, n, strict=True)
        relative = hh_dims(p, n, "relative")
        full = hh_dims(p, n, "full")
    except TooLarge as e:
        raise _InputError(str(e)) from e
    agree = simp == relative == full
    report = {
        "verb": "hochschild",
        "poset": p.name,
        "max_degree": n,
        "simplicial": simp,
        "relative": relative,
        "full": full,
        "agree": agree,
    }
    return report, 0 if agree else 1


def _run_verify(args):
    p = _load_poset(args.poset)
    if args.samples < 1:
        raise _InputError("--samples must be >= 1")
    if not 0 <= args.max_degree <= 3:
        raise _InputError("--max-degree must lie in 0..3")
    names = (
        ["operad", "brace", "hga", "dgla", "iso"]
        if args.suite == "all"
        else [args.suite]
    )
    reports = []
    for name in names:
        if name == "iso":
            rep = verify_morphism(
                p, samples=args.samples, seed=args.seed, max_degree=args.max_degree
            )
        else:
            from .simplicial import SimplicialCarrier

            rep = SUITES[name](
                SimplicialCarrier(p),
                samples=args.samples,
                seed=args.seed,
                max_degree=args.max_degree,
            )
        reports.append(rep)
    ok = all(r.ok for r in reports)
    if len(reports) == 1:
        report = {"verb": "verify", **reports[0].to_dict()}
    else:
        report = {
            "verb": "verify",
            "poset": p.name,
            "ok": ok,
            "reports": [r.to_dict() for r in reports],
        }
    return report, 0 if ok else 1


def _run_deform(args):
    p = _load_poset(args.poset)
    if args.order < 1:
        raise _InputError("--order must be >= 1")
    dim, basis = moduli(p, args.order)
    report = {
        "verb": "deform",
        "poset": p.name,
        "order": args.order,
        "dimension": dim,
        "basis": [e.to_dict(p) for e in basis],
    }
    return report, 0


def _run_mc_check(args):
    p = _load_poset(args.poset)
    e = _load_mc(args.element, p)
    ok, witness = mc_check(p, e)
    report = {
        "verb": "mc-check",
        "poset": p.name,
        "order": e.order,
        "ok": ok,
        "witness": None if ok else {"layer": witness[0], "chain": list(witness[1])},
    }
    return report, 0 if ok else 1


def _run_gauge_equiv(args):
    p = _load_poset(args.poset)
    e1 = _load_mc(args.element1, p)
    e2 = _load_mc(args.element2, p)
    try:
        wit = gauge_equivalent(p, e1, e2)
    except (NotMC, ValueError) as e:
        raise _InputError(str(e)) from e
    report = {
        "verb": "gauge-equiv",
        "poset": p.name,
        "order": e1.order,
        "equivalent": wit is not None,
        "witness": None if wit is None else wit.to_dict(p),
    }
    return report, 0 if wit is not None else 1


_HANDLERS = {
    "validate": _run_validate,
    "cohomology": _run_cohomology,
    "hochschild": _run_hochschild,
    "verify": _run_verify,
    "deform": _run_deform,
    "mc-check": _run_mc_check,
    "gauge-equiv": _run_gauge_equiv,
}


def _table_lines(value, indent=""):
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                yield "%s%s:" % (indent, k)
                yield from _table_lines(v, indent + "  ")
            else:
                yield "%s%s: %s" % (indent, k, _scalar(v))
    elif isinstance(value, list):
        if all(not isinstance(x, (dict, list)) for x in value):
            yield "%s%s" % (indent, " ".join(_scalar(x) for x in value))
        else:
            for x in value:
                yield from _table_lines(x, indent + "  ")
                yield "%s-" % indent
    else:
        yield "%s%s" % (indent, _scalar(value))


def _scalar(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (dict, list)) and not v:
        return "(none)"
    return str(v)


def _emit(report, args):
    if not args.no_meta:
        report = dict(report)
        report["meta"] = {
            "version": __version__,
            "generated": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        }
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        for line in _table_lines(report):
            print(line)


def main(argv=None):
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        code = e.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        report, code = _HANDLERS[args.verb](args)
    except _InputError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    _emit(report, args)
    return code


def console_entry():
    sys.exit(main(sys.argv[1:]))
