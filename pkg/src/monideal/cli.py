"""Command-line front end.

Exit codes: 0 success or all checks passed, 1 a violation (or an invalid
certificate), 2 usage or input error, 3 indeterminate results under --strict.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core
from .core import MonomialIdeal, format_monomial, load_ideal, parse_monomial
from .decomp import associated_primes, primary_decomposition, size_report
from .homology import TooManyGenerators, betti_lcm
from .sdepth import BoxTooLarge, certificate_from_dict, check_certificate, sdepth
from .verify import (
    WORKED_EXAMPLE_ALPHA,
    WORKED_EXAMPLE_GENS,
    SUITES,
    default_spec,
    lex_case,
    replay,
    run_suite,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_INDETERMINATE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(args, payload: dict, table: list) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in table:
            print(line)


def _read_ideal(args) -> MonomialIdeal:
    if args.inline is not None and args.file is not None:
        raise InputError("give either -i/--inline or -f/--file, not both")
    if args.inline is not None:
        text = args.inline
    elif args.file is not None:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(str(exc)) from exc
    else:
        raise InputError("no ideal given; use -i/--inline or -f/--file")
    return load_ideal(text)


def _proper(I: MonomialIdeal) -> MonomialIdeal:
    if not I.is_proper_nonzero:
        raise InputError(f"{I} must be a proper nonzero ideal")
    return I


def _vector(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(" ", "").strip("()[]").split(","))
    except ValueError as exc:
        raise InputError(f"cannot read vector {text!r}") from exc


# ---------- verbs ----------

def cmd_decompose(args) -> int:
    I = _proper(_read_ideal(args))
    dec = primary_decomposition(I)
    table = [f"{'radical':<20} component"]
    for c in dec.components:
        table.append(f"{str(c.radical):<20} {c.ideal}")
    _emit(args, {"ideal": core.ideal_to_dict(I), "components": dec.to_list()}, table)
    return EXIT_OK


def cmd_ass(args) -> int:
    I = _proper(_read_ideal(args))
    ass = associated_primes(I)
    _emit(args, {"ideal": core.ideal_to_dict(I), "ass": [list(P.support) for P in ass]},
          [str(P) for P in ass])
    return EXIT_OK


def cmd_size(args) -> int:
    I = _proper(_read_ideal(args))
    rep = size_report(I)
    payload = {"a": rep.a, "b": rep.b, "size": rep.size, "bigsize": rep.bigsize}
    _emit(args, payload, [f"a={rep.a} b={rep.b} size={rep.size} bigsize={rep.bigsize}"])
    return EXIT_OK


def cmd_depth(args) -> int:
    I = _proper(_read_ideal(args))
    table = betti_lcm(I, args.char)
    payload = table.to_dict()
    lines = [
        f"depth(S/I)={table.depth_quotient} depth(I)={table.depth_ideal} "
        f"pd(S/I)={table.pd} char={table.characteristic}",
        "betti totals: " + " ".join(f"b{i}={b}" for i, b in table.totals().items()),
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_sdepth(args) -> int:
    I = _proper(_read_ideal(args))
    g = _vector(args.g) if args.g else None
    res = sdepth(I, args.mode, g=g, budget=args.budget)
    cert = res.certificate.to_dict(res.poset)
    payload = {
        "mode": res.mode,
        "sdepth": res.value,
        "lower_bound": res.lower,
        "exact": res.exact,
        "nodes": res.nodes,
        "certificate": cert,
    }
    head = f"sdepth={res.value}" if res.exact else f"sdepth indeterminate (>= {res.lower}, budget exceeded)"
    lines = [f"{head} mode={res.mode} g={list(res.poset.g)}",
             f"certificate (k={res.certificate.k}, {len(res.certificate.intervals)} intervals):"]
    lines += [f"  [{list(b)}, {list(c)}]" for b, c in res.certificate.intervals]
    _emit(args, payload, lines)
    if not res.exact and args.strict:
        return EXIT_INDETERMINATE
    return EXIT_OK


def cmd_lex(args) -> int:
    n = args.n
    try:
        u = parse_monomial(args.u, n)
        v = parse_monomial(args.v, n)
    except core.ParseError as exc:
        raise InputError(str(exc)) from exc
    d = sum(u)
    I = core.lexsegment(n, d, u, v)
    rep = size_report(I)
    dq = betti_lcm(I, args.char).depth_quotient
    case, e_depth, e_size = lex_case(u, v)
    payload = {
        "ideal": core.ideal_to_dict(I),
        "size": rep.size,
        "depth_ideal": dq + 1,
        "minimal_depth": dq + 1 == rep.size + 1,
        "case": case,
        "case_depth": e_depth,
        "case_size": e_size,
    }
    lines = [
        f"L({format_monomial(u)}, {format_monomial(v)}) = {I}",
        f"size={rep.size} depth(I)={dq + 1} minimal_depth={dq + 1 == rep.size + 1}",
        f"case={case} predicted depth(I)={e_depth} size={e_size}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_modify(args) -> int:
    if args.worked_example:
        gens, alpha = WORKED_EXAMPLE_GENS, WORKED_EXAMPLE_ALPHA
        n = 7
    else:
        I = _read_ideal(args)
        if not args.alpha:
            raise InputError("--alpha is required unless --paper-example is given")
        gens, alpha, n = list(I.gens), _vector(args.alpha), I.n
        alpha = core.check_alpha(alpha, n)
        if not I.is_squarefree:
            raise InputError(f"{I} is not squarefree")
    image = core.modify_generators(gens, alpha)
    J = MonomialIdeal(n, image)
    payload = {"alpha": list(alpha), "generators": [list(g) for g in image],
               "ideal": core.ideal_to_dict(J)}
    lines = ["(" + ", ".join(format_monomial(g) for g in image) + ")"]
    if len(J.gens) != len(image):
        lines.append(f"minimal generators: {J}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.replay:
        with open(args.replay, encoding="utf-8") as fh:
            payload = json.load(fh)
        if "payload" in payload:
            payload = payload["payload"]
        results = replay(payload)
        out = [r.to_dict() for r in results]
        _emit(args, {"results": out}, [f"{r.instance} {r.claim}: {r.status}" for r in results])
        statuses = {r.status for r in results}
        return _exit_for(statuses, args.strict)
    if not args.suite:
        raise InputError("--suite is required")
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.budget is not None:
        overrides["budget"] = args.budget
    if args.count is not None:
        overrides["count"] = args.count
    if args.char is not None:
        overrides["characteristic"] = args.char
    if args.worked_example:
        if args.suite != "modification":
            raise InputError("--paper-example applies to the modification suite")
        overrides["worked_example"] = True
    spec = default_spec(args.suite, **overrides)
    report = run_suite(args.suite, spec, workers=args.workers)
    lines = [f"suite={args.suite} status={report.status} instances={report.to_dict()['instances']}"]
    lines.append(f"{'claim':<36} {'pass':>6} {'viol':>6} {'indet':>6}")
    for claim, t in report.tallies.items():
        lines.append(f"{claim:<36} {t['pass']:>6} {t['violation']:>6} {t['indeterminate']:>6}")
    for r in report.violations:
        lines.append(f"VIOLATION {r.instance} {r.claim}: observed {r.observed}, expected {r.expected}")
    _emit(args, report.to_dict(full=args.full), lines)
    return _exit_for({r.status for r in report.results}, args.strict)


def _exit_for(statuses: set, strict: bool) -> int:
    if "violation" in statuses:
        return EXIT_VIOLATION
    if "indeterminate" in statuses and strict:
        return EXIT_INDETERMINATE
    return EXIT_OK


def cmd_certify(args) -> int:
    I = _proper(_read_ideal(args))
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            data = json.load(fh)
        intervals, k, mode, g = certificate_from_dict(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed certificate: {exc}") from exc
    if args.k is not None:
        k = args.k
    if args.mode is not None:
        mode = args.mode
    if args.g:
        g = _vector(args.g)
    ok, reason = check_certificate(I, intervals, k, mode, g)
    _emit(args, {"valid": ok, "k": k, "mode": mode, "reason": reason},
          [f"valid certificate for sdepth >= {k} ({mode})" if ok else f"invalid: {reason}"])
    return EXIT_OK if ok else EXIT_VIOLATION


# ---------- parser ----------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monideal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, ideal=True):
        if ideal:
            p.add_argument("-i", "--inline", help="ideal text, '/' separating lines")
            p.add_argument("-f", "--file", help="ideal file (text or JSON)")
        p.add_argument("--format", choices=("table", "json"), default="table")

    for verb, fn in (("decompose", cmd_decompose), ("ass", cmd_ass), ("size", cmd_size)):
        p = sub.add_parser(verb)
        common(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("depth")
    common(p)
    p.add_argument("--char", type=int, default=32003, help="field characteristic, 0 or a prime")
    p.set_defaults(fn=cmd_depth)

    p = sub.add_parser("sdepth")
    common(p)
    p.add_argument("--mode", choices=("ideal", "quotient"), default="ideal")
    p.add_argument("--g", help="box corner overriding the lcm exponent, e.g. 2,2,1")
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("--strict", action="store_true")
    p.set_defaults(fn=cmd_sdepth)

    p = sub.add_parser("lex", help="lexsegment ideal L(u, v)")
    p.add_argument("n", type=int, help="number of variables")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--char", type=int, default=32003)
    common(p, ideal=False)
    p.set_defaults(fn=cmd_lex)

    p = sub.add_parser("modify", help="trivial modification x_i -> x_i^a_i")
    common(p)
    p.add_argument("--alpha", help="comma separated positive exponents")
    p.add_argument("--paper-example", dest="worked_example", action="store_true")
    p.set_defaults(fn=cmd_modify)

    p = sub.add_parser("verify")
    common(p, ideal=False)
    p.add_argument("--suite", choices=SUITES)
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--char", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--paper-example", dest="worked_example", action="store_true")
    p.add_argument("--full", action="store_true", help="include every result in JSON output")
    p.add_argument("--replay", help="re-run a violation payload from a JSON file")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("certify")
    p.add_argument("certificate", help="certificate JSON (or sdepth --format json output)")
    common(p)
    p.add_argument("--k", type=int)
    p.add_argument("--mode", choices=("ideal", "quotient"))
    p.add_argument("--g")
    p.set_defaults(fn=cmd_certify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except (InputError, core.ParseError, ValueError, TooManyGenerators, BoxTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
