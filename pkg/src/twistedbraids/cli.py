"""Command-line entry point.

Exit codes: 0 success, 1 a requested check failed (e.g. an invalid
certificate), 2 invalid parameters, 3 positivization not applicable, 4 oracle budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dean, goeritz, oracle, rewrite, svg, ttk
from .braid import BraidWord, exponent_sum, is_positive, permutation
from .errors import BraidError, BudgetExceeded, InvalidParams, NotApplicable
from .positivize import positivize as positivize_knot

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_NOT_APPLICABLE = 3
EXIT_BUDGET = 4


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


class Output:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def emit(self, text_lines, payload: dict, word: BraidWord | None = None, title: str | None = None):
        if self.fmt == "json":
            self.stream.write(dump_json(payload))
        elif self.fmt == "svg":
            if word is None:
                raise InvalidParams("--format svg is only available for braid-word output")
            self.stream.write(svg.render_braid(word, title))
        else:
            for line in text_lines:
                self.stream.write(line + "\n")


def _budget(args) -> oracle.OracleBudget:
    return oracle.OracleBudget(max_steps=args.budget)


def _word_payload(w: BraidWord) -> dict:
    return {
        "strands": w.strands,
        "letters": list(w.letters),
        "text": str(w),
        "length": len(w),
        "exponent_sum": exponent_sum(w),
        "permutation": list(permutation(w)),
        "positive": is_positive(w),
    }


def _params(args) -> ttk.TTKParams:
    return ttk.TTKParams(args.p, args.q, args.r, args.n)


def _family(args) -> ttk.FamilyPair:
    return ttk.make_family(args.k, args.q, args.m)


# -- commands ----------------------------------------------------------------------

def cmd_word(args, out: Output) -> int:
    params = _params(args)
    w = ttk.canonical_word(params)
    out.emit([str(w)], {"params": params.to_json(), "word": _word_payload(w)}, w, f"{params}")
    return EXIT_OK


def cmd_positivize(args, out: Output) -> int:
    params = _params(args)
    budget = _budget(args)
    res = positivize_knot(params, budget, verify=args.verify)
    if args.certificate:
        with open(args.certificate, "w", encoding="utf-8") as fh:
            fh.write(dump_json(res.certificate.to_json()))
    payload = {
        "params": params.to_json(),
        "word": _word_payload(res.word),
        "fibered": res.fibered,
        "steps": len(res.certificate.steps),
    }
    lines = [str(res.word), f"length {len(res.word)}, {len(res.certificate.steps)} rewrite steps, fibered"]
    code = EXIT_OK
    if args.verify:
        verdict = rewrite.replay(res.certificate, budget)
        payload["replay"] = "Valid" if verdict else verdict.to_json()
        payload["oracle"] = res.oracle.value
        lines.append(f"replay: {'Valid' if verdict else 'InvalidAtStep ' + str(verdict.index)}")
        lines.append(f"oracle: {res.oracle.value}")
        if res.oracle is oracle.Equality.BUDGET_EXCEEDED:
            code = EXIT_BUDGET
        elif not verdict or res.oracle is not oracle.Equality.EQUAL:
            code = EXIT_CHECK_FAILED
        else:
            lines.append("verified")
    out.emit(lines, payload, res.word, f"positive form of {params}")
    return code


def cmd_verify_cert(args, out: Output) -> int:
    with open(args.path, encoding="utf-8") as fh:
        cert = rewrite.RewriteCertificate.from_json(json.load(fh))
    verdict = rewrite.replay(cert, _budget(args), oracle=args.oracle)
    if verdict:
        out.emit([f"Valid ({verdict.steps} steps)"], {"verdict": "Valid", "steps": verdict.steps})
        return EXIT_OK
    out.emit([f"InvalidAtStep {verdict.index}: {verdict.reason}"],
             {"verdict": "InvalidAtStep", **verdict.to_json()})
    return EXIT_CHECK_FAILED


def cmd_equal(args, out: Output) -> int:
    u = BraidWord.parse(args.u, args.strands)
    v = BraidWord.parse(args.v, args.strands)
    verdict = oracle.words_equal(u, v, _budget(args))
    out.emit([verdict.value], {"u": str(u), "v": str(v), "strands": args.strands, "verdict": verdict.value})
    return EXIT_BUDGET if verdict is oracle.Equality.BUDGET_EXCEEDED else EXIT_OK


def cmd_alexander(args, out: Output) -> int:
    if args.ttk:
        params = ttk.TTKParams(*args.ttk)
        w = ttk.canonical_word(params)
    elif args.word is not None and args.strands is not None:
        w = BraidWord.parse(args.word, args.strands)
    else:
        raise InvalidParams("give a word with --strands, or --ttk P Q R N")
    poly = oracle.alexander_of_closure(w)
    out.emit([str(poly)], {"word": str(w), "strands": w.strands, "alexander": poly.to_json(), "text": str(poly)})
    return EXIT_OK


def _obstruction_line(res) -> str:
    if isinstance(res, goeritz.Witness):
        return f"obstruction: Witness {res.word}"
    return f"obstruction: {res.kind}"


def cmd_classify(args, out: Output) -> int:
    pair = _family(args)
    report = dean.classify_theorem3(pair)
    slope = ttk.surface_slope(pair)
    obs = goeritz.obstruction(pair)
    h1 = {"K1": ttk.h1_class(pair.K1).to_json(), "K2": ttk.h1_class(pair.K2).to_json()}
    lines = [f"K1 = {pair.K1}, K2 = {pair.K2}", f"surface slope {slope}",
             f"[K1] = {tuple(h1['K1'])}, [K2] = {tuple(h1['K2'])}", f"case {report.case}"]
    for kr in report.knots:
        side = f" ({kr.primitive_side})" if kr.primitive_side else ""
        lines.append(f"{kr.name}: {kr.label}{side}")
    if report.matches is not None:
        lines.append("case table: " + ("matches" if report.matches else "MISMATCH"))
        lines.extend("  " + msg for msg in report.mismatches)
    lines.append(_obstruction_line(obs))
    payload = {
        "pair": pair.to_json(),
        "slope": slope,
        "h1": h1,
        "classification": report.to_json(),
        "obstruction": {"verdict": obs.kind},
    }
    if isinstance(obs, goeritz.Witness):
        payload["obstruction"]["witness"] = obs.word.to_json()
    if args.deep:
        a1 = oracle.alexander_of_closure(ttk.canonical_word(pair.K1))
        a2 = oracle.alexander_of_closure(ttk.canonical_word(pair.K2))
        payload["alexander"] = {"K1": a1.to_json(), "K2": a2.to_json(), "equal": a1 == a2}
        lines.append(f"alexander: {a1} / {a2} ({'equal' if a1 == a2 else 'DIFFERENT'})")
    out.emit(lines, payload)
    return EXIT_OK


def cmd_obstruction(args, out: Output) -> int:
    pair = _family(args)
    res = goeritz.obstruction(pair)
    lines = [_obstruction_line(res)]
    if isinstance(res, goeritz.Witness):
        lines.append(f"prefix {res.prefix}, C = {res.block}")
        lines.append(f"conventions: {res.conventions}")
    elif isinstance(res, goeritz.Obstructed):
        for rec in res.evidence:
            cand = ", ".join(f"{k}={goeritz.fraction_str(v)}" for k, v in rec.candidate.items())
            lines.append(f"  prefix {rec.prefix} det {rec.det:+d}: {cand}"
                         f" integral={rec.integral} unimodular={rec.unimodular}")
    out.emit(lines, {"pair": pair.to_json(), **res.to_json()})
    return EXIT_OK


def cmd_slope(args, out: Output) -> int:
    pair = _family(args)
    slope = ttk.surface_slope(pair)
    g1 = ttk.slope_general(pair.K1.p, pair.K1.q, pair.K1.r, pair.K1.n)
    g2 = ttk.slope_general(pair.K2.p, pair.K2.q, pair.K2.r, pair.K2.n)
    out.emit([str(slope)], {"pair": pair.to_json(), "slope": slope,
                            "slope_general": {"K1": g1, "K2": g2}})
    return EXIT_OK


def cmd_h1(args, out: Output) -> int:
    params = _params(args)
    c = ttk.h1_class(params)
    out.emit([str(c.as_tuple())], {"params": params.to_json(), "h1": c.to_json()})
    return EXIT_OK


# -- parser --------------------------------------------------------------------------

def _add_globals(parser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "json", "svg"), default=d("text"))
    parser.add_argument("--budget", type=int, default=d(oracle.DEFAULT_MAX_STEPS),
                        help="oracle step budget (default 10^7)")
    parser.add_argument("--deep", action="store_true", default=d(False),
                        help="run the slower invariant checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twistedbraids", description="Twisted torus knot braid toolkit.")
    _add_globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def knot_args(p):
        for name in ("p", "q", "r", "n"):
            p.add_argument(name, type=int)

    def family_args(p):
        for name in ("k", "q", "m"):
            p.add_argument(name, type=int)

    p = sub.add_parser("word", parents=[common], help="canonical braid word of K(p,q,r,n)")
    knot_args(p)
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("positivize", parents=[common], help="positive braid word for K(p,q,r,-nu)")
    knot_args(p)
    p.add_argument("--certificate", metavar="PATH", help="write the rewrite certificate as JSON")
    p.add_argument("--verify", action="store_true", help="replay the certificate and run the word oracle")
    p.set_defaults(func=cmd_positivize)

    p = sub.add_parser("verify-cert", parents=[common], help="replay a certificate file")
    p.add_argument("path")
    p.add_argument("--oracle", action="store_true", help="also oracle-check each rewritten span")
    p.set_defaults(func=cmd_verify_cert)

    p = sub.add_parser("equal", parents=[common], help="decide equality of two braid words")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("alexander", parents=[common], help="Alexander polynomial of a braid closure")
    p.add_argument("word", nargs="?")
    p.add_argument("--strands", type=int)
    p.add_argument("--ttk", type=int, nargs=4, metavar=("P", "Q", "R", "N"))
    p.set_defaults(func=cmd_alexander)

    for name, func, text in (
        ("classify", cmd_classify, "classify the pair K1, K2 of the (k, q, m) family"),
        ("obstruction", cmd_obstruction, "homological obstruction for the (k, q, m) family"),
        ("slope", cmd_slope, "shared surface slope of the (k, q, m) family"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        family_args(p)
        p.set_defaults(func=func)

    p = sub.add_parser("h1", parents=[common], help="homology class of K(p,q,r,n)")
    knot_args(p)
    p.set_defaults(func=cmd_h1)
    return parser


def main(argv=None, stdout=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format, stdout)
    err = sys.stderr
    try:
        return args.func(args, out)
    except NotApplicable as exc:
        err.write(f"not applicable: {exc}\n")
        return EXIT_NOT_APPLICABLE
    except BudgetExceeded as exc:
        err.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (BraidError, OSError, json.JSONDecodeError, KeyError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
