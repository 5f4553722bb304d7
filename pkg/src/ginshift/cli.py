"""Command-line front end.

Exit codes: 0 success / all claims pass, 1 verification failure,
2 usage or parse error, 3 gin certification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .constructions import SplitRing, fibre_product_ideal
from .ginengine import GinUncertain, d_of, gin
from .groebner import initial_ideal
from .iofmt import (format_complex, format_ideal, format_monomial_ideal,
                    parse_complex, parse_ideal)
from .ring import ParseError, RingMismatch, order_by_name, parse_poly
from .simplicial import ShiftOverflow, delta_s, f_vector, stanley_reisner
from . import verify as verify_mod


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _default_seed():
    env = os.environ.get("GINSHIFT_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise ParseError(f"GINSHIFT_SEED must be an integer, got {env!r}")


def _add_global_flags(p, suppress):
    # on subcommands the defaults are suppressed so they cannot clobber
    # values already parsed from before the subcommand name
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--seed", type=int, default=d,
                   help="RNG seed (default: $GINSHIFT_SEED or 0)")
    p.add_argument("--bound", type=int, default=1000 if not suppress else d,
                   help="entry bound for random coordinate changes")
    p.add_argument("--trials", type=int, default=2 if not suppress else d,
                   help="independent trials required to agree")
    p.add_argument("--order", choices=["rlex", "lex"],
                   default="rlex" if not suppress else d)
    p.add_argument("--json", action="store_true",
                   default=False if not suppress else d,
                   help="emit JSON instead of plain text")
    p.add_argument("--modp", type=int, default=d,
                   help="prime for a modular Groebner pre-check")


def build_parser():
    ap = argparse.ArgumentParser(prog="ginshift",
                                 description="generic initial ideals, fibre "
                                             "products, and symmetric "
                                             "algebraic shifting")
    _add_global_flags(ap, suppress=False)
    parent = argparse.ArgumentParser(add_help=False)
    _add_global_flags(parent, suppress=True)
    sub = ap.add_subparsers(dest="command", required=True,
                            parser_class=lambda **kw: argparse.ArgumentParser(
                                parents=[parent], **kw))

    p = sub.add_parser("gin", help="generic initial ideal of an ideal file")
    p.add_argument("ideal")

    p = sub.add_parser("ini", help="initial ideal (no coordinate change)")
    p.add_argument("ideal")

    p = sub.add_parser("fibre", help="fibre product ideal F(I,J)=I+J+Q")
    p.add_argument("ideal_i")
    p.add_argument("ideal_j")
    p.add_argument("--gin", action="store_true", dest="also_gin",
                   help="print gin(F(I,J)) instead of its generators")

    p = sub.add_parser("shift", help="symmetric algebraic shift of a complex")
    p.add_argument("complex")

    p = sub.add_parser("sr", help="Stanley-Reisner ideal of a complex")
    p.add_argument("complex")

    p = sub.add_parser("fvector", help="f-vector of a complex")
    p.add_argument("complex")
    p.add_argument("--plot", metavar="PNG",
                   help="also render the f-vector to a PNG file")

    p = sub.add_parser("dvalue", help="d_I(x^a), the shadow count of a "
                                      "monomial relative to gin(I)")
    p.add_argument("ideal")
    p.add_argument("monomial", help="e.g. x1*x2^2")

    p = sub.add_parser("verify", help="run claim verification suites")
    p.add_argument("claim", help="a claim id, or `all`")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.add_argument("--max-m", type=int, default=None, dest="max_m")
    p.add_argument("--max-deg", type=int, default=None, dest="max_deg")
    p.add_argument("--jobs", type=int, default=None,
                   help="parallel workers for `verify all`")
    p.add_argument("--outdir", help="write reports.csv and summary.png here")
    return ap


def _emit(args, payload_json, payload_text):
    if args.json:
        json.dump(payload_json, sys.stdout, indent=2, default=str)
        sys.stdout.write("\n")
    else:
        print(payload_text)


def _command_report(args, command, params, result):
    return {"schema": 1, "claim_id": f"cmd-{command}", "params": params,
            "verdict": "pass", "witness": None, "result": result}


def _modp_precheck(ideal, order, p):
    from .groebner import UnluckyPrime, groebner_modp
    try:
        groebner_modp(ideal, order, p)
    except UnluckyPrime as exc:
        print(f"warning: mod-{p} pre-check hit an unlucky prime: {exc}",
              file=sys.stderr)


def cmd_gin(args, order, seed):
    ideal, _ = parse_ideal(_read(args.ideal))
    if args.modp:
        _modp_precheck(ideal, order, args.modp)
    result = gin(ideal, order, seed=seed, bound=args.bound, trials=args.trials)
    gens = format_monomial_ideal(result.gin).splitlines()
    _emit(args, _command_report(args, "gin",
                                {"seed": seed, "bound": args.bound,
                                 "trials": args.trials, "order": order.kind},
                                gens),
          "\n".join(gens) if gens else "0")
    return 0


def cmd_ini(args, order, seed):
    ideal, _ = parse_ideal(_read(args.ideal))
    if args.modp:
        _modp_precheck(ideal, order, args.modp)
    ini = initial_ideal(ideal, order)
    text = format_monomial_ideal(ini)
    _emit(args, _command_report(args, "ini", {"order": order.kind},
                                text.splitlines()),
          text if text else "0")
    return 0


def _fibre_parts(args):
    I, split_i = parse_ideal(_read(args.ideal_i))
    J, split_j = parse_ideal(_read(args.ideal_j))
    if split_i is not None or split_j is not None:
        raise ParseError("fibre expects single-block `ring <n>` inputs")
    split = SplitRing(I.ring.nvars, J.ring.nvars)
    return I, J, split


def cmd_fibre(args, order, seed):
    I, J, split = _fibre_parts(args)
    F = fibre_product_ideal(I, J, split)
    params = {"n": split.n, "m": split.m, "order": order.kind}
    if args.also_gin:
        params.update(seed=seed, bound=args.bound, trials=args.trials)
        g = gin(F, order, seed=seed, bound=args.bound, trials=args.trials).gin
        text = format_monomial_ideal(g)
    else:
        text = format_ideal(F, order)
    _emit(args, _command_report(args, "fibre", params, text.splitlines()), text)
    return 0


def cmd_shift(args, order, seed):
    cx = parse_complex(_read(args.complex))
    shifted = delta_s(cx, order, seed=seed, bound=args.bound,
                      trials=args.trials)
    text = format_complex(shifted)
    _emit(args, _command_report(args, "shift",
                                {"seed": seed, "bound": args.bound,
                                 "trials": args.trials, "order": order.kind},
                                text.splitlines()), text)
    return 0


def cmd_sr(args, order, seed):
    cx = parse_complex(_read(args.complex))
    text = format_monomial_ideal(stanley_reisner(cx))
    _emit(args, _command_report(args, "sr", {"vertices": cx.n},
                                text.splitlines()),
          text if text else "0")
    return 0


def cmd_fvector(args, order, seed):
    cx = parse_complex(_read(args.complex))
    fv = f_vector(cx)
    if args.plot:
        from .figures import render_f_vectors
        render_f_vectors([fv], [""], args.plot)
    _emit(args, _command_report(args, "fvector", {"vertices": cx.n}, list(fv)),
          ",".join(str(x) for x in fv))
    return 0


def cmd_dvalue(args, order, seed):
    ideal, _ = parse_ideal(_read(args.ideal))
    p = parse_poly(args.monomial, ideal.ring)
    if len(p.terms) != 1:
        raise ParseError(f"{args.monomial!r} is not a single monomial")
    (mono, coeff), = p.terms.items()
    if coeff != 1:
        raise ParseError(f"{args.monomial!r} is not a single monomial")
    value = d_of(ideal, mono, order, seed=seed, bound=args.bound,
                 trials=args.trials)
    _emit(args, _command_report(args, "dvalue",
                                {"monomial": args.monomial, "seed": seed,
                                 "bound": args.bound, "trials": args.trials},
                                value), str(value))
    return 0


def _write_outdir(outdir, reports):
    os.makedirs(outdir, exist_ok=True)
    with open(os.path.join(outdir, "reports.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["claim_id", "verdict", "elapsed_seconds", "params",
                    "witness"])
        for r in reports:
            w.writerow([r.claim_id, "pass" if r.verdict else "fail",
                        round(r.elapsed, 3),
                        json.dumps(r.params, default=str, sort_keys=True),
                        json.dumps(r.witness, default=str, sort_keys=True)])
    from .figures import render_verify_summary
    render_verify_summary(reports, os.path.join(outdir, "summary.png"))


def cmd_verify(args, order, seed):
    config = dict(seed=seed, bound=args.bound, trials=args.trials,
                  samples=args.samples, max_n=args.max_n, max_m=args.max_m,
                  max_deg=args.max_deg)
    if args.claim == "all":
        reports = verify_mod.run_all(jobs=args.jobs, **config)
    else:
        try:
            reports = [verify_mod.run_claim(args.claim, **config)]
        except KeyError:
            known = ", ".join(sorted(verify_mod.CLAIMS))
            print(f"unknown claim {args.claim!r}; known claims: {known}",
                  file=sys.stderr)
            return 2
    if args.outdir:
        _write_outdir(args.outdir, reports)
    if args.json:
        out = [r.to_dict() for r in reports]
        json.dump(out[0] if len(out) == 1 and args.claim != "all" else out,
                  sys.stdout, indent=2, default=str)
        sys.stdout.write("\n")
    else:
        for r in reports:
            line = f"{r.claim_id}: {'pass' if r.verdict else 'FAIL'} " \
                   f"({r.elapsed:.1f}s)"
            print(line)
            if not r.verdict:
                print(f"  witness: {json.dumps(r.witness, default=str)}")
                print(f"  replay: --seed {r.params.get('seed')}")
    return 0 if all(r.verdict for r in reports) else 1


COMMANDS = {
    "gin": cmd_gin,
    "ini": cmd_ini,
    "fibre": cmd_fibre,
    "shift": cmd_shift,
    "sr": cmd_sr,
    "fvector": cmd_fvector,
    "dvalue": cmd_dvalue,
    "verify": cmd_verify,
}


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    order = order_by_name(args.order)
    try:
        seed = args.seed if args.seed is not None else _default_seed()
        return COMMANDS[args.command](args, order, seed)
    except GinUncertain as exc:
        print(f"error: gin not certified: {exc} (seed {exc.seed}); "
              "raise --bound or --trials", file=sys.stderr)
        return 3
    except (ParseError, RingMismatch, ShiftOverflow, FileNotFoundError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
