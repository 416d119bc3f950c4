"""Command-line front end.

Subcommands mirror the library pipelines: order and phi-gens for the image
computations, classify sp/spin for the p-local deciders, invariant and
retractible for the bundle invariants, and verify for the self-check sweep.
Output is a Report rendered as markdown (default), JSON, or CSV, and is
byte-stable across runs.  Exit codes: 0 success, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .chdata import phi_generator_tops
from .errors import SpgaugeError
from .gauge import (
    Bundle,
    LieFamily,
    decide_local,
    decide_spin,
    im_partial_report,
    q2_mapping_report,
    refined_invariant,
    retractible,
    sutherland_invariant,
)
from .phi import closed_form_order, phi_image, samelson_order
from .report import FORMATS, Report, fmt_bool, fmt_frac, fmt_int
from .series import BACKENDS
from .verify import verify_sweep

_RANKED_FAMILIES = (LieFamily.SU, LieFamily.SP, LieFamily.SPIN_ODD)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spgauge",
        description="Exact invariants and p-local classification for "
                    "Sp(n) gauge groups over the 4-sphere.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="markdown",
                       help="output format (default markdown)")

    p_order = sub.add_parser(
        "order", help="Samelson product orders 4n(2n+1) from the image pipeline")
    group = p_order.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="single rank")
    group.add_argument("--max-n", type=int, help="sweep ranks 1..max-n")
    add_format(p_order)

    p_gens = sub.add_parser(
        "phi-gens", help="image generators of the comparison map at rank n")
    p_gens.add_argument("--n", type=int, required=True)
    p_gens.add_argument("--backend", choices=BACKENDS, default="series")
    add_format(p_gens)

    p_classify = sub.add_parser(
        "classify", help="p-local gauge group classification verdicts")
    classify_sub = p_classify.add_subparsers(dest="target", required=True)

    p_sp = classify_sub.add_parser("sp", help="Sp(n) gauge groups")
    p_sp.add_argument("--n", type=int, required=True)
    p_sp.add_argument("--p", type=int, required=True)
    p_sp.add_argument("--k", type=int)
    p_sp.add_argument("--l", type=int)
    p_sp.add_argument("--grid", action="store_true",
                      help="full verdict grid over k, l in [0, 4n(2n+1)]")
    add_format(p_sp)

    p_spin = classify_sub.add_parser("spin", help="Spin(2n+epsilon) gauge groups")
    p_spin.add_argument("--n", type=int, required=True)
    p_spin.add_argument("--epsilon", type=int, choices=(1, 2), required=True)
    p_spin.add_argument("--k", type=int, required=True)
    p_spin.add_argument("--l", type=int, required=True)
    p_spin.add_argument("--p", type=int, required=True)
    add_format(p_spin)

    p_inv = sub.add_parser(
        "invariant", help="bundle invariants (coarse, refined, quotient)")
    p_inv.add_argument("--n", type=int, required=True)
    p_inv.add_argument("--k", type=int, action="append", required=True,
                       help="bundle integer; repeat for several")
    add_format(p_inv)

    p_ret = sub.add_parser(
        "retractible", help="p-local retractibility of the generating complex")
    p_ret.add_argument("--family", required=True,
                       choices=[f.value for f in LieFamily])
    p_ret.add_argument("--p", type=int, required=True)
    p_ret.add_argument("--n", type=int,
                       help="rank (required for SU, Sp, SpinOdd)")
    add_format(p_ret)

    p_verify = sub.add_parser(
        "verify", help="run the acceptance property sweep")
    p_verify.add_argument("--max-n", type=int, default=20)
    p_verify.add_argument("--jobs", type=int, default=1,
                          help="worker processes for the sweeps")
    add_format(p_verify)

    return parser


def _cmd_order(args) -> Report:
    if args.n is not None and args.n < 1:
        raise SpgaugeError("--n must be a positive integer")
    if args.max_n is not None and args.max_n < 1:
        raise SpgaugeError("--max-n must be a positive integer")
    ranks = [args.n] if args.n is not None else list(range(1, args.max_n + 1))
    rows = [
        {"n": fmt_int(n), "samelson_order": fmt_int(samelson_order(n))}
        for n in ranks
    ]
    params = {"n": fmt_int(args.n)} if args.n is not None else {
        "max_n": fmt_int(args.max_n)}
    return Report("order", params, rows)


def _cmd_phi_gens(args) -> Report:
    result = phi_image(args.n, args.backend)
    pinned = (
        fmt_int(result.pinned_order) if result.pinned_order is not None
        else "unpinned"
    )
    rows = []
    names = ["zeta1"] + [f"xi{k}" for k in range(2, args.n + 1)]
    tops = phi_generator_tops(args.n, args.backend)
    for name, top, gen in zip(names, tops, result.upper_gens):
        rows.append({
            "n": fmt_int(args.n),
            "generator": name,
            "top_coeff": fmt_frac(top),
            "image_gen": fmt_int(gen),
            "lower_gen": fmt_int(result.lower_gen),
            "pinned_order": pinned,
        })
    return Report(
        "phi-gens",
        {"n": fmt_int(args.n), "backend": args.backend},
        rows,
    )


def _verdict_row(extra: dict, verdict) -> dict[str, str]:
    row = dict(extra)
    row["outcome"] = verdict.outcome.value
    row["invariant_k"] = fmt_int(verdict.invariant_values[0])
    row["invariant_l"] = fmt_int(verdict.invariant_values[1])
    row["guards_passed"] = fmt_bool(verdict.guards_passed())
    return row


def _cmd_classify_sp(args) -> Report:
    if args.grid:
        if args.k is not None or args.l is not None:
            raise SpgaugeError("--grid does not take --k/--l")
        b = closed_form_order(args.n)
        rows = []
        for k in range(b + 1):
            for l in range(b + 1):
                verdict = decide_local(args.n, k, l, args.p)
                rows.append(_verdict_row(
                    {"k": fmt_int(k), "l": fmt_int(l)}, verdict))
        params = {"n": fmt_int(args.n), "p": fmt_int(args.p),
                  "grid": f"0..{b}"}
        return Report("classify-sp", params, rows)
    if args.k is None or args.l is None:
        raise SpgaugeError("classify sp needs --k and --l (or --grid)")
    verdict = decide_local(args.n, args.k, args.l, args.p)
    row = _verdict_row(
        {"n": fmt_int(args.n), "k": fmt_int(args.k),
         "l": fmt_int(args.l), "p": fmt_int(args.p)},
        verdict,
    )
    params = {"n": fmt_int(args.n), "k": fmt_int(args.k),
              "l": fmt_int(args.l), "p": fmt_int(args.p)}
    return Report("classify-sp", params, [row])


def _cmd_classify_spin(args) -> Report:
    m = 2 * args.n + args.epsilon
    verdict = decide_spin(m, args.k, args.l, args.p)
    row = _verdict_row(
        {"m": fmt_int(m), "n": fmt_int(args.n), "epsilon": fmt_int(args.epsilon),
         "k": fmt_int(args.k), "l": fmt_int(args.l), "p": fmt_int(args.p)},
        verdict,
    )
    params = {"n": fmt_int(args.n), "epsilon": fmt_int(args.epsilon),
              "k": fmt_int(args.k), "l": fmt_int(args.l), "p": fmt_int(args.p)}
    return Report("classify-spin", params, [row])


def _cmd_invariant(args) -> Report:
    rows = []
    even = args.n >= 2 and args.n % 2 == 0
    for k in args.k:
        bundle = Bundle(args.n, k)
        row = {
            "n": fmt_int(args.n),
            "k": fmt_int(k),
            "sutherland": fmt_int(sutherland_invariant(bundle)),
            "refined": fmt_int(refined_invariant(bundle)),
        }
        if even:
            q2 = q2_mapping_report(args.n, k)
            partial = im_partial_report(args.n, k)
            row["q2_order"] = fmt_int(q2.order)
            row["q2_gcd_form"] = fmt_int(q2.gcd_form)
            row["q2_matches_gcd_form"] = fmt_bool(q2.matches_gcd_form)
            row["boundary_image_order"] = fmt_int(partial.order)
            row["boundary_factorial_form"] = fmt_int(partial.factorial_form)
        rows.append(row)
    return Report(
        "invariant",
        {"n": fmt_int(args.n), "k": ",".join(fmt_int(k) for k in args.k)},
        rows,
    )


def _cmd_retractible(args) -> Report:
    family = LieFamily(args.family)
    if family in _RANKED_FAMILIES and args.n is None:
        raise SpgaugeError(f"--n is required for {family.value}")
    value = retractible(family, args.n, args.p)
    row = {"family": family.value, "p": fmt_int(args.p),
           "retractible": fmt_bool(value)}
    params = {"family": family.value, "p": fmt_int(args.p)}
    if args.n is not None:
        row["n"] = fmt_int(args.n)
        params["n"] = fmt_int(args.n)
    return Report("retractible", params, [row])


def _cmd_verify(args) -> Report:
    if args.max_n < 2:
        raise SpgaugeError("verify needs --max-n >= 2")
    if args.jobs < 1:
        raise SpgaugeError("--jobs must be at least 1")
    return verify_sweep(args.max_n, args.jobs)


_HANDLERS = {
    "order": _cmd_order,
    "phi-gens": _cmd_phi_gens,
    "invariant": _cmd_invariant,
    "retractible": _cmd_retractible,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "classify":
            handler = _cmd_classify_sp if args.target == "sp" else _cmd_classify_spin
        else:
            handler = _HANDLERS[args.command]
        report = handler(args)
    except SpgaugeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(report.render(args.format))
    return 0 if report.status == "ok" else 1


if __name__ == "__main__":
    sys.exit(main())
