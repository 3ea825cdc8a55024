"""Command-line surface.

Every verb is deterministic: identical inputs give byte-identical output.
Exit codes: 0 on success, 1 on domain errors, 2 on parse or usage errors.
JSON is the machine format; text output is for humans and for pasting
generator lists into a computer-algebra system.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import checks
from .errors import DomainError
from .grothendieck import (
    degree_report,
    g_polynomial,
    gp_polynomial,
    gq_polynomial,
)
from .ideals import msv_generators, reg_from_kpoly, reg_grassmannian, reg_skew_upper, ssmsv_generators
from .permutations import (
    FpfInvolution,
    Permutation,
    bcode,
    grassmannian_from_shape,
    is_inverse_fireworks_rothe,
    is_inverse_fireworks_runs,
    lambda_sp,
    last_nonzero_position,
    rank_matrix,
    rothe_diagram,
    shape_of,
    spcode,
)
from .shapes import format_partition, parse_partition
from .symplectic import gsp_all
from .tableaux import (
    PSVT,
    QSVT,
    SVT,
    Tableau,
    count_tableaux,
    enumerate_tableaux,
    max_degree_witness,
)
from .transforms import shifted_grow, shifted_push, shifted_squish, svt_grow, svt_push, svt_squish

FORMAT_ENV = "GROTHDEG_FORMAT"

_VERIFY_CHECKS = {
    "thm1.1": lambda args: checks.check_shifted_degree_formula(
        args.max_part, args.max_len, args.max_vars
    ),
    "thm5.5": lambda args: checks.check_svt_degree_formula(
        args.max_part, args.max_len, args.max_vars
    ),
    "prop6.2": lambda args: checks.check_q_degree_window(
        args.max_part, args.max_len, args.max_vars
    ),
    "lemma4.4": lambda args: checks.check_embedding_preorder(args.max_size or 4),
    "cor4.6": lambda args: checks.check_symplectic_degree_bound(args.max_size or 6),
    "prop5.7": lambda args: checks.check_fireworks_criterion(),
    "pfaffian": lambda args: checks.check_pfaffian_squares(
        args.trials, seed=args.seed
    ),
}


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _emit(args, text_form: str, json_form) -> None:
    if args.format == "json":
        print(_dump(json_form))
    else:
        print(text_form)


def _default_format() -> str:
    fmt = os.environ.get(FORMAT_ENV, "text").lower()
    return fmt if fmt in ("text", "json") else "text"


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default=_default_format(),
        help=f"output format (default from ${FORMAT_ENV}, else text)",
    )


def _parse_tableau(args, flavor: str) -> Tableau:
    text = args.tableau.replace(";", "\n")
    return Tableau.from_text(text, flavor, args.vars)


def _cmd_deg(args) -> int:
    flavor = {"gp": PSVT, "g": SVT, "gq": QSVT}[args.family]
    report = degree_report(
        parse_partition(args.shape),
        args.vars,
        flavor,
        brute=args.brute,
        witness=args.witness,
    )
    if report.formula_degree is not None:
        text = str(report.formula_degree)
    else:
        text = f"[{report.bounds.lower}, {report.bounds.upper}]"
    if report.brute_degree is not None:
        text += f" (brute: {report.brute_degree})"
    _emit(args, text, report.to_json())
    return 1 if report.discrepant else 0


def _cmd_poly(args) -> int:
    if args.family == "gsp":
        z = FpfInvolution.parse(args.fpf)
        poly = gsp_all(z.size, allow_large=args.allow_large).poly(z)
    else:
        fn = {"gp": gp_polynomial, "g": g_polynomial, "gq": gq_polynomial}[args.family]
        poly = fn(parse_partition(args.shape), args.vars)
    _emit(args, poly.to_text(), poly.to_json())
    return 0


def _cmd_enumerate(args) -> int:
    flavor = {"svt": SVT, "psvt": PSVT, "qsvt": QSVT}[args.family]
    lam = parse_partition(args.shape)
    if args.count:
        total = count_tableaux(lam, args.vars, flavor)
        _emit(args, str(total), {"count": total})
        return 0
    if args.max_degree or args.witness:
        degree, witness = max_degree_witness(lam, args.vars, flavor)
        if args.witness:
            _emit(args, f"{degree}\n{witness.to_text()}",
                  {"max_degree": degree, "witness": witness.to_json()})
        else:
            _emit(args, str(degree), {"max_degree": degree})
        return 0
    if args.format == "json":
        print(_dump([t.to_json() for t in enumerate_tableaux(lam, args.vars, flavor)]))
    else:
        for t in enumerate_tableaux(lam, args.vars, flavor):
            print(t.to_text())
            print()
    return 0


def _cmd_transform(args) -> int:
    shifted = args.flavor == "shifted"
    flavor = PSVT if shifted else SVT
    t = _parse_tableau(args, flavor)
    if args.action == "grow":
        target = parse_partition(args.to_shape)
        result = (shifted_grow if shifted else svt_grow)(t, target)
        out, trail = result.tableau, [tr.to_json() for tr in result.traces]
    elif args.action == "squish":
        result = (shifted_squish if shifted else svt_squish)(t)
        out = result.tableau
        trail = [
            [step.to_text() for step in p.intermediates] for p in result.passes
        ]
    else:  # push
        seq = (shifted_push if shifted else svt_push)(t)
        out = seq[-1] if seq else t
        trail = [step.to_text() for step in seq]
    payload = {"result": out.to_json()}
    if args.trace:
        payload["trace"] = trail
        _emit(args, out.to_text() + "\n--trace--\n" + _dump(trail), payload)
    else:
        _emit(args, out.to_text(), payload)
    return 0


def _cmd_perm(args) -> int:
    if args.what == "grassmannian":
        w = grassmannian_from_shape(parse_partition(args.shape), args.vars)
        _emit(
            args,
            f"{w.one_line()}  {w.cycle_notation()}",
            {"one_line": list(w.word), "cycles": [list(c) for c in w.cycles()]},
        )
        return 0
    w = Permutation.parse(args.perm)
    if args.what == "code":
        _emit(
            args,
            f"code: {','.join(map(str, bcode(w)))}  shape: {format_partition(shape_of(w)) or '-'}",
            {"code": list(bcode(w)), "shape": list(shape_of(w))},
        )
    elif args.what == "rank":
        rows = rank_matrix(w)
        _emit(
            args,
            "\n".join(" ".join(str(v) for v in row) for row in rows),
            {"rank_matrix": [list(row) for row in rows]},
        )
    elif args.what == "rothe":
        cells = sorted(rothe_diagram(w))
        _emit(
            args,
            " ".join(f"({i},{j})" for i, j in cells) or "-",
            {"cells": [list(c) for c in cells]},
        )
    else:  # fireworks
        runs = is_inverse_fireworks_runs(w)
        rothe = is_inverse_fireworks_rothe(w)
        _emit(
            args,
            str(runs).lower(),
            {"runs_method": runs, "rothe_method": rothe},
        )
    return 0


def _cmd_spcode(args) -> int:
    z = FpfInvolution.parse(args.fpf)
    code = spcode(z)
    _emit(
        args,
        f"spcode: {','.join(map(str, code))}  shape: "
        f"{format_partition(lambda_sp(z)) or '-'}  k: {last_nonzero_position(z) or '-'}",
        {
            "spcode": list(code),
            "shape": list(lambda_sp(z)),
            "last_nonzero_position": last_nonzero_position(z),
        },
    )
    return 0


def _cmd_reg(args) -> int:
    if args.what == "grassmannian":
        report = reg_grassmannian(parse_partition(args.shape), args.vars)
    elif args.what == "skew-bound":
        report = reg_skew_upper(FpfInvolution.parse(args.fpf))
    else:  # skew-kpoly
        report = reg_from_kpoly(FpfInvolution.parse(args.fpf))
    _emit(args, str(report.regularity), report.to_json())
    return 0


def _cmd_ideal(args) -> int:
    if args.what == "ssmsv":
        gens = ssmsv_generators(FpfInvolution.parse(args.fpf))
    else:
        gens = msv_generators(Permutation.parse(args.perm))
    _emit(args, gens.to_text(), gens.to_json())
    return 0


def _cmd_verify(args) -> int:
    result = _VERIFY_CHECKS[args.what](args)
    _emit(args, result.summary(), result.to_json())
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grothdeg",
        description="Exact degrees, tableau algorithms, Pfaffian ideals, and "
        "regularity for Grothendieck-type polynomial families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("deg", help="degree of a polynomial family member")
    p.add_argument("family", choices=("gp", "g", "gq"))
    p.add_argument("--shape", required=True)
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--brute", action="store_true", help="cross-check by enumeration")
    p.add_argument("--witness", action="store_true", help="also report a top-degree tableau")
    _add_format(p)
    p.set_defaults(fn=_cmd_deg)

    p = sub.add_parser("poly", help="expand a polynomial family member")
    p.add_argument("family", choices=("gp", "g", "gq", "gsp"))
    p.add_argument("--shape", help="partition, for gp/g/gq")
    p.add_argument("--vars", type=int, help="variable count, for gp/g/gq")
    p.add_argument("--fpf", help="fixed-point-free involution, for gsp")
    p.add_argument("--allow-large", action="store_true")
    _add_format(p)
    p.set_defaults(fn=_cmd_poly)

    p = sub.add_parser("enumerate", help="enumerate set-valued tableaux")
    p.add_argument("family", choices=("svt", "psvt", "qsvt"))
    p.add_argument("--shape", required=True)
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--max-degree", action="store_true")
    p.add_argument("--witness", action="store_true")
    _add_format(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("transform", help="run a tableau algorithm")
    p.add_argument("action", choices=("grow", "squish", "push"))
    p.add_argument("--flavor", choices=("shifted", "typeA"), required=True)
    p.add_argument("--tableau", required=True,
                   help="rows top to bottom, ';' between rows, '|' between boxes")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--to-shape", help="target shape, for grow")
    p.add_argument("--trace", action="store_true")
    _add_format(p)
    p.set_defaults(fn=_cmd_transform)

    p = sub.add_parser("perm", help="permutation combinatorics")
    p.add_argument("what", choices=("code", "rank", "rothe", "fireworks", "grassmannian"))
    p.add_argument("--perm", help="one-line notation, comma-separated")
    p.add_argument("--shape", help="partition, for grassmannian")
    p.add_argument("--vars", type=int, help="descent position, for grassmannian")
    _add_format(p)
    p.set_defaults(fn=_cmd_perm)

    p = sub.add_parser("spcode", help="symplectic code of an involution")
    p.add_argument("--fpf", required=True)
    _add_format(p)
    p.set_defaults(fn=_cmd_spcode)

    p = sub.add_parser("reg", help="regularity values and bounds")
    p.add_argument("what", choices=("grassmannian", "skew-bound", "skew-kpoly"))
    p.add_argument("--shape")
    p.add_argument("--vars", type=int)
    p.add_argument("--fpf")
    _add_format(p)
    p.set_defaults(fn=_cmd_reg)

    p = sub.add_parser("ideal", help="defining generators of a matrix Schubert ideal")
    p.add_argument("what", choices=("msv", "ssmsv"))
    p.add_argument("--perm", help="one-line notation, for msv")
    p.add_argument("--fpf", help="fixed-point-free involution, for ssmsv")
    _add_format(p)
    p.set_defaults(fn=_cmd_ideal)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("what", choices=tuple(_VERIFY_CHECKS))
    p.add_argument("--max-part", type=int, default=5)
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--max-vars", type=int, default=4)
    p.add_argument("--max-size", type=int, default=None,
                   help="letter count ceiling for the involution sweeps")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    _add_format(p)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
