"""Command line driver: report closed-form tables, verify them, sweep the identities.

Exit codes: 0 success, 1 mismatch or counterexample, 2 usage error or oracle cap.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from . import closed_form as cf
from . import dual_closed_form as dcf
from . import identities as ids
from .algebra import BettiTable
from .complex_core import GluingSpec, validate_spec
from .errors import ChordalBettiError, OracleCapExceeded
from .oracle import FieldChoice, verify_all
from .render import render_text, to_json

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
COMMANDS = ("report", "verify", "identities")


@dataclass(frozen=True)
class RenderOptions:
    format: str = "table"
    target: str = "primal"
    skeleton_k: int | None = None
    field: FieldChoice = FieldChoice()

    def __post_init__(self) -> None:
        if self.skeleton_k is not None and self.skeleton_k < -1:
            raise ValueError("skeleton dimension must be >= -1")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _field(text: str) -> FieldChoice:
    try:
        return FieldChoice.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _spec_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=_int_list, required=True, help="clique orders, e.g. 3,5,6")
    p.add_argument("--r", type=_int_list, default=[], help="intersection sizes, e.g. 2,3")
    p.add_argument("--parents", type=_int_list, default=None, help="gluing parents p2,p3,...")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordal-betti",
        description="Betti tables and invariants of glued chordal clique complexes.",
    )
    sub = parser.add_subparsers(dest="command")

    rep = sub.add_parser("report", help="closed-form Betti table and invariants (default)")
    _spec_args(rep)
    target = rep.add_mutually_exclusive_group()
    target.add_argument("--skeleton", type=int, metavar="K")
    target.add_argument("--dual", action="store_true")
    target.add_argument("--dual-skeleton", type=int, metavar="K")
    rep.add_argument("--format", choices=("table", "json"), default="table")

    ver = sub.add_parser("verify", help="check every closed form against the brute-force oracle")
    _spec_args(ver)
    ver.add_argument("--field", type=_field, default=FieldChoice(), help="q, f2, f3, ... (default q)")
    ver.add_argument("--max-k", type=int, default=None, help="skip skeletons above this dimension")
    ver.add_argument("--oracle-cap", type=int, default=None, help="vertex cap (default 14)")
    ver.add_argument("--format", choices=("table", "json"), default="table")

    idn = sub.add_parser("identities", help="exhaustive binomial identity sweep")
    idn.add_argument("--only", default=None, help="one identity, e.g. chu-vandermonde")
    idn.add_argument("--n", type=_int_list, default=None)
    idn.add_argument("--r", type=_int_list, default=None)
    idn.add_argument("--j", type=int, default=None)
    idn.add_argument("--e", type=int, default=None)
    idn.add_argument("--A", type=int, default=None)
    idn.add_argument("--s", type=int, default=None)
    idn.add_argument("--bound", type=int, default=12, help="largest parameter in the sweep")
    idn.add_argument("--max-e", type=int, default=4, help="largest e for tuple-valued identities")
    return parser


def _spec(args: argparse.Namespace) -> GluingSpec:
    return validate_spec(args.n, args.r, args.parents)


# ------------------------------------------------------------------ report


def _primal(spec: GluingSpec, k: int | None) -> tuple[str, BettiTable, dict[str, Any]]:
    kk = spec.dim if k is None else k
    table = cf.skeleton_betti_table(spec, kk)
    inv = cf.skeleton_invariants(spec, kk)
    title = f"{spec}, {'complex' if kk >= spec.dim else f'{kk}-skeleton'}"
    invariants = {
        "krull_dim": inv.krull_dim,
        "regularity": inv.regularity,
        "proj_dim": inv.proj_dim,
        "depth": inv.depth,
        "multiplicity": inv.multiplicity,
        "h_degree": inv.h_degree,
        "a_invariant": inv.a_invariant,
        "euler": inv.euler,
        "cm_flags": inv.cm_class.labels(),
        "f_vector": list(cf.skeleton_f_vector(spec, kk).entries),
        "h_polynomial": str(cf.h_polynomial(spec, kk)),
    }
    return title, table, invariants


def _dual(spec: GluingSpec) -> tuple[str, BettiTable, dict[str, Any]]:
    prof = dcf.dual_profile(spec)
    h, _ = dcf.dual_h_vector(spec)
    N = spec.n_vertices
    invariants = {
        "krull_dim": prof.krull_dim,
        "regularity": prof.regularity,
        "proj_dim": 2,
        "depth": N - 2,
        "multiplicity": prof.multiplicity,
        "h_degree": h.degree,
        "a_invariant": prof.a_invariant,
        "euler": dcf.dual_skeleton_profile(spec, N - 3).euler,
        "cm_flags": ["CohenMacaulay"],
        "cm_type": prof.cm_type,
        "gorenstein": prof.gorenstein,
        "sphere_count": prof.sphere_count,
        "f_vector": list(dcf.dual_f_vector(spec).entries),
        "h_polynomial": str(h),
    }
    return f"{spec}, Alexander dual", dcf.dual_betti_table(spec), invariants


def _dual_skeleton(spec: GluingSpec, k: int) -> tuple[str, BettiTable, dict[str, Any]]:
    prof = dcf.dual_skeleton_profile(spec, k)
    table = dcf.dual_skeleton_betti_table(spec, k)
    invariants = {
        "krull_dim": prof.krull_dim,
        "regularity": table.regularity,
        "ideal_regularity": prof.ideal_regularity,
        "proj_dim": prof.proj_dim,
        "depth": prof.depth,
        "multiplicity": prof.multiplicity,
        "h_degree": prof.h_degree,
        "a_invariant": prof.h_degree - prof.krull_dim,
        "euler": prof.euler,
        "cm_flags": ["CohenMacaulay"] if prof.cohen_macaulay else [],
        "cm_type": prof.cm_type,
        "sphere_count": prof.sphere_count,
        "simplex_skeleton": prof.simplex_equal,
        "f_vector": list(dcf.dual_skeleton_f_vector(spec, k).entries),
    }
    return f"{spec}, {k}-skeleton of the Alexander dual", table, invariants


def render_options(args: argparse.Namespace) -> RenderOptions:
    if args.dual:
        return RenderOptions(args.format, "dual")
    if args.dual_skeleton is not None:
        return RenderOptions(args.format, "dual", args.dual_skeleton)
    return RenderOptions(args.format, "primal", args.skeleton)


def cmd_report(args: argparse.Namespace) -> int:
    spec = _spec(args)
    opts = render_options(args)
    if opts.target == "primal":
        title, table, invariants = _primal(spec, opts.skeleton_k)
    elif opts.skeleton_k is None:
        title, table, invariants = _dual(spec)
    else:
        title, table, invariants = _dual_skeleton(spec, opts.skeleton_k)
    if opts.format == "json":
        sys.stdout.write(to_json(table, invariants))
    else:
        sys.stdout.write(render_text(title, table, invariants))
    return EXIT_OK


# ------------------------------------------------------------------ verify


def cmd_verify(args: argparse.Namespace) -> int:
    spec = _spec(args)
    report = verify_all(spec, args.field, max_k=args.max_k, cap=args.oracle_cap)
    if args.format == "json":
        sys.stdout.write(report.to_json() + "\n")
    else:
        sys.stdout.write(report.render() + "\n")
    return EXIT_OK if report.passed else EXIT_MISMATCH


# -------------------------------------------------------------- identities


def _single_case(kind: ids.IdentityKind, args: argparse.Namespace) -> ids.IdentityCase | None:
    """Build one case from the flags, or None if the flags ask for a sweep."""
    n, r, j = args.n or [], args.r or [], args.j
    K = ids.IdentityKind
    if kind is K.CONVOLUTION_LEMMA:
        if args.A is None and args.s is None and not n:
            return None
        params: tuple[int, ...] = (n[0] if n else 0, args.A or 0, args.s or 0)
    elif j is None:
        return None
    elif kind is K.GENERAL_HILBERT:
        params = (len(n), *n, *r, j)
    elif kind is K.EQUAL_N:
        params = (n[0], j, *r)
    elif kind is K.EQUAL_R:
        params = (r[0], j, *n)
    elif kind in (K.EQUAL_NR, K.REDUCED):
        params = (n[0], r[0], args.e if args.e is not None else 2, j)
    elif kind is K.CHU_VANDERMONDE:
        params = (n[0], r[0], j)
    else:
        params = (n[0], j)
    return ids.IdentityCase(kind, params)


def cmd_identities(args: argparse.Namespace) -> int:
    if args.bound < 1 or args.max_e < 1:
        print("error: sweep bounds must be positive", file=sys.stderr)
        return EXIT_USAGE
    kinds = None
    if args.only:
        kind = ids.IdentityKind.parse(args.only)
        try:
            case = _single_case(kind, args)
        except IndexError:
            print(f"error: {kind.value} needs parameters {ids.PARAM_LAYOUT[kind]}", file=sys.stderr)
            return EXIT_USAGE
        if case is not None:
            res = ids.check_case(case)
            relation = "=" if res.equal else "!="
            print(f"{case}: {res.lhs} {relation} {res.rhs}")
            return EXIT_OK if res.equal else EXIT_MISMATCH
        kinds = [kind]
    tallies = ids.run_sweep(args.bound, args.max_e, kinds)
    width = max(len(t.kind.value) for t in tallies)
    for t in tallies:
        status = "ok" if t.passed else f"{len(t.counterexamples)} counterexamples"
        print(f"{t.kind.value:<{width}}  {t.checked:>9} cases  {t.seconds:6.2f}s  {status}")
        for res in t.counterexamples[:5]:
            print(f"    {res.case}: {res.lhs} != {res.rhs}")
    return EXIT_OK if all(t.passed for t in tallies) else EXIT_MISMATCH


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] not in COMMANDS and argv[0] not in ("-h", "--help"):
        argv.insert(0, "report")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command is None:
        parser.print_help()
        return EXIT_USAGE
    handlers = {"report": cmd_report, "verify": cmd_verify, "identities": cmd_identities}
    try:
        return handlers[args.command](args)
    except OracleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ChordalBettiError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
