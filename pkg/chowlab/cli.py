"""
Command-line entry point.

Commands: ``chow``, ``bijection``, ``rewrite``, ``dset``, ``interlace``,
``verify``, ``eulerian`` and ``derangement``. Every command accepts
``--format text|json|csv`` and ``--verbose``.

Exit codes: 0 on success, 1 when a verification, cross-check or claimed
interlacing fails (or ``phi`` gets a non-normal monomial), 2 on usage errors.

Example:
`chowlab chow --matroid uniform --n 4 --k 3`
"""
from __future__ import annotations

import argparse
import logging
import re
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel

from chowlab.chow.boolean import hilbert_boolean, phi, psi
from chowlab.chow.dsets import chow_uniform_via_dsets, dset_recursive, g_power_images
from chowlab.chow.rewrite import ZERO, rewrite_trace
from chowlab.core.errors import InvalidObjectError, InvariantViolation, NotNormalError, ResourceGuardError
from chowlab.core.ground import GroundSet
from chowlab.core.statistics import ascent_count, descent_count
from chowlab.oracle.lattice import FlatsLattice, boolean_lattice, uniform_lattice
from chowlab.oracle.ring import hilbert_series
from chowlab.parsing.csv import PolynomialRow, polynomial_rows_to_csv, records_to_csv
from chowlab.parsing.lattice_file import load_lattice
from chowlab.parsing.text import (
    format_polynomial,
    format_rewrite_result,
    format_sequence,
    parse_inversion_sequence,
    parse_monomial,
    parse_permutation,
    parse_range,
)
from chowlab.polyalg.families import (
    check_budget,
    derangement_poly,
    eulerian,
    eulerian_by_ascents,
    refined_derangement,
    refined_eulerian,
)
from chowlab.polyalg.polynomial import IntPolynomial
from chowlab.verify.config import ChowlabSettings, get_settings
from chowlab.verify.experiments import FAMILIES, family_indices, run_interlace
from chowlab.verify.jobs import WorkerPool
from chowlab.verify.logging import create_logger, enable_stderr
from chowlab.verify.models import (
    BijectionResult,
    CheckStatus,
    ChowResult,
    DSetModel,
    FamilyResult,
    MonomialModel,
    PolynomialModel,
    RewriteModel,
)
from chowlab.verify.suites import SUITES, SuiteRunner

logger = logging.getLogger("chowlab.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class VerificationFailed(Exception):
    """Raised by a command whose result is a failed check; maps to exit 1."""


def _emit(args: argparse.Namespace, text: str, model: BaseModel, csv: str) -> None:
    if args.format == "json":
        print(model.model_dump_json(indent=2))
    elif args.format == "csv":
        sys.stdout.write(csv)
    else:
        print(text)


def _budget(args: argparse.Namespace, settings: ChowlabSettings) -> Optional[int]:
    return None if getattr(args, "allow_big", False) else settings.hard_max_n


# ---------------------------------------------------------------------- chow


def _chow_routes(
    args: argparse.Namespace, settings: ChowlabSettings
) -> tuple[str, int, Dict[str, Callable[[], IntPolynomial]]]:
    """
    Matroid name, ground set size and the routes that apply, keyed by method.

    The first route is the default. ``normal`` enumerates normal monomials and
    exists for ``B_n`` only; uniform matroids get ``g-powers`` instead, the
    ascent polynomial of the image of ``g^k`` shifted down by ``t^k``.
    """
    if args.lattice_file:
        lattice = load_lattice(args.lattice_file)
        return lattice.name or "lattice", lattice.ground.n, {"oracle": lambda: _oracle(lattice, args, settings)}

    n = args.n
    if n is None or n < 1:
        raise InvalidObjectError("--n must be a positive integer")
    check_budget(n, _budget(args, settings), "Chow polynomial")
    if args.matroid == "uniform":
        if args.k is None:
            raise InvalidObjectError("--k (the rank) is required for uniform matroids")
        if not 1 <= args.k <= n:
            raise InvalidObjectError(f"rank must satisfy 1 <= k <= n, got k={args.k}, n={n}")
        corank = n - args.k
        if corank > 0:
            return f"U_{args.k},{n}", n, {
                "rewrite": lambda: chow_uniform_via_dsets(n, corank),
                "g-powers": lambda: g_power_images(n, corank).ascent_polynomial().divide_by_t(corank),
                "oracle": lambda: _oracle(uniform_lattice(args.k, n), args, settings),
            }
    return f"B_{n}", n, {
        "normal": lambda: hilbert_boolean(n),
        "rewrite": lambda: eulerian_by_ascents(n),
        "oracle": lambda: _oracle(boolean_lattice(n), args, settings),
    }


def _oracle(lattice: FlatsLattice, args: argparse.Namespace, settings: ChowlabSettings) -> IntPolynomial:
    if lattice.ground.n > settings.oracle_hard_max_n and not args.allow_big:
        raise ResourceGuardError(
            f"the oracle is limited to n <= {settings.oracle_hard_max_n}; pass --allow-big"
        )
    return hilbert_series(lattice, settings.oracle_max_columns)


def cmd_chow(args: argparse.Namespace, settings: ChowlabSettings) -> int:
    name, n, routes = _chow_routes(args, settings)
    if args.cross_check:
        selected = dict(routes)
        if len(selected) > 1 and n > settings.oracle_hard_max_n and not args.allow_big:
            logger.info("cross-check skips the oracle above n=%d", settings.oracle_hard_max_n)
            del selected["oracle"]
    else:
        method = args.method or next(iter(routes))
        if method not in routes:
            raise InvalidObjectError(f"method {method!r} does not apply to {name}")
        selected = {method: routes[method]}

    computed = {method: route() for method, route in selected.items()}
    polynomial = next(iter(computed.values()))
    agree = len(set(computed.values())) == 1 if args.cross_check else None
    result = ChowResult(
        matroid=name,
        n=n,
        k=args.k if args.matroid == "uniform" and not args.lattice_file else None,
        method="cross-check" if args.cross_check else next(iter(selected)),
        polynomial=PolynomialModel.of(polynomial),
        text=format_polynomial(polynomial),
        routes={m: PolynomialModel.of(p) for m, p in computed.items()} if args.cross_check else {},
        agree=agree,
    )
    if args.cross_check:
        lines = [f"{m}: {format_polynomial(p)}" for m, p in computed.items()]
        lines.append("agree" if agree else "MISMATCH")
        text = "\n".join(lines)
    else:
        text = result.text
    rows = [PolynomialRow(result.n, result.k or 0, 0, p) for p in computed.values()]
    _emit(args, text, result, polynomial_rows_to_csv(rows))
    if agree is False:
        raise VerificationFailed(f"routes disagree for {name}")
    return EXIT_OK


# ---------------------------------------------------------------- bijection


def cmd_bijection(args: argparse.Namespace, settings: ChowlabSettings) -> int:
    if args.direction == "psi":
        if not args.perm:
            raise InvalidObjectError("psi needs --perm")
        p = parse_permutation(args.perm)
        m = psi(p)
    else:
        if not args.monomial:
            raise InvalidObjectError("phi needs --monomial")
        n = args.n
        if n is None:
            values = [int(v) for v in re.findall(r"\d+", args.monomial)]
            if args.monomial.strip() in {"", "1"} or not values:
                raise InvalidObjectError("phi of the empty monomial needs --n")
            n = max(values)
        m = parse_monomial(args.monomial, GroundSet.canonical(n))
        p = phi(m)
    result = BijectionResult(
        direction=args.direction,
        permutation=list(p),
        monomial=MonomialModel.of(m),
        text=m.text() if args.direction == "psi" else format_sequence(p),
        statistic=descent_count(p),
    )
    csv = records_to_csv(
        ["direction", "permutation", "monomial", "descents"],
        [[args.direction, format_sequence(p), m.text(), result.statistic]],
    )
    _emit(args, f"{result.text}\ndescents: {result.statistic}", result, csv)
    return EXIT_OK


# ------------------------------------------------------------------ rewrite


def cmd_rewrite(args: argparse.Namespace, settings: ChowlabSettings) -> int:
    e = parse_inversion_sequence(args.seq)
    result, steps = rewrite_trace(e)
    text_result = format_rewrite_result(result)
    model = RewriteModel(
        input=list(e),
        result=str(ZERO) if result is ZERO else list(result),
        text=text_result,
        trace=[{"case": s.case.value, "sequence": list(s.sequence)} for s in steps] if args.explain else [],
    )
    lines = [f"{s.case.value}: {format_sequence(s.sequence)}" for s in steps] if args.explain else []
    lines.append(text_result)
    csv = records_to_csv(["input", "result"], [[format_sequence(e), text_result]])
    _emit(args, "\n".join(lines), model, csv)
    return EXIT_OK


# --------------------------------------------------------------------- dset


def cmd_dset(args: argparse.Namespace, settings: ChowlabSettings) -> int:
    check_budget(args.n, _budget(args, settings), "D^k_n")
    if args.method == "images":
        if args.k < 1:
            raise InvalidObjectError(f"D^k_n is defined for k >= 1, got {args.k}")
        dset = g_power_images(args.n, args.k)
    else:
        dset = dset_recursive(args.n, args.k)
    model = DSetModel.of(dset)
    elements = dset.sorted_elements()
    text = "\n".join(format_sequence(e) for e in elements) if elements else "(empty)"
    csv = records_to_csv(["n", "k", "sequence", "asc"], [[dset.n, dset.k, format_sequence(e), ascent_count(e)] for e in elements])
    _emit(args, text, model, csv)
    return EXIT_OK


# ---------------------------------------------------------------- interlace


def cmd_interlace(args: argparse.Namespace, settings: ChowlabSettings) -> int:
    ns = parse_range(args.n)
    started = time.perf_counter()
    with WorkerPool(args.threads or settings.threads) as pool:
        report = run_interlace(args.family, ns, k=args.k, pool=pool, max_n=_budget(args, settings))
    if args.timings:
        report.wall_time = time.perf_counter() - started

    k = report.k or 0
    rows = [
        PolynomialRow(row.n, k, i, poly.to_polynomial())
        for row in report.rows
        for i, poly in zip(family_indices(args.family, row.n, args.k), row.polynomials)
    ]
    csv = polynomial_rows_to_csv(rows)
    if args.csv_out:
        Path(args.csv_out).write_text(csv, encoding="utf-8")

    lines = []
    for row in report.rows:
        if row.interlacing:
            lines.append(f"n={row.n}: interlacing")
        else:
            i, j = row.failure
            lines.append(f"n={row.n}: not interlacing at {row.labels[i]}, {row.labels[j]}")
    verdict = "pass" if report.status is CheckStatus.PASS else "FAIL"
    witness = f", witness n={report.witness}" if report.witness is not None else ""
    lines.append(f"{report.family}: {verdict}{witness}")
    _emit(args, "\n".join(lines), report, csv)
    if report.status is CheckStatus.FAIL:
        if report.claimed:
            raise VerificationFailed(f"family {report.family} fails to interlace at n={report.witness}")
        raise VerificationFailed(f"family {report.family} interlaces for every n in {args.n}; no witness found")
    return EXIT_OK


# ------------------------------------------------------------------- verify


def cmd_verify(args: argparse.Namespace, settings: ChowlabSettings) -> int:
    runner = SuiteRunner(
        settings=settings,
        threads=args.threads,
        allow_big=args.allow_big,
        logger=create_logger("chowlab.verify.checks", settings.log_ring_size),
    )
    started = time.perf_counter()
    report = runner.run(args.suite, args.max_n)
    if args.timings:
        report.wall_time = time.perf_counter() - started
    if args.out:
        Path(args.out).write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")

    lines = []
    for check in report.checks:
        where = " ".join(f"{key}={value}" for key, value in (("n", check.n), ("k", check.k)) if value is not None)
        lines.append(f"{check.status.value.upper():4} {check.name} {where}".rstrip())
    lines.append(f"{report.suite}: {report.status.value}")
    csv = records_to_csv(
        ["name", "status", "n", "k", "message"],
        [[c.name, c.status.value, c.n if c.n is not None else "", c.k if c.k is not None else "", c.message or ""]
         for c in report.checks],
    )
    _emit(args, "\n".join(lines), report, csv)
    if not report.passed:
        raise VerificationFailed(f"suite {args.suite} failed")
    return EXIT_OK


# ------------------------------------------------------- eulerian/derangement


def _cmd_family(
    args: argparse.Namespace,
    name: str,
    compute: Callable[[int, Optional[int]], IntPolynomial],
    refine: Callable[[int, Optional[int]], List[IntPolynomial]],
    first_index: int,
    label: str,
    settings: ChowlabSettings,
) -> int:
    budget = _budget(args, settings)
    polynomial = compute(args.n, budget)
    refined = refine(args.n, budget) if args.refined else []
    result = FamilyResult(
        name=name,
        n=args.n,
        polynomial=PolynomialModel.of(polynomial),
        text=format_polynomial(polynomial),
        refined=[PolynomialModel.of(p) for p in refined],
    )
    lines = [result.text]
    lines.extend(f"{label}^{i + first_index}: {format_polynomial(p)}" for i, p in enumerate(refined))
    rows = [PolynomialRow(args.n, 0, i + first_index, p) for i, p in enumerate(refined)] or [
        PolynomialRow(args.n, 0, 0, polynomial)
    ]
    _emit(args, "\n".join(lines), result, polynomial_rows_to_csv(rows))
    return EXIT_OK


def cmd_eulerian(args: argparse.Namespace, settings: ChowlabSettings) -> int:
    return _cmd_family(args, "eulerian", eulerian, refined_eulerian, 0, "A", settings)


def cmd_derangement(args: argparse.Namespace, settings: ChowlabSettings) -> int:
    return _cmd_family(args, "derangement", derangement_poly, refined_derangement, 1, "d", settings)


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text", help="Output format.")
    common.add_argument("--verbose", action="store_true", help="Log to stderr at DEBUG level.")

    big = argparse.ArgumentParser(add_help=False)
    big.add_argument("--allow-big", action="store_true", help="Lift the hard enumeration and oracle size limits.")

    workers = argparse.ArgumentParser(add_help=False)
    workers.add_argument("--threads", type=int, default=None, help="Worker processes; 1 runs in process.")
    workers.add_argument("--timings", action="store_true", help="Record wall time in the report.")

    parser = argparse.ArgumentParser(
        prog="chowlab",
        description="Chow polynomials of boolean and uniform matroids, computed and cross-verified exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    chow = sub.add_parser("chow", parents=[common, big], help="Chow polynomial of a matroid.")
    chow.add_argument("--matroid", choices=("boolean", "uniform"), default="boolean")
    chow.add_argument("--n", type=int, help="Size of the ground set.")
    chow.add_argument("--k", type=int, help="Rank of the uniform matroid.")
    chow.add_argument(
        "--method",
        choices=("normal", "g-powers", "rewrite", "oracle"),
        help="Route: normal (boolean only), g-powers (uniform only), rewrite or oracle. Defaults to normal for "
             "boolean, rewrite for uniform and oracle with --lattice-file.",
    )
    chow.add_argument("--cross-check", action="store_true", help="Run every applicable route and compare.")
    chow.add_argument("--lattice-file", help="Lattice-of-flats file for the oracle.")
    chow.set_defaults(handler=cmd_chow)

    bijection = sub.add_parser("bijection", parents=[common], help="Apply psi or phi.")
    bijection.add_argument("direction", choices=("psi", "phi"))
    bijection.add_argument("--perm", help="Permutation in one-line notation, e.g. 5,1,4,3,2.")
    bijection.add_argument("--monomial", help="Normal monomial, e.g. 'h{1,2,4,5}*h{1,4}'.")
    bijection.add_argument("--n", type=int, help="Ground set size for phi; defaults to the largest label.")
    bijection.set_defaults(handler=cmd_bijection)

    rewrite = sub.add_parser("rewrite", parents=[common], help="Rewrite g_E times a basis monomial.")
    rewrite.add_argument("--seq", required=True, help="Inversion sequence, e.g. 0,1,2,1,2,0.")
    rewrite.add_argument("--explain", action="store_true", help="Show the rewriting cases applied.")
    rewrite.set_defaults(handler=cmd_rewrite)

    dset = sub.add_parser("dset", parents=[common, big], help="List the set D^k_n.")
    dset.add_argument("--n", type=int, required=True)
    dset.add_argument("--k", type=int, required=True)
    dset.add_argument("--method", choices=("recursive", "images"), default="recursive")
    dset.set_defaults(handler=cmd_dset)

    interlace = sub.add_parser("interlace", parents=[common, big, workers], help="Interlacing experiments.")
    interlace.add_argument("--family", choices=FAMILIES, required=True)
    interlace.add_argument("--k", type=int, default=2, help="Depth for the d^{k,i}_n families.")
    interlace.add_argument("--n", required=True, help="Range of n, e.g. 4..10.")
    interlace.add_argument("--csv-out", help="Also write the coefficient table to this file.")
    interlace.set_defaults(handler=cmd_interlace)

    verify = sub.add_parser("verify", parents=[common, big, workers], help="Run verification suites.")
    verify.add_argument("--suite", choices=SUITES + ("all",), default="all")
    verify.add_argument("--max-n", type=int, default=None)
    verify.add_argument("--out", help="Write the JSON report to this file.")
    verify.set_defaults(handler=cmd_verify)

    for name, handler in (("eulerian", cmd_eulerian), ("derangement", cmd_derangement)):
        family = sub.add_parser(name, parents=[common, big], help=f"The {name} polynomial.")
        family.add_argument("--n", type=int, required=True)
        family.add_argument("--refined", action="store_true", help="Also list the refinement by last entry.")
        family.set_defaults(handler=handler)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parses arguments, runs the command and maps errors to exit codes.

    Returns:
        The process exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    settings = get_settings()
    if args.verbose:
        enable_stderr(True, create_logger("chowlab.verify.checks", settings.log_ring_size))

    try:
        return args.handler(args, settings)
    except NotNormalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED if args.command == "bijection" else EXIT_USAGE
    except (VerificationFailed, InvariantViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (InvalidObjectError, ResourceGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
