"""Command-line front end: classify, spectrum, complete, verify and oracle subcommands."""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

from .completion.completion_engine import complete
from .completion.theorem_checks import CHECKS, run_check
from .config import DEFAULT_CONFIG, CalculusConfig, OracleConfig
from .dsl import load_expr, parse_gq
from .models.numeric import GQ, parse_rat
from .models.report_models import (
    CompletionCertificate, CompletionTarget, GapEvidence, VerdictOutcome,
)
from .operators.classifier import BetaConvention, SpectrumKind
from .operators.operator_engine import OperatorEngine
from .oracle.numeric_oracle import estimate_point_data
from .region.region_ops import RegionExpr, sample_grid, write_pgm
from .utils.errors import (
    ArrangementError, DslSemanticError, DslSyntaxError, OperatorModelError, OracleError,
    PreconditionError,
)

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3

VERDICT_EXIT = {
    VerdictOutcome.EXACT: EXIT_OK,
    VerdictOutcome.SAMPLED_PASS: EXIT_OK,
    VerdictOutcome.NOT_APPLICABLE: EXIT_OK,
    VerdictOutcome.FAIL: EXIT_FAIL,
    VerdictOutcome.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


class UsageError(ValueError):
    pass


def _emit(data: Dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")


def _sizes(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --sizes value {text!r}") from exc


def _config(args: argparse.Namespace) -> CalculusConfig:
    sizes, tol = _sizes(getattr(args, "sizes", None)), getattr(args, "tol", None)
    if sizes is None and tol is None:
        return DEFAULT_CONFIG
    update = DEFAULT_CONFIG.oracle.model_dump()
    if sizes is not None:
        update["sizes"] = sizes
    if tol is not None:
        update["tol"] = tol
    try:
        oracle = OracleConfig(**update)
    except ValidationError as exc:
        raise UsageError(str(exc)) from exc
    return DEFAULT_CONFIG.model_copy(update={"oracle": oracle})


def _window(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise UsageError("--window needs x0,y0,x1,y1")
    x0, y0, x1, y1 = (parse_rat(p) for p in parts)
    return GQ(x0, y0), GQ(x1, y1)


def _certificate(text: Optional[str]) -> Optional[CompletionCertificate]:
    if text is None or text == "zero":
        return None
    return CompletionCertificate.from_json(json.loads(Path(text).read_text(encoding="utf-8")))


# ------------------------------------------------------------- commands


def cmd_classify(args: argparse.Namespace) -> int:
    report = OperatorEngine().classify(load_expr(args.op), parse_gq(args.lam), args.kind)
    _emit(report)
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    engine = OperatorEngine()
    report = engine.spectrum(load_expr(args.op), args.kind, with_cells=args.cells is not None)
    if args.cells is not None:
        Path(args.cells).write_text(json.dumps(report.pop("cells"), indent=2), encoding="utf-8")
    if args.out:
        Path(args.out).write_text(json.dumps(report["region"], indent=2), encoding="utf-8")
    if args.plot:
        if not args.window:
            raise UsageError("--plot needs --window")
        grid = sample_grid(RegionExpr.from_json(report["region"]), _window(args.window), args.res)
        with open(args.plot, "wb") as out:
            write_pgm(grid, out)
    _emit(report)
    return EXIT_OK


def cmd_complete(args: argparse.Namespace) -> int:
    report = complete(load_expr(args.a), load_expr(args.b), parse_gq(args.lam), args.target)
    if args.cert and report.certificate is not None:
        Path(args.cert).write_text(json.dumps(report.certificate.to_json(), indent=2, ensure_ascii=False),
                                   encoding="utf-8")
    _emit(report.to_json())
    return EXIT_OK if report.decision else EXIT_FAIL


def cmd_verify(args: argparse.Namespace) -> int:
    a = load_expr(args.a)
    b = load_expr(args.b) if args.b else None
    lam = parse_gq(args.lam) if args.lam else None
    verdict = run_check(args.check, a, b, c=_certificate(args.c), target=args.target,
                        samples=args.samples, seed=args.seed, lam=lam, config=_config(args),
                        literal=args.literal or None, conv=args.conv)
    _emit(verdict.to_json())
    return VERDICT_EXIT[verdict.outcome]


def cmd_oracle(args: argparse.Namespace) -> int:
    config = _config(args)
    estimate = estimate_point_data(load_expr(args.op), parse_gq(args.lam), config=config.oracle)
    _emit(estimate.to_json())
    return EXIT_INCONCLUSIVE if estimate.closed_evidence == GapEvidence.INCONCLUSIVE else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="completion-calculus",
                                     description="Spectra and completions of upper-triangular operator matrices")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    sub = parser.add_subparsers(dest="command", required=True)

    kinds = [k.value for k in SpectrumKind]
    targets = [t.value for t in CompletionTarget]

    p = sub.add_parser("classify", help="point data and invertibility classes at λ")
    p.add_argument("--op", required=True, help="operator expression or @file")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--kind", choices=kinds, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("spectrum", help="exact spectral region")
    p.add_argument("--op", required=True)
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--out", help="write the region JSON here")
    p.add_argument("--plot", help="write a binary PGM membership grid here")
    p.add_argument("--window", help="x0,y0,x1,y1 of the plot window, e.g. -2,-2,2,2")
    p.add_argument("--res", type=int, default=128)
    p.add_argument("--cells", help="write the labelled cell decomposition here")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("complete", help="decide and construct a completion at λ")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--target", choices=targets, default="fli")
    p.add_argument("--cert", help="write the certificate JSON here")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("verify", help="check a spectral identity")
    p.add_argument("--check", choices=sorted(CHECKS), required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b")
    p.add_argument("--c", help="certificate JSON file or 'zero'")
    p.add_argument("--target", choices=targets, default="fli")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--sizes", help="comma-separated truncation sizes")
    p.add_argument("--tol", type=float)
    p.add_argument("--lambda", dest="lam", help="λ for the harte and falsify checks")
    p.add_argument("--literal", action="store_true", help="use the printed formulas verbatim")
    p.add_argument("--conv", choices=[c.value for c in BetaConvention], default="closure")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="numeric point data from truncations")
    p.add_argument("--op", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--sizes")
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_oracle)
    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")


# values of these options may start with a minus sign
SIGNED_OPTIONS = ("--lambda", "--window")


def attach_signed_values(argv: Sequence[str]) -> List[str]:
    """Rewrite ``--window -2,-2,2,2`` as ``--window=-2,-2,2,2`` so argparse keeps the value."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in SIGNED_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{arg}={argv[i + 1]}")
            i += 2
            continue
        out.append(arg)
        i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = attach_signed_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    configure_logging(args.verbose)
    logger.info("running %s", args.command)
    try:
        return args.func(args)
    except (DslSyntaxError, DslSemanticError, OperatorModelError, UsageError,
            PreconditionError, KeyError, ValueError, OSError) as exc:
        logger.error("%s", exc)
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (ArrangementError, OracleError) as exc:
        logger.error("%s", exc)
        sys.stderr.write(f"refused: {exc}\n")
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
