"""
Command Line Interface - cmdef_lab
One subcommand per pipeline stage; text artifacts on disk or stdout

Exit codes: 0 success, 1 input error or failed verification, 2 aborted run
with a partial certificate.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from . import __version__
from .actions.group_action import GroupKind
from .budget import time_budget
from .config import settings
from .depth_lab.certificate import CertificateStatus, DepthCertificate, verify_certificate
from .depth_lab.pipeline import cmdef_pipeline
from .depth_lab.presented import PresentedRing
from .depth_lab.scan_reg import scan_reg
from .errors import CmdefLabError, TimeBudgetExceeded
from .frobenius.invariants import compare_with_published, frobenius_invariants
from .frobenius.problem import builtin_problem
from .groebner.cache import set_cache_enabled
from .groebner.ideal import Ideal, buchberger
from .invariants_sl2.plucker import certify_hsop, hsop_terms
from .models.job_spec import CLI_ORDERS, Command, JobSpec
from .poly_core.orders import OrderKind
from .poly_core.text_format import format_ideal_text, format_polynomial, parse_polynomial, read_ideal_file
from .subalgebra.presentation import SubalgebraPresentation

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PARTIAL = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmdef_lab",
        description="Exact invariant-theory toolkit: Groebner bases, Frobenius invariants, depth certificates.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--no-cache", action="store_true", help="Do not read or write the Groebner basis cache")
    parser.add_argument("--time-budget", type=float, default=None, help="Seconds before the computation aborts")
    parser.add_argument("--output", "-o", type=Path, default=None, help="Write the artifact here instead of stdout")
    parser.add_argument(
        "--order",
        choices=[kind.value for kind in CLI_ORDERS],
        default=OrderKind.GREVLEX.value,
        help="Monomial order for gb",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    gb = sub.add_parser(Command.GB.value, help="Reduced Groebner basis of an ideal file")
    gb.add_argument("ideal", type=Path)

    relideal = sub.add_parser(Command.RELIDEAL.value, help="Relation ideal of a generator file")
    relideal.add_argument("generators", type=Path)

    member = sub.add_parser(Command.MEMBER.value, help="Subalgebra membership with a tag witness")
    member.add_argument("generators", type=Path)
    member.add_argument("polynomial", help="Target polynomial in the ring of the generator file")

    for command, helptext in ((Command.FROBINV, "Frobenius invariant generators"), (Command.CMDEF, "Depth certificate")):
        cmd = sub.add_parser(command.value, help=helptext)
        cmd.add_argument("p", type=int)
        cmd.add_argument("k", type=int)
        cmd.add_argument("group", nargs="?", choices=[g.value for g in GroupKind], default=GroupKind.GA.value)
        if command is Command.CMDEF:
            cmd.add_argument("--homogenize", action="store_true", help="Homogenize the test sequence")

    hsop = sub.add_parser(Command.HSOP.value, help="Certify the Plucker hsop f_3..f_{2n-1}")
    hsop.add_argument("n", type=int)
    hsop.add_argument("--squared", action="store_true", help="Square every bracket")

    scanreg = sub.add_parser(Command.SCANREG.value, help="Regular subsequence of a test sequence")
    scanreg.add_argument("ring", type=Path, help="Relations file of the presented ring")
    scanreg.add_argument("sequence", type=Path, help="Test sequence in the same ring")

    verify = sub.add_parser(Command.VERIFY.value, help="Replay a depth certificate")
    verify.add_argument("certificate", type=Path)
    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    command = Command(args.command)
    inputs = {
        Command.GB: ["ideal"],
        Command.RELIDEAL: ["generators"],
        Command.MEMBER: ["generators"],
        Command.SCANREG: ["ring", "sequence"],
        Command.VERIFY: ["certificate"],
    }.get(command, [])
    return JobSpec(
        command=command,
        p=getattr(args, "p", None),
        k=getattr(args, "k", None),
        n=getattr(args, "n", None),
        group=getattr(args, "group", GroupKind.GA.value),
        order=args.order,
        inputs=[getattr(args, name) for name in inputs],
        polynomial=getattr(args, "polynomial", None),
        output=args.output,
        homogenize=getattr(args, "homogenize", False),
        squared=getattr(args, "squared", False),
        no_cache=args.no_cache,
        verbose=args.verbose,
        time_budget=args.time_budget if args.time_budget is not None else settings.time_budget,
    )


def emit(job: JobSpec, text: str) -> None:
    if job.output is None:
        sys.stdout.write(text)
        return
    job.output.write_text(text, encoding="utf-8")
    logger.info(f"💾 [CLI] Wrote {job.output}")


# ---------------------------------------------------------------- commands


def run_gb(job: JobSpec) -> int:
    ring, polynomials = read_ideal_file(job.inputs[0])
    basis = buchberger(Ideal(ring, polynomials), job.monomial_order(ring))
    emit(job, format_ideal_text(ring, basis))
    return EXIT_OK


def run_relideal(job: JobSpec) -> int:
    _, generators = read_ideal_file(job.inputs[0])
    presentation = SubalgebraPresentation(generators)
    relations = presentation.relation_ideal
    comments = [f"# {name} = {format_polynomial(f)}" for name, f in zip(presentation.tag_names, generators)]
    emit(job, "\n".join(comments) + "\n" + format_ideal_text(presentation.tag_ring, relations.generators))
    return EXIT_OK


def run_member(job: JobSpec) -> int:
    ring, generators = read_ideal_file(job.inputs[0])
    presentation = SubalgebraPresentation(generators)
    result = presentation.member(parse_polynomial(job.polynomial, ring))
    if result:
        lines = ["member = yes", f"witness = {format_polynomial(result.witness)}"]
    else:
        lines = ["member = no"]
    lines += [f"{name} = {format_polynomial(f)}" for name, f in zip(presentation.tag_names, generators)]
    emit(job, "\n".join(lines) + "\n")
    return EXIT_OK


def run_frobinv(job: JobSpec) -> int:
    problem = builtin_problem(job.p, job.k, job.group)
    generators = frobenius_invariants(problem)
    header = [f"# {problem.label}: {len(generators)} generators"]
    if job.group is GroupKind.GA:
        published = compare_with_published(job.p, job.k, len(generators))
        header.append(f"# published count: {published if published is not None else 'unknown'}")
        print(f"📊 {problem.label}: computed {len(generators)}, published {published if published is not None else '-'}", file=sys.stderr)
    emit(job, "\n".join(header) + "\n" + format_ideal_text(problem.target_ring, generators))
    return EXIT_OK


def run_hsop(job: JobSpec) -> int:
    exponents = None
    if job.squared:
        exponents = {(i, j): 2 for terms in hsop_terms(job.n) for i, j, _ in terms}
    holds = certify_hsop(job.n, exponents)
    emit(job, f"hsop n={job.n}{' squared' if job.squared else ''}: {'certified' if holds else 'not an hsop'}\n")
    return EXIT_OK if holds else EXIT_INPUT


def run_scanreg(job: JobSpec) -> int:
    ring, relations = read_ideal_file(job.inputs[0])
    sequence_ring, sequence = read_ideal_file(job.inputs[1])
    sequence_ring.require_same(ring)
    result = scan_reg(PresentedRing(ring, Ideal(ring, relations)), sequence)
    lines = [
        f"regular length = {result.length}",
        f"accepted positions = {' '.join(str(i + 1) for i in result.positions)}",
    ]
    lines += [format_polynomial(g) for g in result.sequence]
    emit(job, "\n".join(lines) + "\n")
    return EXIT_OK


def run_cmdef(job: JobSpec) -> int:
    certificate = cmdef_pipeline(job.p, job.k, job.group, job.homogenize, job.time_budget)
    emit(job, certificate.to_report())
    return EXIT_PARTIAL if certificate.status is CertificateStatus.PARTIAL else EXIT_OK


def run_verify(job: JobSpec) -> int:
    text = Path(job.inputs[0]).read_text(encoding="utf-8")
    certificate = DepthCertificate.from_report(text)
    failures = verify_certificate(certificate)
    lines = [f"verify = {'ok' if not failures else 'failed'}"] + [f"failure: {f}" for f in failures]
    emit(job, "\n".join(lines) + "\n")
    return EXIT_OK if not failures else EXIT_INPUT


HANDLERS = {
    Command.GB: run_gb,
    Command.RELIDEAL: run_relideal,
    Command.MEMBER: run_member,
    Command.FROBINV: run_frobinv,
    Command.HSOP: run_hsop,
    Command.SCANREG: run_scanreg,
    Command.CMDEF: run_cmdef,
    Command.VERIFY: run_verify,
}


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level)
    logging.basicConfig(level=level, format="%(asctime)s - %(levelname)s - %(message)s", force=True)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, validate the job and dispatch it

    Returns:
        Process exit code
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        job = job_from_args(args)
    except ValidationError as exc:
        logger.error(f"❌ [CLI] Invalid parameters: {exc}")
        return EXIT_INPUT

    set_cache_enabled(settings.use_cache and not job.no_cache, settings.cache_dir)
    logger.info(f"🚀 [CLI] {job.command.value}")
    try:
        if job.command is Command.CMDEF:
            return run_cmdef(job)
        with time_budget(job.time_budget):
            return HANDLERS[job.command](job)
    except TimeBudgetExceeded as exc:
        logger.error(f"❌ [CLI] Aborted: {exc}")
        return EXIT_PARTIAL
    except (CmdefLabError, ValueError, OSError) as exc:
        logger.error(f"❌ [CLI] {type(exc).__name__}: {exc}")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
