#!/usr/bin/env python3
"""
Claw-free spanning tree command line

Solve for spanning trees with few leaves and branch vertices, check the
degree-sum hypothesis, run the brute-force oracle, generate instances, audit
a corpus and re-verify certificate files.

Exit codes:
    0  tree found / check passed / certificate accepted
    2  refutation certificate emitted
    3  hypothesis not satisfied (solve without --force, check)
    4  input or usage error, rejected certificate
    5  solver anomaly or audit counterexample

Usage:
    python scripts/clawtree.py solve --graph c6.el --m 1 --n 2 --json
    python scripts/clawtree.py solve --graph net.el --m 1 --n 3 --force --cert-out net.cert.json
    python scripts/clawtree.py verify-cert --graph net.el --cert net.cert.json --m 1 --n 3
    python scripts/clawtree.py gen --spec line-of-spider:legs=4,length=2 --out data/
    python scripts/clawtree.py audit --corpus-budget 300 --n-max 6 --jobs 4 --out audit.jsonl
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from pydantic import ValidationError

# Add src to path
sys.path.append(str(Path(__file__).parent.parent))

from src.exceptions import (
    CertificateError,
    ClawTreeError,
    DisconnectedGraphError,
    EdgeListParseError,
    HypothesisNotSatisfiedError,
    NotClawFreeError,
    OracleSizeError,
    SolverAnomaly,
    TreeStructureError,
)
from src.graph.edge_list import read_graph, save_graph
from src.graph.properties import check_hypothesis
from src.instances.corpus import claw_free_corpus
from src.instances.generators import GeneratorSpec
from src.oracle.audit import theorem_audit
from src.oracle.bruteforce import oracle_report
from src.reporting.schemas import (
    AuditRecordDocument,
    CertificateDocument,
    HypothesisDocument,
    OracleDocument,
    SolveResultDocument,
)
from src.solver.certificate import verify_certificate
from src.solver.search import SolverConfig, SolveResult, SolveStatus, solve, solve_branch_mode, solve_leaf_mode
from src.utils.logger import set_level, setup_logger
from src.utils.logging_config import setup_logging
from src.utils.settings import AUDIT_JOBS, LOG_LEVEL

logger = setup_logger(__name__)

EXIT_OK = 0
EXIT_CERTIFICATE = 2
EXIT_HYPOTHESIS = 3
EXIT_INPUT = 4
EXIT_ANOMALY = 5

STATUS_EXIT_CODES: Dict[SolveStatus, int] = {
    SolveStatus.TREE: EXIT_OK,
    SolveStatus.CERTIFICATE: EXIT_CERTIFICATE,
    SolveStatus.ANOMALY: EXIT_ANOMALY,
}

# (exception class, error code, exit code); first match wins
ERROR_TABLE = [
    (HypothesisNotSatisfiedError, "hypothesis", EXIT_HYPOTHESIS),
    (EdgeListParseError, "parse", EXIT_INPUT),
    (DisconnectedGraphError, "disconnected", EXIT_INPUT),
    (NotClawFreeError, "not-claw-free", EXIT_INPUT),
    (TreeStructureError, "tree-structure", EXIT_INPUT),
    (CertificateError, "certificate", EXIT_INPUT),
    (OracleSizeError, "oracle-size", EXIT_INPUT),
    (SolverAnomaly, "anomaly", EXIT_ANOMALY),
    (ValidationError, "certificate", EXIT_INPUT),
    (json.JSONDecodeError, "certificate", EXIT_INPUT),
    (FileNotFoundError, "io", EXIT_INPUT),
    (OSError, "io", EXIT_INPUT),
    (ValueError, "invalid-argument", EXIT_INPUT),
]


class UsageError(Exception):
    """Raised instead of argparse's own exit so usage errors map to exit code 4"""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def report_error(code: str, message: str) -> None:
    """Print the one-line machine-parsable error record"""
    first_line = str(message).splitlines()[0] if str(message) else ""
    print(f"error: {code}: {first_line}", file=sys.stderr)


def _emit(text: str) -> None:
    print(text)


def _solver_config(args: argparse.Namespace) -> SolverConfig:
    return SolverConfig(
        force=args.force,
        max_iterations=args.max_iterations,
        root=args.root,
    )


def _describe_result(result: SolveResult) -> str:
    lines = [f"status: {result.status.value} (m={result.m}, n={result.n})"]
    if result.tree is not None and result.status is SolveStatus.TREE:
        lines.append(f"leaves + branch vertices: {result.value} (branch vertices: {result.branch_count})")
        lines.append(f"root: {result.tree.root}")
        lines.append("edges: " + " ".join(f"{u}-{v}" for u, v in result.tree.edges()))
    if result.certificate is not None:
        cert = result.certificate
        lines.append(f"certificate ({cert.mode.value}): witness {list(cert.witness)}")
        lines.append(f"degree sum {cert.degree_sum} <= bound {cert.bound}; "
                     f"{cert.count} edges without an oblique neighbour")
    if result.reason:
        lines.append(f"reason: {result.reason}")
    moves = ", ".join(f"{tag}={count}" for tag, count in sorted(result.stats.moves.items()))
    lines.append(f"moves: {result.stats.iterations}" + (f" ({moves})" if moves else ""))
    return "\n".join(lines)


def _finish_solve(args: argparse.Namespace, result: SolveResult) -> int:
    if result.certificate is not None and args.cert_out:
        path = Path(args.cert_out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(CertificateDocument.from_certificate(result.certificate).dump_json() + "\n")
        logger.info(f"Wrote certificate to {path}")

    if args.json:
        _emit(SolveResultDocument.from_result(result).dump_json())
    else:
        _emit(_describe_result(result))

    if result.status is SolveStatus.ANOMALY:
        report_error("anomaly", result.reason)
    return STATUS_EXIT_CODES[result.status]


def cmd_solve(args: argparse.Namespace) -> int:
    graph = read_graph(args.graph)
    logger.info(f"Solving {args.graph} with m={args.m}, n={args.n}")
    return _finish_solve(args, solve(graph, args.m, args.n, _solver_config(args)))


def cmd_branch(args: argparse.Namespace) -> int:
    graph = read_graph(args.graph)
    logger.info(f"Branch mode on {args.graph} with k={args.k}")
    return _finish_solve(args, solve_branch_mode(graph, args.k, args.m, _solver_config(args)))


def cmd_leaves(args: argparse.Namespace) -> int:
    graph = read_graph(args.graph)
    logger.info(f"Leaf mode on {args.graph} with k={args.k}")
    return _finish_solve(args, solve_leaf_mode(graph, args.k, _solver_config(args)))


def cmd_check(args: argparse.Namespace) -> int:
    graph = read_graph(args.graph)
    report = check_hypothesis(graph, args.m, args.n)
    if args.json:
        _emit(HypothesisDocument.from_report(report).dump_json())
    else:
        _emit(str(report))
    return EXIT_OK if report.satisfied else EXIT_HYPOTHESIS


def cmd_oracle(args: argparse.Namespace) -> int:
    graph = read_graph(args.graph)
    report = oracle_report(graph, args.work_limit) if args.work_limit else oracle_report(graph)
    if args.json:
        _emit(OracleDocument.from_report(report).dump_json())
    else:
        _emit(
            f"spanning trees: {report.tree_count} (matrix-tree: {report.kirchhoff_count})\n"
            f"min leaves + branch vertices: {report.min_leaf_plus_branch}\n"
            f"min branch vertices: {report.min_branch}"
        )
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GeneratorSpec.parse(args.spec, args.seed)
    graph = spec.build()

    out = Path(args.out)
    if out.is_dir() or args.out.endswith(("/", "\\")):
        out = out / f"{spec.digest()}.el"
    save_graph(graph, out)
    logger.info(f"Generated {spec.label()}: {graph.vertex_count} vertices, {graph.edge_count} edges")
    _emit(str(out))
    return EXIT_OK


def cmd_audit(args: argparse.Namespace) -> int:
    corpus = claw_free_corpus(size_budget=args.corpus_budget, seed=args.seed)
    report = theorem_audit(corpus, n_max=args.n_max, jobs=args.jobs, progress=not args.no_progress)
    if args.out:
        report.write_jsonl(args.out)

    summary = report.summary()
    if args.json:
        if report.counterexamples:
            summary["first_counterexample"] = AuditRecordDocument.from_record(report.counterexamples[0]).model_dump()
        _emit(json.dumps(summary, indent=2))
    else:
        for key, value in summary.items():
            _emit(f"{key}: {value}")

    if report.counterexamples:
        first = report.counterexamples[0]
        report_error("counterexample", f"{first.finding} on {first.graph_id} (m={first.m}, n={first.n})")
        return EXIT_ANOMALY
    return EXIT_OK


def cmd_verify_cert(args: argparse.Namespace) -> int:
    graph = read_graph(args.graph)
    document = CertificateDocument.model_validate_json(Path(args.cert).read_text())
    result = verify_certificate(graph, document.to_certificate(), args.m, args.n)
    if not result:
        report_error("certificate", f"{result.reason}: {result.message}")
        return EXIT_INPUT
    _emit("certificate accepted")
    return EXIT_OK


def _add_solver_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--force", action="store_true", help="Search even when the hypothesis fails")
    parser.add_argument("--json", action="store_true", help="Print the JSON result document")
    parser.add_argument("--cert-out", default=None, help="Write an emitted certificate to this file")
    parser.add_argument("--root", type=int, default=0, help="Root of the initial depth-first tree")
    parser.add_argument("--max-iterations", type=int, default=None, help="Move cap (default |G|^3)")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="clawtree",
        description="Spanning trees with few leaves and branch vertices in claw-free graphs",
    )
    parser.add_argument("--log-level", default=LOG_LEVEL, help="Logging level (default: CLAWTREE_LOG_LEVEL)")
    parser.add_argument("--log-dir", default=None, help="Also write rotating log files here")
    verbs = parser.add_subparsers(dest="verb", parser_class=_ArgumentParser)
    verbs.required = True

    p = verbs.add_parser("solve", help="Run the local search for given m and n")
    p.add_argument("--graph", required=True, help="Edge-list file")
    p.add_argument("--m", type=int, required=True, help="Witness size minus one")
    p.add_argument("--n", type=int, required=True, help="Bound on leaves plus branch vertices")
    _add_solver_flags(p)
    p.set_defaults(handler=cmd_solve)

    p = verbs.add_parser("branch", help="Spanning tree with at most k branch vertices")
    p.add_argument("--graph", required=True, help="Edge-list file")
    p.add_argument("--k", type=int, required=True, help="Branch vertex budget")
    p.add_argument("--m", type=int, default=None, help="Witness size minus one (default k+3)")
    _add_solver_flags(p)
    p.set_defaults(handler=cmd_branch)

    p = verbs.add_parser("leaves", help="Spanning tree with at most k+1 leaves plus branch vertices")
    p.add_argument("--graph", required=True, help="Edge-list file")
    p.add_argument("--k", type=int, required=True, help="Leaf budget minus one")
    _add_solver_flags(p)
    p.set_defaults(handler=cmd_leaves)

    p = verbs.add_parser("check", help="Evaluate the degree-sum hypothesis")
    p.add_argument("--graph", required=True, help="Edge-list file")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_check)

    p = verbs.add_parser("oracle", help="Brute-force minima over all spanning trees")
    p.add_argument("--graph", required=True, help="Edge-list file")
    p.add_argument("--work-limit", type=int, default=None, help="Enumeration guard")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_oracle)

    p = verbs.add_parser("gen", help="Generate an instance as an edge-list file")
    p.add_argument("--spec", required=True, help="kind:key=value,... (e.g. line-of-spider:legs=3,length=2)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="Output file, or a directory to name the file by spec digest")
    p.set_defaults(handler=cmd_gen)

    p = verbs.add_parser("audit", help="Check the theorem over the deterministic corpus")
    p.add_argument("--corpus-budget", type=int, default=300, help="Random line graphs in the corpus")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=AUDIT_JOBS, help="Worker processes")
    p.add_argument("--out", default=None, help="Write JSON-lines records here")
    p.add_argument("--json", action="store_true", help="Print the summary as JSON")
    p.add_argument("--no-progress", action="store_true", help="Hide the progress bar")
    p.set_defaults(handler=cmd_audit)

    p = verbs.add_parser("verify-cert", help="Re-verify a certificate file")
    p.add_argument("--graph", required=True, help="Edge-list file")
    p.add_argument("--cert", required=True, help="Certificate JSON file")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_verify_cert)

    return parser


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, run one verb and return its exit code

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as e:
        report_error("usage", str(e))
        return EXIT_INPUT
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    if args.log_dir:
        setup_logging(log_dir=args.log_dir, log_level=args.log_level)
    set_level(args.log_level)

    try:
        return args.handler(args)
    except (ClawTreeError, ValidationError, ValueError, OSError) as e:
        for error_class, code, exit_code in ERROR_TABLE:
            if isinstance(e, error_class):
                if getattr(args, "json", False) and args.verb in ("solve", "branch", "leaves"):
                    _emit(SolveResultDocument.from_error(f"{code}: {e}").dump_json())
                report_error(code, str(e))
                return exit_code
        raise


def main(argv: Optional[List[str]] = None) -> None:
    """Console entry point"""
    sys.exit(dispatch(argv))


if __name__ == "__main__":
    main()
