"""
Theorem audit over a corpus

For every connected claw-free corpus graph, every n in 2..n_max and every m
in 1..ceil(2n/3), the audit records the hypothesis check, the brute-force
minimum of leaves plus branch vertices and the solver outcome. Where the
hypothesis holds, the oracle minimum and the solver value must both be at
most n. Where it fails, the solver is run with force and any certificate it
emits must verify and must be consistent with the exact sigma_{m+1}.

Usage:
    from src.instances.corpus import claw_free_corpus
    from src.oracle.audit import theorem_audit

    report = theorem_audit(claw_free_corpus(size_budget=50, seed=7), n_max=6)
    report.write_jsonl("audit.jsonl")
"""

from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import pandas as pd
from tqdm import tqdm

from src.exceptions import OracleSizeError
from src.graph.graph import Graph
from src.graph.properties import ceil_two_thirds, check_hypothesis, claw_witness, is_connected, sigma_k
from src.oracle.bruteforce import oracle_report
from src.solver.certificate import verify_certificate
from src.solver.search import SolverConfig, SolveStatus, solve
from src.utils.logger import setup_logger
from src.utils.settings import AUDIT_JOBS

logger = setup_logger(__name__)

AUDIT_COLUMNS = [
    "graph_id", "m", "n", "hypothesis", "oracle_min", "solver_status", "solver_value",
    "forced", "certificate_verified", "finding",
]


@dataclass
class AuditRecord:
    """One (graph, m, n) combination"""

    graph_id: str
    m: int
    n: int
    hypothesis: bool
    oracle_min: int
    solver_status: str
    solver_value: Optional[int]
    forced: bool = False
    certificate_verified: Optional[bool] = None
    finding: str = ""

    @property
    def is_counterexample(self) -> bool:
        return bool(self.finding)


@dataclass
class AuditReport:
    """All audit records plus the graphs that were skipped and why"""

    records: List[AuditRecord] = field(default_factory=list)
    skipped: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def counterexamples(self) -> List[AuditRecord]:
        return [r for r in self.records if r.is_counterexample]

    def to_frame(self) -> pd.DataFrame:
        """Records as a DataFrame with a fixed column order"""
        if not self.records:
            return pd.DataFrame(columns=AUDIT_COLUMNS)
        return pd.DataFrame([asdict(r) for r in self.records], columns=AUDIT_COLUMNS)

    def summary(self) -> Dict[str, Any]:
        frame = self.to_frame()
        satisfied = frame[frame["hypothesis"] == True]  # noqa: E712
        return {
            "graphs": int(frame["graph_id"].nunique()) if len(frame) else 0,
            "skipped": len(self.skipped),
            "records": len(frame),
            "hypothesis_satisfied": len(satisfied),
            "status_counts": {str(k): int(v) for k, v in frame["solver_status"].value_counts().items()},
            "certificates_verified": int((frame["certificate_verified"] == True).sum()),  # noqa: E712
            "counterexamples": len(self.counterexamples),
        }

    def write_jsonl(self, path: Union[str, Path]) -> Path:
        """Write one JSON object per record"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        frame = self.to_frame()
        if len(frame):
            frame.to_json(path, orient="records", lines=True)
        else:
            path.write_text("")
        logger.info(f"Wrote {len(frame)} audit records to {path}")
        return path


def _finding(
    hypothesis: bool,
    n: int,
    oracle_min: int,
    status: SolveStatus,
    value: Optional[int],
    certificate_ok: Optional[bool]
) -> str:
    if hypothesis:
        if oracle_min > n:
            return "theorem-violated"
        if status is not SolveStatus.TREE:
            return f"solver-{status.value}"
        if value is None or value > n:
            return "solver-value"
        if value < oracle_min:
            return "below-oracle"
        return ""
    if status is SolveStatus.CERTIFICATE and not certificate_ok:
        return "certificate-unsound"
    if status is SolveStatus.TREE and value is not None and value < oracle_min:
        return "below-oracle"
    return ""


def audit_graph(
    graph_id: str,
    graph: Graph,
    n_max: int,
    force_unsatisfied: bool = True
) -> Tuple[List[AuditRecord], Optional[str]]:
    """
    Audit one graph for every admissible (m, n)

    Returns:
        (records, skip note); the note is set when the graph was skipped
    """
    if not is_connected(graph):
        return [], "disconnected"
    witness = claw_witness(graph)
    if witness is not None:
        return [], f"not claw-free: claw {witness}"
    try:
        oracle = oracle_report(graph)
    except OracleSizeError as e:
        return [], f"oracle size guard: {e}"

    records = []
    for n in range(2, n_max + 1):
        for m in range(1, ceil_two_thirds(n) + 1):
            report = check_hypothesis(graph, m, n)
            if not report.satisfied and not force_unsatisfied:
                continue
            result = solve(graph, m, n, SolverConfig(force=not report.satisfied))

            certificate_ok: Optional[bool] = None
            if result.certificate is not None:
                cert = result.certificate
                certificate_ok = bool(verify_certificate(graph, cert, m, n)) \
                    and sigma_k(graph, m + 1).at_most(cert.bound)

            finding = _finding(report.satisfied, n, oracle.min_leaf_plus_branch, result.status,
                               result.value, certificate_ok)
            if finding:
                logger.error(f"Audit finding {finding} on {graph_id} (m={m}, n={n}): {result.reason}")

            records.append(AuditRecord(
                graph_id=graph_id,
                m=m,
                n=n,
                hypothesis=report.satisfied,
                oracle_min=oracle.min_leaf_plus_branch,
                solver_status=result.status.value,
                solver_value=result.value,
                forced=not report.satisfied,
                certificate_verified=certificate_ok,
                finding=finding,
            ))
    return records, None


def _audit_task(task: Tuple[int, str, Graph, int, bool]) -> Tuple[int, str, List[AuditRecord], Optional[str]]:
    index, graph_id, graph, n_max, force_unsatisfied = task
    records, note = audit_graph(graph_id, graph, n_max, force_unsatisfied)
    return index, graph_id, records, note


def theorem_audit(
    corpus: Iterable[Tuple[str, Graph]],
    n_max: int = 6,
    jobs: int = AUDIT_JOBS,
    force_unsatisfied: bool = True,
    progress: bool = True
) -> AuditReport:
    """
    Audit the leaf-plus-branch theorem over a corpus

    Args:
        corpus: (graph_id, graph) pairs
        n_max: Largest n to check (from 2)
        jobs: Worker processes; 1 runs in-process
        force_unsatisfied: Also run forced solves where the hypothesis fails
        progress: Show a progress bar

    Returns:
        AuditReport with records in corpus order
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")

    entries: Sequence[Tuple[str, Graph]] = [(str(gid), g) for gid, g in corpus]
    tasks = [(i, gid, g, n_max, force_unsatisfied) for i, (gid, g) in enumerate(entries)]
    results: Dict[int, Tuple[str, List[AuditRecord], Optional[str]]] = {}

    logger.info(f"Auditing {len(tasks)} graphs for n in 2..{n_max} with {jobs} worker(s)")
    if jobs <= 1:
        for task in tqdm(tasks, desc="Auditing", unit="graph", disable=not progress):
            index, gid, records, note = _audit_task(task)
            results[index] = (gid, records, note)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = [executor.submit(_audit_task, task) for task in tasks]
            for future in tqdm(as_completed(futures), total=len(futures), desc="Auditing",
                               unit="graph", disable=not progress):
                index, gid, records, note = future.result()
                results[index] = (gid, records, note)

    report = AuditReport()
    for index in sorted(results):
        gid, records, note = results[index]
        if note is not None:
            logger.info(f"Skipped {gid}: {note}")
            report.skipped.append((gid, note))
        report.records.extend(records)

    summary = report.summary()
    logger.info(
        f"Audit complete: {summary['records']} records over {summary['graphs']} graphs, "
        f"{summary['skipped']} skipped, {summary['counterexamples']} counterexamples"
    )
    return report
