"""
Mechanical verification of the Mycielskian connectivity identities.

Two identities are audited graph by graph:

* g = 0: κ(μ(G)) = min{δ(G)+1, 2κ(G)+1}, and κ(μ(G)) = 2κ(G)+1 exactly
  when δ(G) >= 2κ(G)  (:func:`check_theorem_3_1`);
* g >= 1: κ_{2g+1}(μ(G)) = 2κ_g(G)+1 whenever
  κ_g(G) <= min{g+1, ⌊n/2⌋}, plus the unconditional upper bound
  κ_{2g+1}(μ(G)) <= 2κ_g(G)+1  (:func:`check_theorem_3_2`).

Each check returns a :class:`VerificationRecord`; ``run_batch`` maps the
checks over a corpus, in parallel when asked, and reduces the records in
input order.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, Iterator

from ..errors import BudgetExceeded
from ..families import FamilySpec, gen_named
from ..models import Graph, VertexSet, min_degree
from .connectivity import (
    METHOD_PRUNED,
    extra_connectivity,
    is_g_extra_cut,
    vertex_connectivity,
)
from .generators import DEFAULT_ENUMERATE_MAX_ORDER, enumerate_labeled_connected
from .graph6 import encode_graph6, read_graph6_records
from .mycielskian import lift, mycielskian, twin_set

logger = logging.getLogger(__name__)

STATUS_VERIFIED = "verified"
STATUS_HYPOTHESIS_FAILED = "hypothesis-failed"
STATUS_NOT_APPLICABLE = "not-applicable"
STATUS_SKIPPED = "skipped"
STATUS_VIOLATION = "violation"
STATUSES = (
    STATUS_VERIFIED,
    STATUS_HYPOTHESIS_FAILED,
    STATUS_NOT_APPLICABLE,
    STATUS_SKIPPED,
    STATUS_VIOLATION,
)

CHECK_CONNECTIVITY = "connectivity"  # g = 0
CHECK_EXTRA = "extra"  # g >= 1


# =============================================================================
# Records
# =============================================================================


@dataclass
class VerificationRecord:
    """One (graph, g) audit row.

    Field order is the report column order.  Fields that depend on κ_g are
    ``None`` when κ_g does not exist; the g = 0 fields (``min_degree``,
    ``degree_condition``, ``biconditional_holds``) are ``None`` for g >= 1.
    """

    graph_id: str
    graph6: str
    n: int
    m: int
    g: int
    kappa_g: int | None = None
    hypothesis_holds: bool | None = None
    mu_kappa: int | None = None
    expected: int | None = None
    equality_holds: bool | None = None
    upper_bound_holds: bool | None = None
    status: str = STATUS_NOT_APPLICABLE
    check: str = CHECK_EXTRA
    hypothesis_g_bound: bool | None = None
    hypothesis_half_order: bool | None = None
    min_degree: int | None = None
    degree_condition: bool | None = None
    biconditional_holds: bool | None = None
    witness_cut: list[int] | None = None
    mu_witness_cut: list[int] | None = None
    upper_witness_cut: list[int] | None = None
    note: str = ""

    @property
    def is_violation(self) -> bool:
        return self.status == STATUS_VIOLATION

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)


def _new_record(G: Graph, g: int, graph_id: str, check: str) -> VerificationRecord:
    return VerificationRecord(
        graph_id=graph_id or encode_graph6(G),
        graph6=encode_graph6(G),
        n=G.n,
        m=G.m,
        g=g,
        check=check,
    )


def _flag_violation(record: VerificationRecord, reason: str) -> VerificationRecord:
    record.status = STATUS_VIOLATION
    record.note = reason
    logger.error(
        "VIOLATION %s g=%d graph6=%s: %s", record.graph_id, record.g, record.graph6, reason
    )
    return record


# =============================================================================
# g = 0
# =============================================================================


def check_theorem_3_1(
    G: Graph,
    method: str = METHOD_PRUNED,
    max_order: int | None = None,
    graph_id: str = "",
) -> VerificationRecord:
    """Audit κ(μ(G)) = min{δ(G)+1, 2κ(G)+1} and its degree biconditional.

    κ is computed by max flow on both graphs; the subset solver is run on
    μ(G) as an independent second opinion and supplies the witness cut.
    Solver refusals (:class:`BudgetExceeded`) propagate.
    """
    if G.n < 2:
        raise ValueError("The connectivity identity needs a graph with at least two vertices")
    record = _new_record(G, 0, graph_id, CHECK_CONNECTIVITY)

    delta = min_degree(G)
    kappa = vertex_connectivity(G)
    mu, _ = mycielskian(G)
    mu_kappa = vertex_connectivity(mu)
    mu_outcome = extra_connectivity(mu, 0, method=method, max_order=max_order)
    if not G.is_complete():
        own = extra_connectivity(G, 0, method=method, max_order=max_order)
        record.witness_cut = own.cut.to_list()

    record.kappa_g = kappa
    record.min_degree = delta
    record.mu_kappa = mu_kappa
    record.mu_witness_cut = mu_outcome.cut.to_list() if mu_outcome.found else None
    record.expected = min(delta + 1, 2 * kappa + 1)
    record.hypothesis_holds = True
    record.equality_holds = mu_kappa == record.expected
    record.upper_bound_holds = mu_kappa <= 2 * kappa + 1
    record.degree_condition = delta >= 2 * kappa
    record.biconditional_holds = (mu_kappa == 2 * kappa + 1) == record.degree_condition

    # μ(G) is never complete for n >= 2, so the subset search must agree with the flow.
    if mu_outcome.value != mu_kappa:
        return _flag_violation(
            record, f"flow κ(μ(G))={mu_kappa} disagrees with search value {mu_outcome.value}"
        )
    if not record.equality_holds:
        return _flag_violation(record, f"κ(μ(G))={mu_kappa} != {record.expected}")
    if not record.biconditional_holds:
        return _flag_violation(record, "degree biconditional fails")
    record.status = STATUS_VERIFIED
    return record


# =============================================================================
# g >= 1
# =============================================================================


def witness_upper_cut(G: Graph, g: int, F: VertexSet) -> VertexSet:
    """F ∪ F' ∪ {u} in μ(G) for a g-extra cut F of G.

    Every component C of G - F survives in μ(G) as C ∪ C' of order
    2|C| >= 2g+2, so the result is a (2g+1)-extra cut of order 2|F|+1.
    """
    if g < 1:
        raise ValueError(f"witness_upper_cut needs g >= 1, got {g}")
    if not is_g_extra_cut(G, F, g):
        raise ValueError(f"{F!r} is not a {g}-extra cut of the graph")
    _, label = mycielskian(G)
    root = VertexSet(label.order, 1 << label.root)
    return lift(label, F) | twin_set(label, F) | root


def check_theorem_3_2(
    G: Graph,
    g: int,
    method: str = METHOD_PRUNED,
    max_order: int | None = None,
    skip_on_budget: bool = True,
    graph_id: str = "",
) -> VerificationRecord:
    """Audit κ_{2g+1}(μ(G)) = 2κ_g(G)+1 for one graph and g >= 1.

    Equality is only demanded when κ_g(G) <= min{g+1, ⌊n/2⌋}; otherwise
    the record is ``hypothesis-failed`` and equality is data, not a check.
    The upper bound is demanded whenever κ_g(G) exists.  A budget refusal
    yields a ``skipped`` record unless *skip_on_budget* is false.
    """
    if g < 1:
        raise ValueError(f"The extra-connectivity identity needs g >= 1, got {g}; use g = 0 checks")
    record = _new_record(G, g, graph_id, CHECK_EXTRA)

    try:
        outcome = extra_connectivity(G, g, method=method, max_order=max_order)
    except BudgetExceeded as exc:
        if not skip_on_budget:
            raise
        logger.warning("Skipping %s g=%d: %s", record.graph_id, g, exc)
        record.status = STATUS_SKIPPED
        record.note = str(exc)
        return record

    if not outcome.found:
        record.status = STATUS_NOT_APPLICABLE
        record.note = f"no {g}-extra cut exists"
        return record

    kappa_g = outcome.value
    record.kappa_g = kappa_g
    record.witness_cut = outcome.cut.to_list()
    record.expected = 2 * kappa_g + 1
    record.hypothesis_g_bound = kappa_g <= g + 1
    record.hypothesis_half_order = kappa_g <= G.n // 2
    record.hypothesis_holds = record.hypothesis_g_bound and record.hypothesis_half_order

    mu, _ = mycielskian(G)
    upper = witness_upper_cut(G, g, outcome.cut)
    record.upper_witness_cut = upper.to_list()
    witness_ok = len(upper) == record.expected and is_g_extra_cut(mu, upper, 2 * g + 1)

    try:
        mu_outcome = extra_connectivity(mu, 2 * g + 1, method=method, max_order=max_order)
    except BudgetExceeded as exc:
        if not skip_on_budget:
            raise
        logger.warning("Skipping μ(%s) g=%d: %s", record.graph_id, 2 * g + 1, exc)
        record.status = STATUS_SKIPPED
        record.note = str(exc)
        return record

    record.mu_kappa = mu_outcome.value
    record.mu_witness_cut = mu_outcome.cut.to_list() if mu_outcome.found else None
    record.upper_bound_holds = (
        witness_ok and mu_outcome.found and mu_outcome.value <= record.expected
    )
    record.equality_holds = mu_outcome.value == record.expected

    if not record.upper_bound_holds:
        return _flag_violation(
            record,
            f"upper bound fails: κ_{2 * g + 1}(μ(G))={mu_outcome.value}, witness_ok={witness_ok}",
        )
    if record.hypothesis_holds and not record.equality_holds:
        return _flag_violation(
            record,
            f"κ_{2 * g + 1}(μ(G))={mu_outcome.value} != {record.expected} under the hypothesis",
        )
    record.status = STATUS_VERIFIED if record.hypothesis_holds else STATUS_HYPOTHESIS_FAILED
    return record


def check_graph(
    G: Graph,
    g: int,
    method: str = METHOD_PRUNED,
    max_order: int | None = None,
    skip_on_budget: bool = True,
    graph_id: str = "",
) -> VerificationRecord:
    """Route g = 0 to the connectivity identity and g >= 1 to the extra one.

    Graphs outside an identity's preconditions (disconnected, or a single
    vertex for g = 0) get a ``not-applicable`` record rather than an error,
    so external corpora can be fed unfiltered.
    """
    if G.n == 0 or not G.is_connected():
        record = _new_record(G, g, graph_id, CHECK_CONNECTIVITY if g == 0 else CHECK_EXTRA)
        record.note = "graph is not connected"
        return record
    if g == 0:
        if G.n < 2:
            record = _new_record(G, 0, graph_id, CHECK_CONNECTIVITY)
            record.note = "single vertex"
            return record
        try:
            return check_theorem_3_1(G, method=method, max_order=max_order, graph_id=graph_id)
        except BudgetExceeded as exc:
            if not skip_on_budget:
                raise
            record = _new_record(G, 0, graph_id, CHECK_CONNECTIVITY)
            record.status = STATUS_SKIPPED
            record.note = str(exc)
            logger.warning("Skipping %s g=0: %s", record.graph_id, exc)
            return record
    return check_theorem_3_2(
        G, g, method=method, max_order=max_order, skip_on_budget=skip_on_budget, graph_id=graph_id
    )


# =============================================================================
# Monotonicity
# =============================================================================


@dataclass
class AuditPoint:
    """κ_g for one g: ``value`` is None when not found or skipped."""

    g: int
    value: int | None
    status: str  # "found" | "not-found" | "skipped"
    cut: list[int] | None = None

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def monotonicity_audit(
    G: Graph, g_max: int, method: str = METHOD_PRUNED, max_order: int | None = None
) -> list[AuditPoint]:
    """κ_0 .. κ_{g_max} of a connected graph as extra-cut values.

    κ_0 here is the extra-cut value, so complete graphs report not-found.
    """
    if g_max < 0:
        raise ValueError(f"g_max must be non-negative, got {g_max}")
    points = []
    for g in range(g_max + 1):
        try:
            outcome = extra_connectivity(G, g, method=method, max_order=max_order)
        except BudgetExceeded as exc:
            logger.warning("Audit skipped g=%d: %s", g, exc)
            points.append(AuditPoint(g=g, value=None, status="skipped"))
            continue
        if outcome.found:
            cut = outcome.cut.to_list()
            points.append(AuditPoint(g=g, value=outcome.value, status="found", cut=cut))
        else:
            points.append(AuditPoint(g=g, value=None, status="not-found"))
    return points


def audit_is_monotone(points: list[AuditPoint]) -> bool:
    """Non-decreasing while found; nothing found after the first not-found."""
    previous = None
    missing = False
    for point in points:
        if point.status == "skipped":
            continue
        if point.status == "not-found":
            missing = True
            continue
        if missing or (previous is not None and point.value < previous):
            return False
        previous = point.value
    return True


@dataclass
class AuditRecord:
    """One graph's monotonicity audit."""

    graph_id: str
    graph6: str
    n: int
    m: int
    g_max: int
    values: list[int | None] = field(default_factory=list)
    monotone: bool = True
    status: str = STATUS_VERIFIED
    note: str = ""

    @property
    def is_violation(self) -> bool:
        return self.status == STATUS_VIOLATION

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


# =============================================================================
# Batch
# =============================================================================


@dataclass(frozen=True)
class BatchOptions:
    """Solver and scheduling options shared by every batch item."""

    method: str = METHOD_PRUNED
    max_order: int | None = None
    jobs: int = 1
    skip_on_budget: bool = True

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")


@dataclass
class BatchResult:
    """Records in input order plus the status summary."""

    records: list
    summary: dict[str, int]

    @property
    def has_violations(self) -> bool:
        return self.summary.get("violation", 0) > 0

    def violations(self) -> list:
        return [r for r in self.records if r.is_violation]


def empty_summary() -> dict[str, int]:
    summary = {"total": 0}
    summary.update({status.replace("-", "_"): 0 for status in STATUSES})
    summary["equality_under_failed_hypothesis"] = 0
    return summary


def summarize(records: Iterable[VerificationRecord]) -> dict[str, int]:
    """Status counts for verification records."""
    summary = empty_summary()
    for record in records:
        summary["total"] += 1
        summary[record.status.replace("-", "_")] += 1
        if record.status == STATUS_HYPOTHESIS_FAILED and record.equality_holds:
            summary["equality_under_failed_hypothesis"] += 1
    return summary


def _verify_item(task: tuple[str, Graph, int, BatchOptions]) -> VerificationRecord:
    graph_id, G, g, options = task
    return check_graph(
        G,
        g,
        method=options.method,
        max_order=options.max_order,
        skip_on_budget=options.skip_on_budget,
        graph_id=graph_id,
    )


def _audit_item(task: tuple[str, Graph, int, BatchOptions]) -> AuditRecord:
    graph_id, G, g_max, options = task
    record = AuditRecord(graph_id=graph_id, graph6=encode_graph6(G), n=G.n, m=G.m, g_max=g_max)
    if G.n == 0 or not G.is_connected():
        record.status = STATUS_NOT_APPLICABLE
        record.note = "graph is not connected"
        return record
    points = monotonicity_audit(G, g_max, method=options.method, max_order=options.max_order)
    record.values = [p.value for p in points]
    record.monotone = audit_is_monotone(points)
    if not record.monotone:
        record.status = STATUS_VIOLATION
        record.note = "κ_g is not monotone in g"
        logger.error(
            "VIOLATION %s: monotonicity %s graph6=%s", graph_id, record.values, record.graph6
        )
    elif any(p.status == "skipped" for p in points):
        record.status = STATUS_SKIPPED
    return record


def _run_ordered(worker, tasks: list, jobs: int) -> list:
    """Apply *worker* to *tasks*; results come back in task order for any *jobs*."""
    if jobs == 1 or len(tasks) <= 1:
        return [worker(task) for task in tasks]
    chunksize = max(1, len(tasks) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks, chunksize=chunksize))


def run_batch(
    corpus: Iterable[tuple[str, Graph]],
    g_list: Iterable[int],
    options: BatchOptions | None = None,
) -> BatchResult:
    """Verify every (graph, g) pair of a corpus.

    Records are ordered graph-major, then by position in *g_list*,
    regardless of ``options.jobs``.
    """
    options = options or BatchOptions()
    g_values = list(g_list)
    for g in g_values:
        if g < 0:
            raise ValueError(f"g must be non-negative, got {g}")
    tasks = [(graph_id, G, g, options) for graph_id, G in corpus for g in g_values]
    logger.info("Batch: %d task(s), method=%s, jobs=%d", len(tasks), options.method, options.jobs)
    records = _run_ordered(_verify_item, tasks, options.jobs)
    summary = summarize(records)
    logger.info("Batch summary: %s", summary)
    return BatchResult(records=records, summary=summary)


def run_audit_batch(
    corpus: Iterable[tuple[str, Graph]], g_max: int, options: BatchOptions | None = None
) -> BatchResult:
    """Monotonicity audits over a corpus, one record per graph."""
    options = options or BatchOptions()
    if g_max < 0:
        raise ValueError(f"g_max must be non-negative, got {g_max}")
    tasks = [(graph_id, G, g_max, options) for graph_id, G in corpus]
    records = _run_ordered(_audit_item, tasks, options.jobs)
    summary = empty_summary()
    for record in records:
        summary["total"] += 1
        summary[record.status.replace("-", "_")] += 1
    return BatchResult(records=records, summary=summary)


# =============================================================================
# Corpora
# =============================================================================


def corpus_from_families(specs: Iterable[str]) -> Iterator[tuple[str, Graph]]:
    """Named-family corpus; ids are the normalised family strings."""
    for text in specs:
        spec = FamilySpec.parse(text)
        yield str(spec), gen_named(spec)


def corpus_from_graph6(source, name: str = "graph6") -> Iterator[tuple[str, Graph]]:
    """graph6 stream corpus; ids are ``name:line``."""
    for line_no, G in read_graph6_records(source):
        yield f"{name}:{line_no}", G


def corpus_from_enumeration(
    orders: Iterable[int], max_order: int | None = None
) -> Iterator[tuple[str, Graph]]:
    """Labeled connected graphs for each order; ids are ``enum:n=<n>#<index>``."""
    limit = DEFAULT_ENUMERATE_MAX_ORDER if max_order is None else max_order
    for n in orders:
        for index, G in enumerate(enumerate_labeled_connected(n, max_order=limit)):
            yield f"enum:n={n}#{index}", G
