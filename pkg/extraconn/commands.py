"""
Command handlers – resolve the graph source, run the service call and emit
the result through a single writer.
"""

import logging
import sys
from pathlib import Path

from .app import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, max_order_for
from .errors import BudgetExceeded
from .models import min_degree
from .services.connectivity import extra_connectivity, vertex_connectivity
from .services.generators import gen_random
from .services.graph6 import decode_graph6, encode_graph6, read_edge_list, write_edge_list
from .services.mycielskian import iterate_mycielskian, mycielskian
from .services.report import emit_object, emit_report
from .services.verification import (
    AuditRecord,
    BatchOptions,
    VerificationRecord,
    check_graph,
    corpus_from_enumeration,
    corpus_from_families,
    corpus_from_graph6,
    run_audit_batch,
    run_batch,
)

logger = logging.getLogger(__name__)


# =============================================================================
# Graph sources
# =============================================================================


def _parse_order_range(text):
    """``"5"`` -> 1..5, ``"3-5"`` -> 3..5."""
    lo, sep, hi = text.partition("-")
    try:
        if sep:
            first, last = int(lo), int(hi)
        else:
            first, last = 1, int(lo)
    except ValueError:
        raise ValueError(f"--enumerate expects N or A-B, got {text!r}") from None
    if first < 1 or last < first:
        raise ValueError(f"--enumerate range must satisfy 1 <= A <= B, got {text!r}")
    return range(first, last + 1)


def _parse_random(text):
    n_text, sep, p_text = text.partition(":")
    if not sep:
        raise ValueError(f"--random expects N:P, got {text!r}")
    try:
        return int(n_text), float(p_text)
    except ValueError:
        raise ValueError(f"--random expects N:P, got {text!r}") from None


def _open_graph6(path):
    if path == "-":
        return sys.stdin.buffer
    return open(path, "rb")


def iter_corpus(args, config):
    """Yield ``(graph_id, Graph)`` for the invocation's graph source.

    Raises ``ValueError`` for malformed sources and ``OSError`` for
    unreadable files.
    """
    if args.family:
        yield from corpus_from_families(args.family)
    elif args.graph6 is not None:
        spec = args.graph6.strip()
        yield spec, decode_graph6(spec)
    elif args.edge_list:
        text = Path(args.edge_list).read_text()
        yield args.edge_list, read_edge_list(text)
    elif args.graph6_file:
        name = "stdin" if args.graph6_file == "-" else args.graph6_file
        source = _open_graph6(args.graph6_file)
        try:
            yield from corpus_from_graph6(source, name=name)
        finally:
            if source is not sys.stdin.buffer:
                source.close()
    elif args.enumerate:
        yield from corpus_from_enumeration(
            _parse_order_range(args.enumerate), max_order=config["ENUMERATE_MAX_ORDER"]
        )
    elif args.random:
        n, p = _parse_random(args.random)
        if args.count < 1:
            raise ValueError(f"--count must be >= 1, got {args.count}")
        for seed in range(args.seed, args.seed + args.count):
            yield f"random:{n}:{p}:{seed}", gen_random(n, p, seed)


def load_single_graph(args, config):
    """The one graph of a single-graph command, or ``ValueError``."""
    if args.enumerate:
        raise ValueError(f"--enumerate is only accepted by batch and audit, not {args.command}")
    graphs = list(iter_corpus(args, config))
    if len(graphs) != 1:
        raise ValueError(f"{args.command} needs exactly one graph, the source gave {len(graphs)}")
    return graphs[0]


# =============================================================================
# Output
# =============================================================================


def _write(payload, output):
    """Single writer for every command's report."""
    if output is None:
        sys.stdout.flush()
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
    else:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(payload)


def _graph_payload(graph_id, G):
    return {
        "graph_id": graph_id,
        "n": G.n,
        "m": G.m,
        "graph6": encode_graph6(G),
        "degree_sequence": G.degree_sequence(),
        "edge_list": write_edge_list(G),
    }


# =============================================================================
# Handlers
# =============================================================================


def _max_order(args, config):
    if args.max_order is not None:
        return args.max_order
    return max_order_for(config, args.method)


def cmd_gen(args, config):
    graph_id, G = load_single_graph(args, config)
    _write(emit_object(_graph_payload(graph_id, G), args.format), args.output)
    return EXIT_OK


def cmd_mu(args, config):
    graph_id, G = load_single_graph(args, config)
    if args.iterate < 0:
        raise ValueError(f"--iterate must be >= 0, got {args.iterate}")
    if args.iterate == 0:
        # μ^0 is the identity; there is no root or twin to label.
        _write(emit_object(_graph_payload(f"mu^0({graph_id})", G), args.format), args.output)
        return EXIT_OK
    # Check the final order first, then build the last step with its labels.
    final_order = (G.n + 1) * (1 << args.iterate) - 1
    if final_order > config["ITERATE_MAX_ORDER"]:
        raise BudgetExceeded(f"μ^{args.iterate}", final_order, config["ITERATE_MAX_ORDER"])
    base = iterate_mycielskian(G, args.iterate - 1, max_order=config["ITERATE_MAX_ORDER"])
    mu, label = mycielskian(base)
    payload = _graph_payload(f"mu^{args.iterate}({graph_id})", mu)
    payload["label_map"] = label.to_dict()
    _write(emit_object(payload, args.format), args.output)
    return EXIT_OK


def cmd_kappa(args, config):
    graph_id, G = load_single_graph(args, config)
    payload = {
        "graph_id": graph_id,
        "n": G.n,
        "m": G.m,
        "kappa": vertex_connectivity(G),
        "min_degree": min_degree(G),
        "complete": G.is_complete(),
    }
    _write(emit_object(payload, args.format), args.output)
    return EXIT_OK


def cmd_extra(args, config):
    graph_id, G = load_single_graph(args, config)
    max_order = _max_order(args, config)
    outcome = extra_connectivity(G, args.g, method=args.method, max_order=max_order)
    payload = {"graph_id": graph_id, "n": G.n, "m": G.m, **outcome.to_dict()}
    _write(emit_object(payload, args.format), args.output)
    return EXIT_OK


def cmd_verify(args, config):
    graph_id, G = load_single_graph(args, config)
    if args.g < 0:
        raise ValueError(f"--g must be non-negative, got {args.g}")
    record = check_graph(
        G,
        args.g,
        method=args.method,
        max_order=_max_order(args, config),
        skip_on_budget=args.skip_on_budget,
        graph_id=graph_id,
    )
    _write(emit_object(record.to_dict(), args.format), args.output)
    return _violation_exit([record])


def _batch_options(args, config):
    jobs = args.jobs if args.jobs is not None else config["JOBS"]
    return BatchOptions(
        method=args.method,
        max_order=_max_order(args, config),
        jobs=jobs,
        skip_on_budget=args.skip_on_budget,
    )


def _violation_exit(records):
    violations = [r for r in records if r.is_violation]
    for record in violations:
        print(f"VIOLATION {record.graph_id} {record.graph6}", file=sys.stderr)
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_batch(args, config):
    options = _batch_options(args, config)
    result = run_batch(iter_corpus(args, config), args.g, options)
    report = emit_report(result.records, result.summary, args.format, VerificationRecord)
    _write(report, args.output)
    return _violation_exit(result.records)


def cmd_audit(args, config):
    options = _batch_options(args, config)
    result = run_audit_batch(iter_corpus(args, config), args.g_max, options)
    report = emit_report(result.records, result.summary, args.format, AuditRecord)
    _write(report, args.output)
    return _violation_exit(result.records)


HANDLERS = {
    "gen": cmd_gen,
    "mu": cmd_mu,
    "kappa": cmd_kappa,
    "extra": cmd_extra,
    "verify": cmd_verify,
    "batch": cmd_batch,
    "audit": cmd_audit,
}


def dispatch(args, config):
    """Run one parsed invocation and map its outcome to the exit status."""
    handler = HANDLERS[args.command]
    try:
        return handler(args, config)
    except BudgetExceeded as exc:
        print(f"extraconn: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        # Covers malformed graph6 / edge lists, unknown families and bad ranges.
        print(f"extraconn: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"extraconn: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception:
        logger.exception("Unhandled error in %s", args.command)
        return EXIT_USAGE
