#!/usr/bin/env python3
"""
Colin de Verdiere verification lab: command-line entry point.

Exit codes: 0 success, 1 usage or input error, 2 a Violates verdict (or a
failed check), 3 an Inconclusive verdict under --strict, 4 a certificate that
parses but does not verify.
"""

import argparse
import logging
import os
import sys

from graph_core import CapacityError, PreconditionError, named_graph, graph_name
from graph6 import graph6_decode, graph6_encode, Graph6ParseError
from corpus import enumerate_graphs, read_graph6, write_graph6, random_graphs, GraphStream
from engine import EngineConfig, MuEngine, explain
from certificates import (
    cert_read, cert_write, verify_certificate, search_certificate, canonical_complete_certificate,
    edgeless_matrix_certificate,
)
from harness import (
    run_campaign, CampaignViolationError, tight_join, clique_sum_family, run_check_suite, INCONCLUSIVE,
)
from report import ReportOutput
from config import (
    DEFAULT_RULES, DELETION_DEPTH, EDGELESS_CONVENTION, MINOR_BUDGET, CERT_SEARCH_BUDGET,
    CAMPAIGN_DEFAULT_MAX_N, CAMPAIGN_WORKERS, REPORT_FORMAT, RESULTS_DB_URL, configure_logging,
)

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_VIOLATES, EXIT_INCONCLUSIVE, EXIT_INVALID_CERT = 0, 1, 2, 3, 4


def parse_graph(text):
    """A graph6 string, or failing that a graph name (petersen, K5, C7, ...)."""
    try:
        return graph6_decode(text)
    except (Graph6ParseError, CapacityError) as decode_error:
        try:
            return named_graph(text)
        except PreconditionError:
            raise decode_error from None


def load_graphs(arg):
    if os.path.isfile(arg):
        return read_graph6(arg)
    g = parse_graph(arg)
    return GraphStream(arg, lambda: iter([g]), 1)


def engine_config(args):
    rules = tuple(r.strip().upper() for r in args.rules.split(',')) if getattr(args, 'rules', None) else tuple(DEFAULT_RULES)
    return EngineConfig(
        enabled_rules=rules,
        minor_budget=args.minor_budget,
        deletion_depth=getattr(args, 'deletion_depth', DELETION_DEPTH),
        edgeless_convention=getattr(args, 'edgeless_convention', EDGELESS_CONVENTION),
        certificate_search=getattr(args, 'search_certificates', False),
    )


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_mu(args):
    config = engine_config(args)
    certificates = [cert_read(path) for path in args.certificate or []]
    engine = MuEngine(config, certificates)
    for g in load_graphs(args.graph):
        if args.explain:
            print(explain(g, config, certificates))
            continue
        b = engine.bounds(g)
        head = f"mu = {b.value}" if b.resolved else "mu unresolved"
        print(f"{head} [{b.lo},{b.hi}]")
    return EXIT_OK


def cmd_verify(args):
    if args.enumerate is not None:
        stream = enumerate_graphs(args.enumerate)
    elif args.random is not None:
        stream = random_graphs(args.random, args.count, seed=args.seed)
    else:
        stream = read_graph6(args.input)
    config = engine_config(args)
    try:
        report = run_campaign(stream, config, jsonl_path=args.jsonl, workers=args.workers,
                              use_degree_filter=args.use_lemma6_filter, progress=not args.quiet)
    except CampaignViolationError as e:
        print(f"VIOLATES: {e}", file=sys.stderr)
        return EXIT_VIOLATES

    print(ReportOutput(args.format).generate_report(report.summary))
    if args.db:
        from db import get_session, save_campaign
        run_id = save_campaign(get_session(args.db), report, config)
        print(f"saved as run {run_id} in {args.db}")
    if args.strict and report.summary['outcomes'][INCONCLUSIVE]:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_construct(args):
    if args.kind == 'join-tight':
        g = tight_join(args.t, args.base_size, args.seed)
    elif args.kind == 'clique-sum':
        g = clique_sum_family(args.family, args.copies)
    else:
        g = named_graph(args.name)
    print(f"{graph6_encode(g)}  n={g.n} m={g.m}")
    if args.out:
        write_graph6(args.out, [g])
    return EXIT_OK


def cmd_cert(args):
    if args.action == 'verify':
        cert = cert_read(args.file)
        verdict = verify_certificate(cert)
        if verdict.valid:
            label = graph_name(cert.graph) or graph6_encode(cert.graph)
            print(f"valid, corank {verdict.corank}, mu({label}) >= {verdict.corank}"
                  + (f" ({verdict.details})" if verdict.details else ""))
            return EXIT_OK
        print(f"invalid: {verdict.failure}: {verdict.details}")
        return EXIT_INVALID_CERT
    if args.action == 'search':
        g = parse_graph(args.graph)
        cert = search_certificate(g, args.corank, args.budget)
        if cert is None:
            print("no certificate found; this says nothing about mu")
            return EXIT_OK
        print(f"found certificate of corank {cert.claimed_corank}")
    else:
        cert = edgeless_matrix_certificate(args.n) if args.edgeless else canonical_complete_certificate(args.n)
        print(f"certificate of corank {cert.claimed_corank} for n={args.n}")
    if args.out:
        cert_write(cert, args.out)
        print(f"written to {args.out}")
    return EXIT_OK


def cmd_enumerate(args):
    stream = enumerate_graphs(args.n)
    count = write_graph6(args.out, stream) if args.out else sum(1 for _ in stream)
    print(f"{count} graphs on {args.n} vertices")
    return EXIT_OK


def cmd_check(args):
    results = run_check_suite(args.n_max)
    width = max(len(name) for name, _, _ in results)
    for name, passed, detail in results:
        print(f"{name:<{width}}  {'pass' if passed else 'FAIL'}  {detail}")
    return EXIT_OK if all(passed for _, passed, _ in results) else EXIT_VIOLATES


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_engine_options(parser):
    parser.add_argument("--rules", default=None, help="comma separated rule ids (default: all)")
    parser.add_argument("--minor-budget", type=int, default=MINOR_BUDGET)
    parser.add_argument("--deletion-depth", type=int, default=DELETION_DEPTH)
    parser.add_argument("--edgeless-convention", choices=['paper', 'matrix'], default=EDGELESS_CONVENTION)
    parser.add_argument("--search-certificates", action='store_true',
                        help="run the numeric certificate search when bounds stay open")


def build_parser():
    parser = argparse.ArgumentParser(description="Colin de Verdiere parameter verification lab")
    parser.add_argument("--log-level", default=None)
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('mu', help="bounds on mu for a graph6 string, a graph name or a .g6 file")
    p.add_argument('graph')
    p.add_argument('--explain', action='store_true')
    p.add_argument('--certificate', action='append', help="certificate file to feed rule R12")
    _add_engine_options(p)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser('verify', help="edge-bound verification campaign")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument('--enumerate', type=int, nargs='?', const=CAMPAIGN_DEFAULT_MAX_N, metavar='N',
                        help=f"all graphs on N vertices (default {CAMPAIGN_DEFAULT_MAX_N})")
    source.add_argument('--input', metavar='FILE')
    source.add_argument('--random', type=int, metavar='N')
    p.add_argument('--count', type=int, default=100)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--jsonl')
    p.add_argument('--use-lemma6-filter', action='store_true',
                   help="assert all smaller orders are verified and skip graphs failing the degree filter")
    p.add_argument('--db', nargs='?', const=RESULTS_DB_URL, default=None)
    p.add_argument('--workers', type=int, default=CAMPAIGN_WORKERS)
    p.add_argument('--strict', action='store_true')
    p.add_argument('--quiet', action='store_true')
    p.add_argument('--format', choices=['text', 'json', 'csv'], default=REPORT_FORMAT)
    _add_engine_options(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('construct', help="build a named or extremal graph")
    kinds = p.add_subparsers(dest='kind', required=True)
    k = kinds.add_parser('join-tight')
    k.add_argument('--t', type=int, required=True)
    k.add_argument('--base-size', type=int, required=True)
    k.add_argument('--seed', type=int, default=0)
    k = kinds.add_parser('clique-sum')
    k.add_argument('--family', choices=['k22222', 'k122222'], required=True)
    k.add_argument('--copies', type=int, default=2)
    k = kinds.add_parser('named')
    k.add_argument('name')
    for k in kinds.choices.values():
        k.add_argument('--out')
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser('cert', help="verify, search or emit certificates")
    actions = p.add_subparsers(dest='action', required=True)
    a = actions.add_parser('verify')
    a.add_argument('file')
    a = actions.add_parser('search')
    a.add_argument('graph')
    a.add_argument('--corank', type=int, required=True)
    a.add_argument('--budget', type=int, default=CERT_SEARCH_BUDGET)
    a.add_argument('--out')
    a = actions.add_parser('canonical')
    a.add_argument('n', type=int)
    a.add_argument('--edgeless', action='store_true')
    a.add_argument('--out')
    p.set_defaults(func=cmd_cert)

    p = sub.add_parser('enumerate', help="write all graphs on n vertices")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--out')
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser('check', help="run the fixed verification suite")
    p.add_argument('--n-max', type=int, default=6)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    configure_logging(args.log_level)
    logger.debug("running %s", args.command)
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
