"""Operator command line: convert snapshots, translate feeds, run the edge
server, and benchmark a corpus.

Exit codes: 0 success, 1 failed threshold assertion, 2 bad input/usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bench import NetworkModel, emit_report, run_corpus
from .bench.run import EmptyCorpus
from .convert import (
    ConvertOptions, FeedParseError, convert_html, load_snapshot, parse_feed,
    translate_rss, RssLayoutParams,
)
from .convert.html2maml import ConvertError
from .convert.snapshot import SnapshotError
from .edge import ConfigError, EdgeConfig, EdgeService, make_server
from .maml import serialize_page, validate
from .policy import Fidelity

THRESHOLDS = {
    "requests": 0.60,  # median request-count reduction
    "size_bytes": 0.50,  # median page-weight reduction at high fidelity
    "plt_s": 0.60,  # median simulated PLT reduction
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConvertError, SnapshotError, FeedParseError, ConfigError,
            EmptyCorpus, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaius",
        description="Flat-page toolchain: convert, translate, serve, benchmark.")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output where applicable")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="flatten an HTML snapshot into a page")
    p.add_argument("snapshot", type=Path, help="snapshot directory")
    p.add_argument("-o", "--out", type=Path, help="output page file")
    p.add_argument("--validate-only", action="store_true",
                   help="convert and report violations without writing")
    p.add_argument("--no-fallback", action="store_true",
                   help="fail instead of laying out snapshots without boxes")
    p.add_argument("--page-id")
    p.add_argument("--title")
    p.add_argument("--language", default="en")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("rss", help="translate an RSS/Atom feed into a page")
    p.add_argument("feed", type=Path, help="feed XML file")
    p.add_argument("-o", "--out", type=Path, help="output page file")
    p.add_argument("--page-id", default="rss-feed")
    p.add_argument("--language", default="en")
    p.set_defaults(func=cmd_rss)

    p = sub.add_parser("serve", help="run the edge server")
    p.add_argument("--config", type=Path,
                   default=os.environ.get("GAIUS_EDGE_CONFIG"),
                   help="key=value config file (or $GAIUS_EDGE_CONFIG)")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("bench", help="benchmark a snapshot corpus")
    p.add_argument("corpus", type=Path, help="corpus directory")
    p.add_argument("-o", "--out", type=Path, default=Path("bench-out"),
                   help="report output directory")
    p.add_argument("--rtt", type=float, default=100.0, help="RTT ms")
    p.add_argument("--bandwidth", type=float, default=1024.0,
                   help="bandwidth kbps")
    p.add_argument("--dns", type=float, default=100.0, help="DNS ms per host")
    p.add_argument("--connections", type=int, default=6,
                   help="max connections per host")
    p.add_argument("--fidelity", action="append", choices=["high", "medium", "low"],
                   help="tiers to include (besides high); repeatable")
    p.add_argument("--assert-thresholds", action="store_true",
                   help="exit nonzero unless reduction targets hold")
    p.set_defaults(func=cmd_bench)
    return parser


def cmd_convert(args) -> int:
    if not args.snapshot.exists():
        print(f"error: snapshot {args.snapshot} does not exist", file=sys.stderr)
        return 2
    snapshot = load_snapshot(args.snapshot)
    opts = ConvertOptions(page_id=args.page_id, title=args.title,
                          language=args.language,
                          use_fallback=not args.no_fallback)
    page = convert_html(snapshot, opts)
    violations = validate(page)
    if args.json:
        print(json.dumps({
            "page_id": page.page_id, "objects": len(page.objects),
            "violations": [v.rule for v in violations]}))
    else:
        print(f"{page.page_id}: {len(page.objects)} objects, "
              f"{len(violations)} violations")
        for v in violations:
            print(f"  violation {v.rule} at object {v.object_index}: {v.message}")
    if args.validate_only:
        return 0 if not violations else 1
    out = args.out or args.snapshot / "page.maml"
    out.write_text(serialize_page(page), encoding="utf-8")
    if not args.json:
        print(f"wrote {out}")
    return 0


def cmd_rss(args) -> int:
    if not args.feed.exists():
        print(f"error: feed {args.feed} does not exist", file=sys.stderr)
        return 2
    feed = parse_feed(args.feed.read_text(encoding="utf-8"),
                      source_url=str(args.feed))
    page = translate_rss(feed, RssLayoutParams(page_id=args.page_id,
                                               language=args.language))
    out = args.out or args.feed.with_suffix(".maml")
    out.write_text(serialize_page(page), encoding="utf-8")
    if args.json:
        print(json.dumps({"page_id": page.page_id, "items": len(feed.items),
                          "objects": len(page.objects), "out": str(out)}))
    else:
        print(f"wrote {out}: {len(feed.items)} items, {len(page.objects)} objects")
    return 0


def cmd_serve(args) -> int:
    if not args.config:
        print("error: --config or GAIUS_EDGE_CONFIG required", file=sys.stderr)
        return 2
    config = EdgeConfig.from_file(Path(args.config))
    service = EdgeService(config)
    server = make_server(service)
    print(f"edge listening on {server.address} (store: {config.store_path})")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.httpd.server_close()
        flushed = service.flush_logs()
        print(f"shut down; flushed {flushed} pending log records")
    return 0


def cmd_bench(args) -> int:
    model = NetworkModel(rtt_ms=args.rtt, bandwidth_kbps=args.bandwidth,
                         dns_ms=args.dns,
                         max_connections_per_host=args.connections)
    fidelities = tuple(Fidelity(f) for f in dict.fromkeys(args.fidelity or
                                                          ["medium", "low"]))
    report = run_corpus(args.corpus, model, fidelities=fidelities)
    written = emit_report(report, args.out)
    summary = {
        "corpus": report.corpus_id,
        "model": report.model_id,
        "pages": len(report.pages()),
        "median_reduction": {
            metric: round(report.median_reduction(metric), 4)
            for metric in THRESHOLDS
        },
        "out": [str(p) for p in written],
    }
    failures = []
    if args.assert_thresholds:
        for metric, floor in THRESHOLDS.items():
            got = report.median_reduction(metric)
            if got < floor:
                failures.append(f"{metric}: median reduction {got:.1%} < {floor:.0%}")
        for page in report.pages():
            html_plt = report.row(page, "html").plt_s
            for fid in report.fidelities():
                if report.row(page, "maml", fid).plt_s >= html_plt:
                    failures.append(f"{page}@{fid}: simulated PLT not below HTML")
        summary["threshold_failures"] = failures
    if args.json:
        print(json.dumps(summary))
    else:
        print(f"benchmarked {summary['pages']} pages "
              f"({report.model_id}) -> {args.out}")
        for metric, value in summary["median_reduction"].items():
            print(f"  median {metric} reduction: {100 * value:.1f}%")
        for failure in failures:
            print(f"  THRESHOLD FAILED: {failure}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
