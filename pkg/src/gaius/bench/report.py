"""Report emission: per-page CSV, markdown summary, and CDF plot images."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .run import BenchReport, BenchRow, METRICS  # noqa: E402

CSV_COLUMNS = ["page", "variant", "fidelity", "plt_s", "size_bytes", "requests"]

_METRIC_LABELS = {
    "plt_s": "Page load time (s)",
    "size_bytes": "Page size (bytes)",
    "requests": "Requests per page (#)",
}


class IoError(OSError):
    pass


def write_csv(report: BenchReport, path: Path) -> Path:
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in report.rows:
            writer.writerow([r.page, r.variant, r.fidelity,
                             repr(r.plt_s), r.size_bytes, r.requests])
    return path


def load_report(path: Path, corpus_id: str = "", model_id: str = "") -> BenchReport:
    rows = []
    with Path(path).open(newline="", encoding="utf-8") as fh:
        for raw in csv.DictReader(fh):
            rows.append(BenchRow(
                page=raw["page"], variant=raw["variant"],
                fidelity=raw["fidelity"], plt_s=float(raw["plt_s"]),
                size_bytes=int(raw["size_bytes"]),
                requests=int(raw["requests"])))
    return BenchReport(corpus_id=corpus_id, model_id=model_id, rows=rows)


def _cdf(values):
    xs = sorted(values)
    n = len(xs)
    ys = [(i + 1) / n for i in range(n)]
    return xs, ys


def _cdf_figure(series: dict[str, list[float]], xlabel: str, out: Path):
    fig, ax = plt.subplots(figsize=(5.2, 3.4))
    for label, values in series.items():
        if not values:
            continue
        xs, ys = _cdf(values)
        ax.plot(xs, ys, marker=".", markersize=4, label=label)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("CDF")
    ax.set_ylim(0, 1.02)
    ax.grid(alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def write_plots(report: BenchReport, out_dir: Path) -> list[Path]:
    """The four CDF panels: PLT, size, request count, reduction percentages."""
    out_dir = Path(out_dir)
    written = []
    for metric, stem in (("plt_s", "cdf_plt"), ("size_bytes", "cdf_size"),
                         ("requests", "cdf_requests")):
        series = {"HTML": [r.metric(metric) for r in report.rows
                           if r.variant == "html"]}
        for fidelity in report.fidelities():
            series[f"MAML {fidelity}"] = [
                r.metric(metric) for r in report.rows
                if r.variant == "maml" and r.fidelity == fidelity]
        written.append(_cdf_figure(series, _METRIC_LABELS[metric],
                                   out_dir / f"{stem}.png"))
    reductions = {
        _METRIC_LABELS[metric].split(" (")[0]:
            [100.0 * v for v in report.reductions(metric)]
        for metric in METRICS
    }
    written.append(_cdf_figure(reductions, "MAML reduction over HTML (%)",
                               out_dir / "cdf_reductions.png"))
    return written


def write_summary(report: BenchReport, path: Path) -> Path:
    lines = [
        f"# Benchmark summary: {report.corpus_id}",
        "",
        f"Network model: `{report.model_id}`",
        "",
        "| variant | median PLT (s) | median size (bytes) | median requests |",
        "|---|---|---|---|",
    ]
    html_row = ("html", "-")
    variants = [html_row] + [("maml", f) for f in report.fidelities()]
    for variant, fidelity in variants:
        name = "HTML" if variant == "html" else f"MAML {fidelity}"
        lines.append("| {} | {:.3f} | {:.0f} | {:.0f} |".format(
            name,
            report.median("plt_s", variant, fidelity),
            report.median("size_bytes", variant, fidelity),
            report.median("requests", variant, fidelity)))
    lines += ["", "## Median reductions, MAML high vs HTML", ""]
    for metric in METRICS:
        lines.append("- {}: {:.1f}%".format(
            _METRIC_LABELS[metric], 100.0 * report.median_reduction(metric)))
    lines.append("")
    path.write_text("\n".join(lines), encoding="utf-8")
    return path


def emit_report(report: BenchReport, out_dir: Path) -> list[Path]:
    """Write CSV + markdown + the four CDF images into ``out_dir``."""
    if not report.rows:
        raise IoError("refusing to emit an empty report")
    out_dir = Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        written = [write_csv(report, out_dir / "report.csv"),
                   write_summary(report, out_dir / "summary.md")]
        written += write_plots(report, out_dir)
    except OSError as e:
        raise IoError(str(e)) from None
    return written
