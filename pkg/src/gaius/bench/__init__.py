"""Benchmark harness: PLT simulation, corpus runs, report emission."""

from .netmodel import CyclicGraph, FetchItem, NetworkModel, host_of, simulate_plt
from .run import (
    BenchError, BenchReport, BenchRow, EmptyCorpus, bench_page,
    plan_from_maml, plan_from_snapshot, run_corpus,
)
from .report import emit_report, load_report, write_csv, write_plots, write_summary

__all__ = [
    "CyclicGraph", "FetchItem", "NetworkModel", "host_of", "simulate_plt",
    "BenchError", "BenchReport", "BenchRow", "EmptyCorpus", "bench_page",
    "plan_from_maml", "plan_from_snapshot", "run_corpus",
    "emit_report", "load_report", "write_csv", "write_plots", "write_summary",
]
