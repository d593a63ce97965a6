"""Corpus benchmark: HTML snapshots vs their frozen MAML conversions.

HTML metrics replay the snapshot's real dependency graph; MAML metrics use
the flat one-level graph (document plus media) served from a single edge
host, with image bytes re-derived per fidelity by the transcoder. Video
resources count at face value on every tier.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ..convert import HtmlPageSnapshot, load_snapshot
from ..maml import Image as MamlImage, MamlPage, Video as MamlVideo, parse_page
from ..policy import FIDELITIES, Fidelity, FidelityProfile, transcode_image
from .netmodel import FetchItem, NetworkModel, simulate_plt

EDGE_HOST = "https://edge.local"
METRICS = ("plt_s", "size_bytes", "requests")


class BenchError(ValueError):
    pass


class EmptyCorpus(BenchError):
    pass


@dataclass(frozen=True)
class BenchRow:
    page: str
    variant: str  # "html" | "maml"
    fidelity: str  # "-" for html
    plt_s: float
    size_bytes: int
    requests: int

    def metric(self, name: str):
        return getattr(self, name)


@dataclass
class BenchReport:
    corpus_id: str
    model_id: str
    rows: list[BenchRow]

    def pages(self) -> list[str]:
        seen = dict.fromkeys(r.page for r in self.rows)
        return list(seen)

    def row(self, page: str, variant: str, fidelity: str = "-") -> BenchRow:
        for r in self.rows:
            if (r.page, r.variant, r.fidelity) == (page, variant, fidelity):
                return r
        raise BenchError(f"no row for {page}/{variant}/{fidelity}")

    def fidelities(self) -> list[str]:
        ordered = [f.value for f in FIDELITIES]
        present = {r.fidelity for r in self.rows if r.variant == "maml"}
        return [f for f in ordered if f in present]

    def reductions(self, metric: str, fidelity: str = "high") -> list[float]:
        """Per-page (html - maml) / html for one metric, in page order."""
        out = []
        for page in self.pages():
            html = self.row(page, "html").metric(metric)
            maml = self.row(page, "maml", fidelity).metric(metric)
            out.append((html - maml) / html if html else 0.0)
        return out

    def median(self, metric: str, variant: str, fidelity: str = "-") -> float:
        values = [r.metric(metric) for r in self.rows
                  if r.variant == variant and r.fidelity == fidelity]
        if not values:
            raise BenchError(f"no rows for {variant}/{fidelity}")
        return statistics.median(values)

    def median_reduction(self, metric: str, fidelity: str = "high") -> float:
        return statistics.median(self.reductions(metric, fidelity))


# ---------------------------------------------------------------------------
# fetch plans

def plan_from_snapshot(snap: HtmlPageSnapshot) -> list[FetchItem]:
    parents: dict[str, list[str]] = {r.url: [] for r in snap.resources}
    for e in snap.edges:
        parents[e.dst].append(e.src)
    return [FetchItem(url=r.url, size=r.size, parents=tuple(parents[r.url]))
            for r in snap.resources]


def plan_from_maml(page: MamlPage, doc_bytes: int,
                   media_sizes: list[int]) -> list[FetchItem]:
    """Flat plan: the document, then one fetch per media object, all from
    the edge host that serves the page."""
    root = f"{EDGE_HOST}/v1/pages/{page.page_id}"
    items = [FetchItem(url=root, size=doc_bytes)]
    for i, size in enumerate(media_sizes):
        items.append(FetchItem(url=f"{EDGE_HOST}/v1/media/m{i}", size=size,
                               parents=(root,)))
    return items


class _VariantSizer:
    """Per-fidelity media byte sizes, transcoding each image once per tier."""

    def __init__(self, snap: HtmlPageSnapshot, profile: FidelityProfile):
        self.snap = snap
        self.profile = profile
        self.cache: dict[tuple[str, Fidelity], int] = {}

    def size_of(self, url: str, fidelity: Fidelity) -> int:
        key = (url, fidelity)
        if key not in self.cache:
            resource = self.snap.resource(url)
            if resource.mime.startswith("image/"):
                data = self.snap.resource_bytes(url)
                variant = transcode_image(data, fidelity, self.profile)
                self.cache[key] = variant.byte_size
            else:
                self.cache[key] = resource.size
        return self.cache[key]


def bench_page(name: str, snap: HtmlPageSnapshot, page: MamlPage,
               doc_bytes: int, model: NetworkModel,
               fidelities: tuple[Fidelity, ...],
               profile: FidelityProfile) -> list[BenchRow]:
    rows = [BenchRow(
        page=name, variant="html", fidelity="-",
        plt_s=round(simulate_plt(plan_from_snapshot(snap), model), 6),
        size_bytes=snap.total_bytes(),
        requests=len(snap.resources),
    )]
    media_urls = [o.url for o in page.objects
                  if isinstance(o, (MamlImage, MamlVideo))]
    sizer = _VariantSizer(snap, profile)
    tiers = dict.fromkeys((Fidelity.HIGH,) + tuple(fidelities))
    for fidelity in [f for f in reversed(FIDELITIES) if f in tiers]:
        sizes = [sizer.size_of(url, fidelity) for url in media_urls]
        plan = plan_from_maml(page, doc_bytes, sizes)
        rows.append(BenchRow(
            page=name, variant="maml", fidelity=fidelity.value,
            plt_s=round(simulate_plt(plan, model), 6),
            size_bytes=doc_bytes + sum(sizes),
            requests=len(plan),
        ))
    return rows


def run_corpus(corpus_dir: Path, model: Optional[NetworkModel] = None,
               fidelities: tuple[Fidelity, ...] = tuple(FIDELITIES),
               profile: Optional[FidelityProfile] = None) -> BenchReport:
    """Benchmark every snapshot dir (each holding a frozen page.maml)."""
    corpus_dir = Path(corpus_dir)
    model = model or NetworkModel()
    profile = profile or FidelityProfile()
    page_dirs = sorted(d for d in corpus_dir.iterdir()
                       if d.is_dir() and (d / "manifest.json").exists()) \
        if corpus_dir.is_dir() else []
    if not page_dirs:
        raise EmptyCorpus(f"{corpus_dir} holds no snapshot directories")
    rows: list[BenchRow] = []
    for directory in page_dirs:
        snap = load_snapshot(directory)
        maml_path = directory / "page.maml"
        if not maml_path.exists():
            raise BenchError(f"{directory.name} misses its frozen page.maml")
        doc = maml_path.read_text(encoding="utf-8")
        page = parse_page(doc)
        rows.extend(bench_page(directory.name, snap, page,
                               len(doc.encode("utf-8")), model, fidelities,
                               profile))
    return BenchReport(corpus_id=corpus_dir.name, model_id=model.model_id,
                       rows=rows)
