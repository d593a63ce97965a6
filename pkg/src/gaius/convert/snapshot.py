"""Frozen captures of HTML pages: resources, fetch-dependency graph, layout.

A snapshot lives in a directory with a ``manifest.json`` plus the raw
resource files, so conversion and benchmarking never touch the network.
"""

from __future__ import annotations

import base64
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

TRIGGER_KINDS = ("parse", "script", "redirect", "stylesheet")
BOX_KINDS = ("image", "text-block", "block", "video", "input", "link")


class SnapshotError(ValueError):
    pass


@dataclass(frozen=True)
class Resource:
    url: str
    mime: str
    size: int
    path: Optional[str] = None  # file under the snapshot dir, when captured


@dataclass(frozen=True)
class GraphEdge:
    src: str
    dst: str
    trigger: str


@dataclass(frozen=True)
class LayoutBox:
    kind: str
    x: float
    y: float
    w: float
    h: float
    src: Optional[str] = None
    text: Optional[str] = None
    href: Optional[str] = None
    color: Optional[str] = None  # explicit background (blocks) or text color
    font: Optional[int] = None
    name: Optional[str] = None
    placeholder: Optional[str] = None


@dataclass
class HtmlPageSnapshot:
    url: str
    viewport_width: int
    resources: list[Resource]
    edges: list[GraphEdge]
    layout_boxes: Optional[list[LayoutBox]] = None
    root_dir: Optional[Path] = None
    inline_bodies: dict[str, bytes] = field(default_factory=dict)

    def resource(self, url: str) -> Resource:
        for r in self.resources:
            if r.url == url:
                return r
        raise SnapshotError(f"unknown resource {url!r}")

    def resource_bytes(self, url: str) -> bytes:
        if url in self.inline_bodies:
            return self.inline_bodies[url]
        r = self.resource(url)
        if r.path is None or self.root_dir is None:
            raise SnapshotError(f"no captured body for {url!r}")
        return (self.root_dir / r.path).read_bytes()

    def total_bytes(self) -> int:
        return sum(r.size for r in self.resources)


def check_snapshot(snap: HtmlPageSnapshot) -> None:
    """Enforce snapshot invariants: DAG rooted at the document, media boxes resolvable."""
    urls = {r.url for r in snap.resources}
    if snap.url not in urls:
        raise SnapshotError("root document is not among the resources")
    incoming: dict[str, int] = {u: 0 for u in urls}
    adjacency: dict[str, list[str]] = {u: [] for u in urls}
    for e in snap.edges:
        if e.trigger not in TRIGGER_KINDS:
            raise SnapshotError(f"unknown trigger {e.trigger!r}")
        if e.src not in urls or e.dst not in urls:
            raise SnapshotError(f"edge {e.src!r}->{e.dst!r} references unknown resource")
        incoming[e.dst] += 1
        adjacency[e.src].append(e.dst)
    if incoming[snap.url] != 0:
        raise SnapshotError("root document has incoming edges")
    for u in urls:
        if u != snap.url and incoming[u] == 0:
            raise SnapshotError(f"resource {u!r} is unreachable from the root")
    # Kahn's algorithm; leftovers mean a cycle
    degree = dict(incoming)
    queue = [u for u in urls if degree[u] == 0]
    seen = 0
    while queue:
        u = queue.pop()
        seen += 1
        for v in adjacency[u]:
            degree[v] -= 1
            if degree[v] == 0:
                queue.append(v)
    if seen != len(urls):
        raise SnapshotError("request graph contains a cycle")
    for box in snap.layout_boxes or []:
        if box.kind not in BOX_KINDS:
            raise SnapshotError(f"unknown layout box kind {box.kind!r}")
        if box.kind in ("image", "video") and (box.src is None or box.src not in urls):
            raise SnapshotError(f"{box.kind} box references missing resource {box.src!r}")


def _box_from_json(raw: dict) -> LayoutBox:
    return LayoutBox(
        kind=raw["kind"], x=float(raw["x"]), y=float(raw["y"]),
        w=float(raw["w"]), h=float(raw["h"]),
        src=raw.get("src"), text=raw.get("text"), href=raw.get("href"),
        color=raw.get("color"), font=raw.get("font"),
        name=raw.get("name"), placeholder=raw.get("placeholder"),
    )


def load_snapshot(directory: Path) -> HtmlPageSnapshot:
    directory = Path(directory)
    manifest_path = directory / "manifest.json"
    if not manifest_path.exists():
        raise SnapshotError(f"{directory} has no manifest.json")
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    resources = [Resource(url=r["url"], mime=r["mime"], size=int(r["size"]),
                          path=r.get("file"))
                 for r in manifest["resources"]]
    edges = [GraphEdge(src=e["from"], dst=e["to"], trigger=e["trigger"])
             for e in manifest.get("graph", [])]
    boxes = None
    if manifest.get("layout_boxes") is not None:
        boxes = [_box_from_json(b) for b in manifest["layout_boxes"]]
    snap = HtmlPageSnapshot(
        url=manifest["url"],
        viewport_width=int(manifest.get("viewport", {}).get("width", 1080)),
        resources=resources,
        edges=edges,
        layout_boxes=boxes,
        root_dir=directory,
    )
    check_snapshot(snap)
    return snap


def save_manifest(snap: HtmlPageSnapshot, directory: Path) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    manifest = {
        "url": snap.url,
        "viewport": {"width": snap.viewport_width},
        "resources": [
            {"url": r.url, "mime": r.mime, "size": r.size,
             **({"file": r.path} if r.path else {})}
            for r in snap.resources
        ],
        "graph": [{"from": e.src, "to": e.dst, "trigger": e.trigger}
                  for e in snap.edges],
    }
    if snap.layout_boxes is not None:
        manifest["layout_boxes"] = [
            {k: v for k, v in {
                "kind": b.kind, "x": b.x, "y": b.y, "w": b.w, "h": b.h,
                "src": b.src, "text": b.text, "href": b.href,
                "color": b.color, "font": b.font, "name": b.name,
                "placeholder": b.placeholder,
            }.items() if v is not None}
            for b in snap.layout_boxes
        ]
    path = directory / "manifest.json"
    path.write_text(json.dumps(manifest, indent=1, ensure_ascii=False),
                    encoding="utf-8")
    return path


# ---------------------------------------------------------------------------
# HAR 1.2 import

_INITIATOR_TRIGGERS = {"parser": "parse", "script": "script",
                       "redirect": "redirect", "stylesheet": "stylesheet"}


def snapshot_from_har(har: dict, viewport_width: int = 1080) -> HtmlPageSnapshot:
    """Build a snapshot from a HAR 1.2 log: resources plus the fetch graph.

    Layout boxes are not part of HAR; conversion of an imported snapshot
    relies on the fallback layout. Edges come from the Chrome-style
    ``_initiator`` extension when present, else everything hangs off the
    root document.
    """
    entries = har.get("log", {}).get("entries", [])
    if not entries:
        raise SnapshotError("HAR log has no entries")
    resources: list[Resource] = []
    inline: dict[str, bytes] = {}
    seen: set[str] = set()
    for entry in entries:
        url = entry["request"]["url"]
        if url in seen:
            continue
        seen.add(url)
        content = entry.get("response", {}).get("content", {})
        size = content.get("size") or entry.get("response", {}).get("bodySize") or 0
        mime = content.get("mimeType", "application/octet-stream")
        resources.append(Resource(url=url, mime=mime, size=max(0, int(size))))
        text = content.get("text")
        if text is not None:
            if content.get("encoding") == "base64":
                inline[url] = base64.b64decode(text)
            else:
                inline[url] = text.encode("utf-8")
    root = entries[0]["request"]["url"]
    redirect_sources: dict[str, str] = {}
    for entry in entries:
        target = entry.get("response", {}).get("redirectURL") or ""
        if target and target in seen:
            redirect_sources.setdefault(target, entry["request"]["url"])
    edges: list[GraphEdge] = []
    linked: set[str] = {root}
    for entry in entries:
        url = entry["request"]["url"]
        if url in linked:
            continue
        if url in redirect_sources and redirect_sources[url] != url:
            edges.append(GraphEdge(src=redirect_sources[url], dst=url,
                                   trigger="redirect"))
            linked.add(url)
            continue
        initiator = entry.get("_initiator") or {}
        src = initiator.get("url")
        kind = _INITIATOR_TRIGGERS.get(initiator.get("type"), "parse")
        if not src or src not in seen or src == url:
            src = root
        edges.append(GraphEdge(src=src, dst=url, trigger=kind))
        linked.add(url)
    snap = HtmlPageSnapshot(url=root, viewport_width=viewport_width,
                            resources=resources, edges=edges,
                            inline_bodies=inline)
    check_snapshot(snap)
    return snap
