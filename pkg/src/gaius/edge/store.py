"""File-backed edge storage: pages and campaigns in their wire formats,
content-addressed media variants, append-only JSONL request log.

Every write goes through write-temp-then-rename, so a crash leaves either
the old file or the new one, never a torn page. One store directory is one
edge region; there is no external database.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
from pathlib import Path
from typing import Iterator, Optional

from ..adx import AdCampaign, Creatives, GeoTarget
from ..maml import GeoPoint, MamlPage, parse_page, serialize_page
from ..maml.codec import format_timestamp, parse_timestamp
from ..policy import (
    FIDELITIES, Fidelity, FidelityProfile, MediaEntry, MediaIndex,
    build_variant_set, transcode_image,
)
from .models import Community, ContentItem, UserProfile


def atomic_write(path: Path, data: bytes) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_bytes(data)
    os.replace(tmp, path)


def media_url(media_id: str, fidelity: Fidelity) -> str:
    return f"/v1/media/{media_id}?fidelity={fidelity.value}"


class EdgeStore:
    def __init__(self, root: Path):
        self.root = Path(root)
        for sub in ("pages", "communities", "users", "ads", "content",
                    "media", "logs"):
            (self.root / sub).mkdir(parents=True, exist_ok=True)
        self._lock = threading.RLock()
        self._log_lock = threading.Lock()
        self._log_path = self.root / "logs" / "requests.jsonl"

    # -- pages ------------------------------------------------------------

    def _page_path(self, page_id: str) -> Path:
        return self.root / "pages" / f"{_safe(page_id)}.maml"

    def put_page(self, page: MamlPage) -> None:
        doc = serialize_page(page)
        with self._lock:
            atomic_write(self._page_path(page.page_id), doc.encode("utf-8"))

    def get_page(self, page_id: str) -> Optional[MamlPage]:
        path = self._page_path(page_id)
        if not path.exists():
            return None
        return parse_page(path.read_text(encoding="utf-8"))

    def has_page(self, page_id: str) -> bool:
        return self._page_path(page_id).exists()

    def list_page_ids(self) -> list[str]:
        return sorted(p.stem for p in (self.root / "pages").glob("*.maml"))

    # -- json collections ---------------------------------------------------

    def _put_json(self, sub: str, key: str, payload: dict) -> None:
        path = self.root / sub / f"{_safe(key)}.json"
        with self._lock:
            atomic_write(path, json.dumps(payload, ensure_ascii=False,
                                          sort_keys=True).encode("utf-8"))

    def _get_json(self, sub: str, key: str) -> Optional[dict]:
        path = self.root / sub / f"{_safe(key)}.json"
        if not path.exists():
            return None
        return json.loads(path.read_text(encoding="utf-8"))

    def _iter_json(self, sub: str) -> Iterator[dict]:
        for path in sorted((self.root / sub).glob("*.json")):
            yield json.loads(path.read_text(encoding="utf-8"))

    def put_user(self, user: UserProfile) -> None:
        self._put_json("users", user.user_id, user.to_json())

    def get_user(self, user_id: str) -> Optional[UserProfile]:
        raw = self._get_json("users", user_id)
        return UserProfile.from_json(raw) if raw else None

    def iter_users(self) -> Iterator[UserProfile]:
        return (UserProfile.from_json(raw) for raw in self._iter_json("users"))

    def put_community(self, community: Community) -> None:
        self._put_json("communities", community.community_id, community.to_json())

    def get_community(self, community_id: str) -> Optional[Community]:
        raw = self._get_json("communities", community_id)
        return Community.from_json(raw) if raw else None

    def iter_communities(self) -> Iterator[Community]:
        return (Community.from_json(raw) for raw in self._iter_json("communities"))

    def put_content(self, item: ContentItem) -> None:
        self._put_json("content", item.content_id, item.to_json())

    def get_content(self, content_id: str) -> Optional[ContentItem]:
        raw = self._get_json("content", content_id)
        return ContentItem.from_json(raw) if raw else None

    def iter_content(self) -> Iterator[ContentItem]:
        return (ContentItem.from_json(raw) for raw in self._iter_json("content"))

    # -- campaigns ----------------------------------------------------------

    def put_campaign(self, c: AdCampaign) -> None:
        self._put_json("ads", c.ad_id, _campaign_to_json(c))

    def iter_campaigns(self) -> Iterator[AdCampaign]:
        return (_campaign_from_json(raw) for raw in self._iter_json("ads"))

    # -- media ----------------------------------------------------------------

    def add_image(self, data: bytes, profile: FidelityProfile,
                  original_url: Optional[str] = None) -> MediaEntry:
        """Transcode and store one image at every fidelity; content-addressed."""
        media_id = hashlib.sha256(data).hexdigest()[:16]
        directory = self.root / "media" / media_id
        directory.mkdir(parents=True, exist_ok=True)
        variant_set = build_variant_set(media_id, data, profile)
        sizes, dims = {}, {}
        for fid, variant in variant_set.variants.items():
            atomic_write(directory / f"{fid.value}.jpg", variant.data)
            sizes[fid] = variant.byte_size
            dims[fid] = (variant.width, variant.height)
        meta = {
            "media_id": media_id, "kind": "image",
            "original_url": original_url,
            "sizes": {f.value: sizes[f] for f in FIDELITIES},
            "dims": {f.value: list(dims[f]) for f in FIDELITIES},
        }
        atomic_write(directory / "meta.json",
                     json.dumps(meta, sort_keys=True).encode("utf-8"))
        return self._entry_from_meta(meta)

    def add_video(self, data: bytes, poster: bytes, profile: FidelityProfile,
                  original_url: Optional[str] = None) -> MediaEntry:
        """Store video bytes once; the poster image covers tiers without video."""
        media_id = hashlib.sha256(data).hexdigest()[:16]
        directory = self.root / "media" / media_id
        directory.mkdir(parents=True, exist_ok=True)
        atomic_write(directory / "video.bin", data)
        poster_low = transcode_image(poster, Fidelity.LOW, profile)
        atomic_write(directory / "low.jpg", poster_low.data)
        meta = {
            "media_id": media_id, "kind": "video",
            "original_url": original_url,
            "sizes": {"high": len(data), "medium": len(data),
                      "low": poster_low.byte_size},
        }
        atomic_write(directory / "meta.json",
                     json.dumps(meta, sort_keys=True).encode("utf-8"))
        return self._entry_from_meta(meta)

    def _entry_from_meta(self, meta: dict) -> MediaEntry:
        media_id = meta["media_id"]
        return MediaEntry(
            media_id=media_id, kind=meta["kind"],
            urls={f: media_url(media_id, f) for f in FIDELITIES},
            sizes={f: meta["sizes"][f.value] for f in FIDELITIES},
        )

    def media_bytes(self, media_id: str, fidelity: Fidelity) -> tuple[bytes, str]:
        """Payload plus content type for GET /v1/media/{id}?fidelity=."""
        directory = self.root / "media" / _safe(media_id)
        meta_path = directory / "meta.json"
        if not meta_path.exists():
            raise FileNotFoundError(media_id)
        meta = json.loads(meta_path.read_text(encoding="utf-8"))
        if meta["kind"] == "video" and fidelity is not Fidelity.LOW:
            return (directory / "video.bin").read_bytes(), "video/mp4"
        return (directory / f"{fidelity.value}.jpg").read_bytes(), "image/jpeg"

    def media_index(self) -> MediaIndex:
        """Index every stored asset under its original url, its canonical
        media urls, and each per-fidelity variant url."""
        index = MediaIndex()
        for directory in sorted((self.root / "media").iterdir()):
            meta_path = directory / "meta.json"
            if not meta_path.exists():
                continue
            meta = json.loads(meta_path.read_text(encoding="utf-8"))
            entry = self._entry_from_meta(meta)
            if meta.get("original_url"):
                index.add(meta["original_url"], entry)
            index.add(f"/v1/media/{entry.media_id}", entry)
            for url in entry.urls.values():
                index.add(url, entry)
        return index

    # -- request log ----------------------------------------------------------

    def append_log(self, record: dict) -> None:
        line = json.dumps(record, ensure_ascii=False, sort_keys=True)
        with self._log_lock:
            with self._log_path.open("a", encoding="utf-8") as fh:
                fh.write(line + "\n")

    def read_logs(self) -> list[dict]:
        if not self._log_path.exists():
            return []
        with self._log_lock:
            lines = self._log_path.read_text(encoding="utf-8").splitlines()
        return [json.loads(line) for line in lines if line.strip()]


def _safe(key: str) -> str:
    """Filesystem-safe name; path separators and dots must not escape."""
    return "".join(c if c.isalnum() or c in "-_" else "_" for c in key)


def _campaign_to_json(c: AdCampaign) -> dict:
    return {
        "ad_id": c.ad_id,
        "advertiser_id": c.advertiser_id,
        "creatives": {"video_url": c.creatives.video_url,
                      "image_url": c.creatives.image_url,
                      "text_body": c.creatives.text_body},
        "click_href": c.click_href,
        "home_community_id": c.home_community_id,
        "visibility": c.visibility,
        "geo_target": None if c.geo_target is None else {
            "lat": c.geo_target.center.lat, "lon": c.geo_target.center.lon,
            "radius_km": c.geo_target.radius_km},
        "interest_tags": sorted(c.interest_tags),
        "target_impressions": c.target_impressions,
        "window_start": format_timestamp(c.window_start),
        "window_end": format_timestamp(c.window_end),
        "served_impressions": c.served_impressions,
    }


def _campaign_from_json(raw: dict) -> AdCampaign:
    geo = raw.get("geo_target")
    return AdCampaign(
        ad_id=raw["ad_id"],
        advertiser_id=raw["advertiser_id"],
        creatives=Creatives(**raw["creatives"]),
        click_href=raw["click_href"],
        home_community_id=raw["home_community_id"],
        visibility=raw.get("visibility", "local_only"),
        geo_target=None if geo is None else GeoTarget(
            center=GeoPoint(geo["lat"], geo["lon"]),
            radius_km=geo["radius_km"]),
        interest_tags=frozenset(raw.get("interest_tags", [])),
        target_impressions=raw["target_impressions"],
        window_start=parse_timestamp(raw["window_start"]),
        window_end=parse_timestamp(raw["window_end"]),
        served_impressions=raw.get("served_impressions", 0),
    )
