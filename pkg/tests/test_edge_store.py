import json
import os
from datetime import datetime, timezone

import pytest

from gaius.adx import AdCampaign, Creatives
from gaius.edge import EdgeStore
from gaius.edge.store import atomic_write, media_url
from gaius.maml import GeoPoint, MamlPage, Rect
from gaius.policy import FIDELITIES, Fidelity, FidelityProfile
from imagegen import photo_bytes


@pytest.fixture
def store(tmp_path):
    return EdgeStore(tmp_path / "store")


def page(page_id="p1", objects=()):
    return MamlPage(page_id=page_id, title="t", language="en",
                    location=GeoPoint(0, 0), author_id="a",
                    objects=tuple(objects))


def test_page_roundtrip(store):
    p = page(objects=[Rect(x=0, y=0, w=10, h=10, color="#aabbcc")])
    store.put_page(p)
    assert store.get_page("p1") == p
    assert store.get_page("nope") is None
    assert store.list_page_ids() == ["p1"]


def test_page_write_is_atomic_under_crash(store, monkeypatch):
    old = page()
    store.put_page(old)
    original_bytes = store._page_path("p1").read_bytes()

    def explode(src, dst):
        raise OSError("simulated crash before rename")

    monkeypatch.setattr(os, "replace", explode)
    with pytest.raises(OSError):
        store.put_page(page(objects=[Rect(x=0, y=0, w=9, h=9, color="#000000")]))
    monkeypatch.undo()
    # the visible file is still the old version, not a torn write
    assert store._page_path("p1").read_bytes() == original_bytes
    assert store.get_page("p1") == old


def test_campaign_roundtrip(store):
    c = AdCampaign(
        ad_id="ad1", advertiser_id="adv",
        creatives=Creatives(text_body="hello"),
        click_href="https://x.example/", home_community_id="c1",
        interest_tags=frozenset({"food"}),
        window_start=datetime(2020, 1, 1, tzinfo=timezone.utc),
        window_end=datetime(2020, 2, 1, tzinfo=timezone.utc),
        served_impressions=7)
    store.put_campaign(c)
    loaded = list(store.iter_campaigns())
    assert len(loaded) == 1
    assert loaded[0] == c


def test_media_variants_on_disk(store):
    data = photo_bytes(400, 300, seed=5)
    entry = store.add_image(data, FidelityProfile(), original_url="https://cdn.example/a.jpg")
    directory = store.root / "media" / entry.media_id
    for fid in FIDELITIES:
        assert (directory / f"{fid.value}.jpg").stat().st_size == entry.sizes[fid]
    assert entry.sizes[Fidelity.LOW] < entry.sizes[Fidelity.HIGH]
    payload, content_type = store.media_bytes(entry.media_id, Fidelity.MEDIUM)
    assert content_type == "image/jpeg"
    assert len(payload) == entry.sizes[Fidelity.MEDIUM]


def test_media_index_maps_all_aliases(store):
    data = photo_bytes(300, 200, seed=6)
    entry = store.add_image(data, FidelityProfile(),
                            original_url="https://cdn.example/b.jpg")
    index = store.media_index()
    assert index.get("https://cdn.example/b.jpg").media_id == entry.media_id
    assert index.get(media_url(entry.media_id, Fidelity.LOW)).media_id == entry.media_id
    assert index.get(f"/v1/media/{entry.media_id}").media_id == entry.media_id


def test_video_media_serves_poster_at_low(store):
    poster = photo_bytes(320, 180, seed=7)
    entry = store.add_video(b"\x00" * 5000, poster, FidelityProfile(),
                            original_url="https://cdn.example/v.mp4")
    high, ct_high = store.media_bytes(entry.media_id, Fidelity.HIGH)
    low, ct_low = store.media_bytes(entry.media_id, Fidelity.LOW)
    assert ct_high == "video/mp4" and len(high) == 5000
    assert ct_low == "image/jpeg" and len(low) == entry.sizes[Fidelity.LOW]


def test_log_append_and_read(store):
    store.append_log({"page_id": "p1", "page_size": 10})
    store.append_log({"page_id": "p2", "page_size": 20})
    logs = store.read_logs()
    assert [r["page_id"] for r in logs] == ["p1", "p2"]


def test_atomic_write_replaces_content(tmp_path):
    target = tmp_path / "x.json"
    atomic_write(target, b"one")
    atomic_write(target, b"two")
    assert target.read_bytes() == b"two"
    assert not target.with_name("x.json.tmp").exists()
