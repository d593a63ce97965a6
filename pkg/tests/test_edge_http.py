import json
from pathlib import Path

import pytest
import requests

from gaius.edge import EdgeConfig, EdgeService, make_server


@pytest.fixture
def server(tmp_path):
    cfg = EdgeConfig(store_path=tmp_path / "store", listen_port=0,
                     studio_dir=tmp_path / "studio")
    (tmp_path / "studio").mkdir()
    (tmp_path / "studio" / "index.html").write_text("<html>studio</html>")
    srv = make_server(EdgeService(cfg)).start_background()
    yield srv
    srv.shutdown()


@pytest.fixture
def base(server):
    return server.address


def register(base, **kw):
    body = {"language": "en", "location": {"lat": 12.9, "lon": 77.5}}
    body.update(kw)
    r = requests.post(f"{base}/v1/users", json=body)
    assert r.status_code == 201
    return r.json()


def auth(user):
    return {"Authorization": f"Bearer {user['token']}"}


SIMPLE_DOC = {"page": {"title": "note"}, "objects": [
    {"type": "txt", "txt": "hello", "x": 0, "y": 0, "w": 600, "h": 40,
     "font": 20, "font-type": "Arial", "color": "#112233"}]}


def publish(base, user, doc=None, community_id=None):
    params = {"community_id": community_id} if community_id else {}
    r = requests.post(f"{base}/v1/pages", data=json.dumps(doc or SIMPLE_DOC),
                      headers=auth(user), params=params)
    assert r.status_code == 201, r.text
    return r.json()["page_id"]


def test_health(base):
    assert requests.get(f"{base}/v1/health").json() == {"status": "ok"}


def test_unknown_route_404(base):
    assert requests.get(f"{base}/v1/nope").status_code == 404


def test_publish_requires_auth(base):
    r = requests.post(f"{base}/v1/pages", data=json.dumps(SIMPLE_DOC))
    assert r.status_code == 403


def test_publish_then_fetch_roundtrip(base):
    user = register(base)
    page_id = publish(base, user)
    r = requests.get(f"{base}/v1/pages/{page_id}", params={"fidelity": "high"})
    assert r.status_code == 200
    assert r.headers["Content-Type"] == "application/maml+json"
    assert int(r.headers["X-Page-Size"]) == len(r.content)
    assert r.headers["X-Fidelity"] == "high"
    doc = json.loads(r.content)
    assert doc["objects"][0]["txt"] == "hello"


def test_validation_error_returns_422_with_rules(base):
    user = register(base)
    bad = json.loads(json.dumps(SIMPLE_DOC))
    bad["objects"][0]["color"] = "#nothex"
    r = requests.post(f"{base}/v1/pages", data=json.dumps(bad),
                      headers=auth(user))
    assert r.status_code == 422
    assert "violations" in r.json()


def test_unknown_page_404(base):
    assert requests.get(f"{base}/v1/pages/ghost").status_code == 404


def test_fidelity_from_network_hint(base):
    user = register(base)
    page_id = publish(base, user)
    r = requests.get(f"{base}/v1/pages/{page_id}",
                     params={"bandwidth_kbps": "100"})
    assert r.headers["X-Fidelity"] == "low"


def test_metrics_flow(base, server):
    user = register(base)
    page_id = publish(base, user)
    r = requests.get(f"{base}/v1/pages/{page_id}", params={"fidelity": "low"})
    token = r.headers["X-Metrics-Token"]
    ok = requests.post(f"{base}/v1/metrics", json={
        "token": token, "plt_ms": 1234, "network_type": "3g",
        "device_model": "galaxy-s4"})
    assert ok.status_code == 200
    dup = requests.post(f"{base}/v1/metrics", json={"token": token,
                                                    "plt_ms": 1})
    assert dup.status_code == 404
    logs = server.service.read_logs()
    assert len(logs) == 1 and logs[0]["plt_ms"] == 1234


def test_communities_and_feed(base):
    user = register(base)
    r = requests.post(f"{base}/v1/communities", headers=auth(user),
                      json={"name": "makers", "topics": ["craft"]})
    cid = r.json()["community_id"]
    publish(base, user, community_id=cid)
    listing = requests.get(f"{base}/v1/communities").json()["communities"]
    assert [c["community_id"] for c in listing] == [cid]
    feed = requests.get(f"{base}/v1/communities/{cid}/feed",
                        params={"alpha": "0.5"}, headers=auth(user)).json()
    assert len(feed["items"]) == 1
    assert feed["items"][0]["kind"] == "page"


def test_private_community_forbidden_over_http(base):
    owner = register(base)
    outsider = register(base)
    r = requests.post(f"{base}/v1/communities", headers=auth(owner),
                      json={"name": "club", "visibility": "private"})
    cid = r.json()["community_id"]
    page_id = publish(base, owner, community_id=cid)
    assert requests.get(f"{base}/v1/pages/{page_id}",
                        headers=auth(outsider)).status_code == 403
    assert requests.get(f"{base}/v1/pages/{page_id}").status_code == 403
    assert requests.get(f"{base}/v1/communities/{cid}/feed",
                        headers=auth(outsider)).status_code == 403


def test_ads_submit_and_quote(base):
    user = register(base)
    r = requests.post(f"{base}/v1/ads", headers=auth(user), json={
        "ad_id": "ad-http", "creatives": {"text_body": "fresh fish"},
        "click_href": "https://fish.example/", "home_community_id": "c1",
        "target_impressions": 1000})
    assert r.status_code == 201 and r.json()["ad_id"] == "ad-http"
    q = requests.post(f"{base}/v1/ads/ad-http/quote").json()
    assert q["base_component"] == "10.00"
    assert q["infra_component"] == "70.00"
    assert q["weekly_charge"] == "80.00"


def test_ad_without_creative_400(base):
    user = register(base)
    r = requests.post(f"{base}/v1/ads", headers=auth(user), json={
        "ad_id": "bad", "creatives": {}, "click_href": "https://x.example/",
        "home_community_id": "c1"})
    assert r.status_code == 400


def test_media_upload_and_fetch(base):
    from imagegen import photo_bytes
    user = register(base)
    r = requests.post(f"{base}/v1/media", params={"kind": "image"},
                      headers=auth(user), data=photo_bytes(200, 150, seed=9))
    assert r.status_code == 201
    media = r.json()
    got = requests.get(f"{base}{media['urls']['low']}")
    assert got.status_code == 200
    assert got.headers["Content-Type"] == "image/jpeg"
    assert len(got.content) == media["sizes"]["low"]


def test_hittest_endpoint_matches_core(base):
    from gaius.maml import hit_test, parse_page
    doc = {"page": {"page_id": "p", "title": "", "language": "en",
                    "location": {"lat": 0, "lon": 0}, "author_id": "a"},
           "objects": [
               {"type": "rect", "x": 0, "y": 0, "w": 100, "h": 100,
                "color": "#ffffff"},
               {"type": "img", "url": "x.jpg", "x": 10, "y": 10, "w": 20,
                "h": 20}]}
    points = [[15, 15], [90, 90], [300, 300]]
    r = requests.post(f"{base}/v1/hittest", json={"document": doc,
                                                  "points": points})
    page = parse_page(json.dumps(doc))
    assert r.json()["indices"] == [hit_test(page, x, y) for x, y in points]


def test_studio_static_served(base):
    r = requests.get(f"{base}/studio/")
    assert r.status_code == 200
    assert "studio" in r.text
    assert requests.get(f"{base}/studio/../secret").status_code == 404


def test_shutdown_flushes_pending_logs(tmp_path):
    cfg = EdgeConfig(store_path=tmp_path / "store2", listen_port=0)
    srv = make_server(EdgeService(cfg)).start_background()
    user = register(srv.address)
    page_id = publish(srv.address, user)
    requests.get(f"{srv.address}/v1/pages/{page_id}")
    srv.shutdown()
    lines = (tmp_path / "store2" / "logs" / "requests.jsonl").read_text().splitlines()
    assert len(lines) == 1
