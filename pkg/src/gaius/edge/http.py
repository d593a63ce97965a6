"""HTTP/1.1 front for the edge service (stdlib threading server).

All payloads use the wire formats; page responses carry X-Page-Size,
X-Fidelity and X-Metrics-Token headers so clients can report load times
back through POST /v1/metrics.
"""

from __future__ import annotations

import json
import re
import threading
from datetime import timedelta
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from ..adx import AdCampaign, AdError, Creatives, GeoTarget, UnknownAd
from ..maml import GeoPoint, MamlError, hit_test, parse_page, parse_timestamp
from ..policy import Fidelity, MissingVariant
from .models import Forbidden, NotFound, UnknownToken, ValidationFailed
from .service import EdgeService, _now

MAML_CONTENT_TYPE = "application/maml+json"

_STATIC_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json",
    ".png": "image/png",
    ".jpg": "image/jpeg",
    ".svg": "image/svg+xml",
}


class EdgeRequestHandler(BaseHTTPRequestHandler):
    server_version = "gaius-edge/0.1"
    protocol_version = "HTTP/1.1"
    service: EdgeService = None  # set by make_server

    # -- plumbing -------------------------------------------------------------

    def log_message(self, fmt, *args):  # quiet by default; tests stay readable
        pass

    def _send(self, status: int, body: bytes, content_type: str = "application/json",
              headers: dict | None = None):
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        for key, value in (headers or {}).items():
            self.send_header(key, value)
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, payload: dict, headers: dict | None = None):
        self._send(status, json.dumps(payload, ensure_ascii=False).encode("utf-8"),
                   headers=headers)

    def _error(self, status: int, message: str, **extra):
        self._send_json(status, {"error": message, **extra})

    def _body(self) -> bytes:
        length = int(self.headers.get("Content-Length") or 0)
        return self.rfile.read(length) if length else b""

    def _json_body(self) -> dict:
        raw = self._body()
        if not raw:
            return {}
        return json.loads(raw.decode("utf-8"))

    def _token(self):
        auth = self.headers.get("Authorization", "")
        if auth.startswith("Bearer "):
            return auth[len("Bearer "):].strip()
        return None

    def _user(self):
        return self.service.user_by_token(self._token())

    # -- dispatch ----------------------------------------------------------------

    def do_GET(self):
        self._dispatch("GET")

    def do_POST(self):
        self._dispatch("POST")

    def _dispatch(self, method: str):
        url = urlparse(self.path)
        query = {k: v[-1] for k, v in parse_qs(url.query).items()}
        try:
            handled = self._route(method, url.path, query)
        except (NotFound, UnknownAd) as e:
            self._error(404, str(e))
        except (Forbidden,) as e:
            self._error(403, str(e))
        except UnknownToken as e:
            self._error(404, f"unknown metrics token {e}")
        except ValidationFailed as e:
            self._send_json(422, {"error": "validation failed", "violations": [
                {"rule": v.rule, "field": v.field, "message": v.message,
                 "object_index": v.object_index} for v in e.violations]})
        except MissingVariant as e:
            self._error(409, str(e))
        except (MamlError, AdError, ValueError, KeyError) as e:
            self._error(400, f"{type(e).__name__}: {e}")
        else:
            if not handled:
                self._error(404, f"no route for {method} {url.path}")

    def _route(self, method: str, path: str, query: dict) -> bool:
        if path.startswith("/studio"):
            return method == "GET" and self._static(path)
        m = re.fullmatch(r"/v1/(.*)", path)
        if not m:
            return False
        tail = m.group(1)
        route = (method, tail)
        if route == ("GET", "health"):
            self._send_json(200, {"status": "ok"})
        elif route == ("POST", "users"):
            self._post_user()
        elif route == ("POST", "pages"):
            self._post_page(query)
        elif method == "GET" and re.fullmatch(r"pages/[^/]+", tail):
            self._get_page(tail.split("/", 1)[1], query)
        elif route == ("GET", "communities"):
            self._get_communities()
        elif route == ("POST", "communities"):
            self._post_community()
        elif method == "POST" and re.fullmatch(r"communities/[^/]+/members", tail):
            self._post_member(tail.split("/")[1])
        elif method == "GET" and re.fullmatch(r"communities/[^/]+/feed", tail):
            self._get_feed(tail.split("/")[1], query)
        elif route == ("POST", "ads"):
            self._post_ad()
        elif method == "POST" and re.fullmatch(r"ads/[^/]+/quote", tail):
            self._post_quote(tail.split("/")[1])
        elif method == "GET" and re.fullmatch(r"media/[^/]+", tail):
            self._get_media(tail.split("/", 1)[1], query)
        elif route == ("POST", "media"):
            self._post_media(query)
        elif route == ("POST", "metrics"):
            self._post_metrics()
        elif route == ("POST", "hittest"):
            self._post_hittest()
        else:
            return False
        return True

    # -- handlers ---------------------------------------------------------------

    def _post_user(self):
        body = self._json_body()
        location = body.get("location") or {}
        fid = body.get("preferred_fidelity")
        user = self.service.register_user(
            language=body.get("language", "en"),
            location=GeoPoint(float(location.get("lat", 0.0)),
                              float(location.get("lon", 0.0))),
            interest_tags=frozenset(body.get("interest_tags", [])),
            preferred_fidelity=Fidelity(fid) if fid else None,
        )
        self._send_json(201, {"user_id": user.user_id, "token": user.token})

    def _post_page(self, query: dict):
        user = self.service.require_user(self._token())
        document = self._body().decode("utf-8")
        page = self.service.publish_page(user, document,
                                         community_id=query.get("community_id"))
        self._send_json(201, {"page_id": page.page_id, "version": page.version})

    def _get_page(self, page_id: str, query: dict):
        user = self._user()
        hint = None
        if "rtt_ms" in query or "bandwidth_kbps" in query:
            hint = {}
            if "rtt_ms" in query:
                hint["rtt_ms"] = float(query["rtt_ms"])
            if "bandwidth_kbps" in query:
                hint["bandwidth_kbps"] = float(query["bandwidth_kbps"])
        payload, record = self.service.serve_page(
            page_id, user, fidelity_param=query.get("fidelity"),
            network_hint=hint)
        self._send(200, payload, MAML_CONTENT_TYPE, headers={
            "X-Page-Size": str(record.page_size),
            "X-Fidelity": record.fidelity.value,
            "X-Metrics-Token": record.token,
        })

    def _get_communities(self):
        communities = self.service.list_communities(self._user())
        self._send_json(200, {"communities": [c.to_json() for c in communities]})

    def _post_community(self):
        user = self.service.require_user(self._token())
        body = self._json_body()
        community = self.service.create_community(
            user, name=body["name"], description=body.get("description", ""),
            topics=frozenset(body.get("topics", [])),
            visibility=body.get("visibility", "public"))
        self._send_json(201, {"community_id": community.community_id})

    def _post_member(self, community_id: str):
        user = self.service.require_user(self._token())
        body = self._json_body()
        community = self.service.join_community(user, community_id,
                                                member_id=body.get("user_id"))
        self._send_json(200, {"community_id": community.community_id,
                              "members": sorted(community.members)})

    def _get_feed(self, community_id: str, query: dict):
        alpha = float(query["alpha"]) if "alpha" in query else None
        items = self.service.community_feed(community_id, self._user(), alpha)
        self._send_json(200, {"items": [i.to_json() for i in items]})

    def _post_ad(self):
        user = self.service.require_user(self._token())
        body = self._json_body()
        creatives = body.get("creatives") or {}
        geo = body.get("geo_target")
        campaign = AdCampaign(
            ad_id=body.get("ad_id") or f"ad-{user.user_id}-{abs(hash(json.dumps(body, sort_keys=True))) % 10**8:08d}",
            advertiser_id=user.user_id,
            creatives=Creatives(video_url=creatives.get("video_url"),
                                image_url=creatives.get("image_url"),
                                text_body=creatives.get("text_body")),
            click_href=body.get("click_href", ""),
            home_community_id=body.get("home_community_id", ""),
            visibility=body.get("visibility", "local_only"),
            geo_target=None if not geo else GeoTarget(
                center=GeoPoint(float(geo["lat"]), float(geo["lon"])),
                radius_km=float(geo["radius_km"])),
            interest_tags=frozenset(t.lower() for t in body.get("interest_tags", [])),
            target_impressions=int(body.get("target_impressions", 1000)),
            window_start=parse_timestamp(body["window_start"])
                if "window_start" in body else _now(),
            window_end=parse_timestamp(body["window_end"])
                if "window_end" in body else _now() + timedelta(days=7),
        )
        ad_id = self.service.exchange.submit_campaign(campaign)
        self._send_json(201, {"ad_id": ad_id})

    def _post_quote(self, ad_id: str):
        quote = self.service.quote_campaign(ad_id)
        self._send_json(200, {
            "ad_id": ad_id,
            "base_component": str(quote.base_component),
            "infra_component": str(quote.infra_component),
            "weekly_charge": str(quote.weekly_charge),
            "quoted_at": quote.quoted_at.strftime("%Y-%m-%dT%H:%M:%SZ"),
        })

    def _get_media(self, media_id: str, query: dict):
        fidelity = Fidelity(query.get("fidelity", "high"))
        try:
            payload, content_type = self.service.store.media_bytes(media_id, fidelity)
        except FileNotFoundError:
            raise NotFound(f"media {media_id}") from None
        self._send(200, payload, content_type)

    def _post_media(self, query: dict):
        self.service.require_user(self._token())
        kind = query.get("kind", "image")
        data = self._body()
        if not data:
            raise ValueError("empty media upload")
        if kind == "image":
            entry = self.service.register_image(data, query.get("url"))
        elif kind == "video":
            poster = None
            poster_id = query.get("poster")
            if poster_id:
                poster, _ = self.service.store.media_bytes(poster_id, Fidelity.HIGH)
            if poster is None:
                raise ValueError("video upload requires poster=<media_id>")
            entry = self.service.register_video(data, poster, query.get("url"))
        else:
            raise ValueError(f"unknown media kind {kind!r}")
        self._send_json(201, {
            "media_id": entry.media_id,
            "urls": {f.value: entry.urls[f] for f in entry.urls},
            "sizes": {f.value: entry.sizes[f] for f in entry.sizes},
        })

    def _post_metrics(self):
        body = self._json_body()
        record = self.service.log_metrics(
            token=body["token"], plt_ms=int(body["plt_ms"]),
            network_type=body.get("network_type", "unknown"),
            device_model=body.get("device_model", "unknown"))
        self._send_json(200, {"merged": True, "page_id": record.page_id})

    def _post_hittest(self):
        body = self._json_body()
        document = body["document"]
        if isinstance(document, dict):
            document = json.dumps(document, ensure_ascii=False)
        page = parse_page(document)
        indices = [hit_test(page, float(x), float(y))
                   for x, y in body.get("points", [])]
        self._send_json(200, {"indices": indices})

    def _static(self, path: str) -> bool:
        root = self.service.config.studio_dir
        if root is None:
            self._error(404, "studio assets not configured")
            return True
        rel = path[len("/studio"):].lstrip("/") or "index.html"
        target = (Path(root) / rel).resolve()
        if not str(target).startswith(str(Path(root).resolve())) or not target.is_file():
            self._error(404, f"no asset {rel}")
            return True
        content_type = _STATIC_TYPES.get(target.suffix, "application/octet-stream")
        self._send(200, target.read_bytes(), content_type)
        return True


class EdgeServer:
    """Owns the HTTP server plus its service; shutdown flushes the log."""

    def __init__(self, service: EdgeService):
        self.service = service
        handler = type("BoundHandler", (EdgeRequestHandler,),
                       {"service": service})
        self.httpd = ThreadingHTTPServer(
            (service.config.listen_host, service.config.listen_port), handler)
        self._thread: threading.Thread | None = None

    @property
    def address(self) -> str:
        host, port = self.httpd.server_address[:2]
        return f"http://{host}:{port}"

    def start_background(self):
        self._thread = threading.Thread(target=self.httpd.serve_forever,
                                        daemon=True)
        self._thread.start()
        return self

    def serve_forever(self):
        try:
            self.httpd.serve_forever()
        finally:
            self.service.flush_logs()

    def shutdown(self):
        self.httpd.shutdown()
        self.httpd.server_close()
        if self._thread:
            self._thread.join(timeout=5)
        self.service.flush_logs()


def make_server(service: EdgeService) -> EdgeServer:
    return EdgeServer(service)
