"""The edge service: joins the page store, the fidelity policy and the ad
exchange on the request path, ranks community feeds, and keeps the
per-request metrics log."""

from __future__ import annotations

import json
import secrets
import threading
from collections import OrderedDict
from datetime import datetime, timezone
from typing import Optional

from ..adx import AdContext, AdExchange, ExchangeState, TargetReached, quote_price
from ..geo import haversine_km
from ..maml import (
    GeoPoint, MamlPage, Violation, format_timestamp, page_weight, parse_page,
    serialize_page, validate,
)
from ..policy import (
    Fidelity, FidelityProfile, assemble_page, count_ad_slots, select_fidelity,
)
from .config import EdgeConfig
from .models import (
    Community, ContentItem, Forbidden, NotFound, RequestLog,
    UnknownToken, UserProfile, ValidationFailed,
)
from .store import EdgeStore

PENDING_LOG_CAPACITY = 1024


def _now() -> datetime:
    return datetime.now(timezone.utc).replace(microsecond=0)


def rank_feed(items: list[ContentItem], user: UserProfile,
              alpha: float = 0.5) -> list[ContentItem]:
    """Order content by a proximity/popularity mixture.

    score = alpha * 1/(1+km) + (1-alpha) * views/max_views; ties break
    newest-first, then by content id. The result is a permutation of the
    input and deterministic.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha {alpha} outside [0, 1]")
    max_views = max((i.popularity for i in items), default=0)

    def score(item: ContentItem) -> float:
        proximity = 1.0 / (1.0 + haversine_km(user.location, item.location))
        popularity = item.popularity / max_views if max_views else 0.0
        return alpha * proximity + (1 - alpha) * popularity

    return sorted(items, key=lambda i: (-score(i), -i.created_at.timestamp(),
                                        i.content_id))


class EdgeService:
    def __init__(self, config: EdgeConfig):
        self.config = config
        self.store = EdgeStore(config.store_path)
        self.profile: FidelityProfile = config.profile
        self.exchange = AdExchange()
        for campaign in self.store.iter_campaigns():
            self.exchange.submit_campaign(campaign)
        self.exchange.on_change = self.store.put_campaign
        self._users_by_token: dict[str, str] = {
            u.token: u.user_id for u in self.store.iter_users()}
        self._media_index = self.store.media_index()
        self._pending_logs: OrderedDict[str, RequestLog] = OrderedDict()
        self._log_lock = threading.Lock()
        self._id_lock = threading.Lock()

    # -- users ---------------------------------------------------------------

    def register_user(self, language: str = "en",
                      location: GeoPoint = GeoPoint(0.0, 0.0),
                      interest_tags: frozenset[str] = frozenset(),
                      preferred_fidelity: Optional[Fidelity] = None) -> UserProfile:
        user = UserProfile(
            user_id="u-" + secrets.token_hex(6),
            token=secrets.token_hex(16),
            language=language, location=location,
            interest_tags=frozenset(t.lower() for t in interest_tags),
            preferred_fidelity=preferred_fidelity,
        )
        self.store.put_user(user)
        self._users_by_token[user.token] = user.user_id
        return user

    def user_by_token(self, token: Optional[str]) -> Optional[UserProfile]:
        if not token or token not in self._users_by_token:
            return None
        return self.store.get_user(self._users_by_token[token])

    def require_user(self, token: Optional[str]) -> UserProfile:
        user = self.user_by_token(token)
        if user is None:
            raise Forbidden("valid bearer token required")
        return user

    # -- communities -----------------------------------------------------------

    def create_community(self, owner: UserProfile, name: str,
                         description: str = "", topics: frozenset[str] = frozenset(),
                         visibility: str = "public") -> Community:
        community = Community(
            community_id="c-" + secrets.token_hex(6),
            name=name, owner_id=owner.user_id, description=description,
            topics=frozenset(t.lower() for t in topics), visibility=visibility,
        )
        self.store.put_community(community)
        self._join(owner, community)
        return community

    def list_communities(self, user: Optional[UserProfile]) -> list[Community]:
        user_id = user.user_id if user else None
        return [c for c in self.store.iter_communities()
                if c.visibility == "public" or c.is_member(user_id)]

    def join_community(self, user: UserProfile, community_id: str,
                       member_id: Optional[str] = None) -> Community:
        community = self.store.get_community(community_id)
        if community is None:
            raise NotFound(f"community {community_id}")
        target = member_id or user.user_id
        if target != user.user_id and user.user_id != community.owner_id:
            raise Forbidden("only the owner adds other members")
        if community.visibility == "private" and user.user_id != community.owner_id:
            raise Forbidden("private community: the owner must add members")
        member = self.store.get_user(target)
        if member is None:
            raise NotFound(f"user {target}")
        community.members.add(target)
        self.store.put_community(community)
        self._join(member, community)
        return community

    def _join(self, user: UserProfile, community: Community) -> None:
        if community.community_id not in user.communities:
            user.communities.append(community.community_id)
            self.store.put_user(user)

    def community_feed(self, community_id: str, user: Optional[UserProfile],
                       alpha: Optional[float] = None) -> list[ContentItem]:
        community = self.store.get_community(community_id)
        if community is None:
            raise NotFound(f"community {community_id}")
        if not community.readable_by(user.user_id if user else None):
            raise Forbidden(f"community {community_id} is private")
        items = [i for i in self.store.iter_content()
                 if i.community_id == community_id]
        ranking_user = user or UserProfile(user_id="anon", token="")
        return rank_feed(items, ranking_user,
                         self.config.feed_alpha if alpha is None else alpha)

    # -- publishing -----------------------------------------------------------

    def publish_page(self, author: UserProfile, document: str,
                     community_id: Optional[str] = None) -> MamlPage:
        """Validate and store a page; metadata gaps fill from the author."""
        try:
            raw = json.loads(document)
        except json.JSONDecodeError as e:
            raise ValidationFailed([_violation("syntax", str(e))]) from None
        if not isinstance(raw, dict):
            raise ValidationFailed([_violation("syntax", "document root must be an object")])
        meta = raw.get("page")
        if not isinstance(meta, dict):
            meta = {}
            raw["page"] = meta
        meta.setdefault("language", author.language)
        meta.setdefault("location", {"lat": author.location.lat,
                                     "lon": author.location.lon})
        meta["author_id"] = author.user_id
        meta.setdefault("title", "")
        raw.setdefault("objects", [])
        if community_id is None:
            community_id = meta.get("community_id")
        if community_id is not None:
            community = self.store.get_community(community_id)
            if community is None:
                raise NotFound(f"community {community_id}")
            if not community.is_member(author.user_id):
                raise Forbidden("publish requires membership")
            meta["community_id"] = community_id
        with self._id_lock:
            page_id = meta.get("page_id") or "pg-" + secrets.token_hex(6)
            meta["page_id"] = page_id
            previous = self.store.get_page(page_id)
            if previous is not None:
                if previous.author_id != author.user_id:
                    raise Forbidden("page belongs to another author")
                meta["version"] = previous.version + 1
                meta["created_at"] = format_timestamp(previous.created_at)
            else:
                meta.setdefault("created_at", format_timestamp(_now()))
            meta["updated_at"] = format_timestamp(_now())
            try:
                page = parse_page(json.dumps(raw, ensure_ascii=False))
            except ValueError as e:
                raise ValidationFailed([_violation("parse", str(e))]) from None
            violations = validate(page)
            if violations:  # parse_page already enforces, but stay defensive
                raise ValidationFailed(violations)
            self.store.put_page(page)
            if previous is None:
                item = ContentItem(
                    content_id="ct-" + page_id,
                    kind="page", page_id=page_id, author_id=author.user_id,
                    community_id=community_id, location=page.location,
                    language=page.language, created_at=page.created_at,
                )
                self.store.put_content(item)
                if community_id is not None:
                    community = self.store.get_community(community_id)
                    community.content_ids.append(item.content_id)
                    self.store.put_community(community)
        return page

    # -- the request path -------------------------------------------------------

    def serve_page(self, page_id: str, user: Optional[UserProfile],
                   fidelity_param: Optional[str] = None,
                   network_hint: Optional[dict] = None,
                   now: Optional[datetime] = None) -> tuple[bytes, RequestLog]:
        """Assemble and account one page request; exactly one log record."""
        page = self.store.get_page(page_id)
        if page is None:
            raise NotFound(f"page {page_id}")
        if page.community_id is not None:
            community = self.store.get_community(page.community_id)
            if community is not None and not community.readable_by(
                    user.user_id if user else None):
                raise Forbidden(f"page {page_id} belongs to a private community")
        fidelity = select_fidelity(
            Fidelity(fidelity_param) if fidelity_param else
            (user.preferred_fidelity if user else None),
            network_hint)
        now = now or _now()
        slots = count_ad_slots(page)
        ads = []
        if slots:
            ctx = AdContext(
                location=user.location if user else GeoPoint(0.0, 0.0),
                community_id=page.community_id or "",
                interest_tags=user.interest_tags if user else frozenset(),
                fidelity=fidelity, now=now)
            ads = self.exchange.select_ads(ctx, slots)
        assembled = assemble_page(page, fidelity, ads, self._media_index,
                                  self.profile)
        for campaign in ads:
            try:
                self.exchange.record_impression(campaign.ad_id)
            except TargetReached:
                pass  # lost the race to the last impression; the ad still shows
        payload = serialize_page(assembled).encode("utf-8")
        size = page_weight(assembled, self._media_index.sizes_for(assembled))
        record = RequestLog(
            timestamp=now, page_id=page_id, fidelity=fidelity,
            page_size=size, token=secrets.token_hex(8),
            geo_lat=user.location.lat if user else 0.0,
            geo_lon=user.location.lon if user else 0.0,
        )
        self._remember(record)
        item = self.store.get_content("ct-" + page_id)
        if item is not None:
            item.popularity += 1
            self.store.put_content(item)
        return payload, record

    # -- metrics ----------------------------------------------------------------

    def _remember(self, record: RequestLog) -> None:
        with self._log_lock:
            self._pending_logs[record.token] = record
            while len(self._pending_logs) > PENDING_LOG_CAPACITY:
                _, evicted = self._pending_logs.popitem(last=False)
                self.store.append_log(evicted.to_json())

    def log_metrics(self, token: str, plt_ms: int,
                    network_type: str = "unknown",
                    device_model: str = "unknown") -> RequestLog:
        """Merge the client-side load time into the pending server record."""
        with self._log_lock:
            record = self._pending_logs.pop(token, None)
            if record is None:
                raise UnknownToken(token)
            record.plt_ms = int(plt_ms)
            record.network_type = network_type
            record.device_model = device_model
            self.store.append_log(record.to_json())
        return record

    def flush_logs(self) -> int:
        """Write every pending record; called on shutdown and by tests."""
        with self._log_lock:
            count = len(self._pending_logs)
            for record in self._pending_logs.values():
                self.store.append_log(record.to_json())
            self._pending_logs.clear()
        return count

    def read_logs(self) -> list[dict]:
        """Everything flushed plus the still-pending records, oldest first."""
        with self._log_lock:
            pending = [r.to_json() for r in self._pending_logs.values()]
        return self.store.read_logs() + pending

    # -- media & ads ---------------------------------------------------------------

    def register_image(self, data: bytes, original_url: Optional[str] = None):
        entry = self.store.add_image(data, self.profile, original_url)
        self._refresh_media_index()
        return entry

    def register_video(self, data: bytes, poster: bytes,
                       original_url: Optional[str] = None):
        entry = self.store.add_video(data, poster, self.profile, original_url)
        self._refresh_media_index()
        return entry

    def _refresh_media_index(self) -> None:
        self._media_index = self.store.media_index()

    @property
    def media_index(self):
        return self._media_index

    def quote_campaign(self, ad_id: str, now: Optional[datetime] = None):
        campaign = self.exchange.get(ad_id)
        now = now or _now()
        count = max(1, self.exchange.active_advertiser_count(now))
        state = ExchangeState(weekly_infra_cost=self.config.weekly_infra_cost,
                              active_advertiser_count=count)
        return quote_price(campaign, state, self.config.base_cpi, now=now)


def _violation(rule: str, message: str) -> Violation:
    return Violation(rule=rule, field="document", message=message)
