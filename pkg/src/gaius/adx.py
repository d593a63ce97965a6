"""Local ad marketplace: campaign intake, eligibility + relevance ranking,
capped impression accounting, and the infra-amortized weekly pricing."""

from __future__ import annotations

import threading
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from decimal import Decimal, ROUND_HALF_UP
from typing import Callable, Optional

from .geo import haversine_km
from .maml import GeoPoint
from .policy import AdFormat, Fidelity, AD_FORMAT_BY_FIDELITY

CENTS = Decimal("0.01")


class AdError(ValueError):
    pass


class NoCreative(AdError):
    pass


class InvalidWindow(AdError):
    pass


class UnknownAd(AdError):
    pass


class TargetReached(AdError):
    pass


@dataclass(frozen=True)
class Creatives:
    video_url: Optional[str] = None
    image_url: Optional[str] = None
    text_body: Optional[str] = None

    def for_format(self, fmt: AdFormat) -> Optional[str]:
        return {AdFormat.VIDEO: self.video_url,
                AdFormat.IMAGE: self.image_url,
                AdFormat.TEXT: self.text_body}[fmt]

    def any(self) -> bool:
        return any((self.video_url, self.image_url, self.text_body))


@dataclass(frozen=True)
class GeoTarget:
    center: GeoPoint
    radius_km: float


@dataclass
class AdCampaign:
    ad_id: str
    advertiser_id: str
    creatives: Creatives
    click_href: str
    home_community_id: str
    visibility: str = "local_only"  # or "global"
    geo_target: Optional[GeoTarget] = None
    interest_tags: frozenset[str] = frozenset()
    target_impressions: int = 1000
    window_start: datetime = datetime(2020, 1, 1, tzinfo=timezone.utc)
    window_end: datetime = datetime(2030, 1, 1, tzinfo=timezone.utc)
    served_impressions: int = 0

    def check(self) -> None:
        if not self.creatives.any():
            raise NoCreative(f"{self.ad_id}: campaign has no creative")
        if self.window_end <= self.window_start:
            raise InvalidWindow(f"{self.ad_id}: window end precedes start")
        if self.visibility not in ("local_only", "global"):
            raise AdError(f"{self.ad_id}: bad visibility {self.visibility!r}")
        if self.geo_target is not None and self.geo_target.radius_km <= 0:
            raise AdError(f"{self.ad_id}: geo radius must be positive")
        if self.target_impressions <= 0:
            raise AdError(f"{self.ad_id}: target impressions must be positive")
        if not self.click_href:
            raise AdError(f"{self.ad_id}: click href required")


@dataclass(frozen=True)
class AdContext:
    location: GeoPoint
    community_id: str
    interest_tags: frozenset[str]
    fidelity: Fidelity
    now: datetime


@dataclass(frozen=True)
class PricingQuote:
    base_component: Decimal
    infra_component: Decimal
    weekly_charge: Decimal
    quoted_at: datetime

    def __post_init__(self):
        assert self.base_component >= 0 and self.infra_component >= 0
        assert self.weekly_charge == self.base_component + self.infra_component


def eligible(c: AdCampaign, ctx: AdContext) -> bool:
    """Every clause must hold: window, cap, creative format, visibility, geo."""
    if not (c.window_start <= ctx.now < c.window_end):
        return False
    if c.served_impressions >= c.target_impressions:
        return False
    fmt = AD_FORMAT_BY_FIDELITY[ctx.fidelity]
    if not c.creatives.for_format(fmt):
        return False
    if c.visibility != "global" and c.home_community_id != ctx.community_id:
        return False
    if c.geo_target is not None:
        if haversine_km(ctx.location, c.geo_target.center) > c.geo_target.radius_km:
            return False
    return True


def relevance(c: AdCampaign, ctx: AdContext) -> int:
    return len(c.interest_tags & ctx.interest_tags)


@dataclass(frozen=True)
class ExchangeState:
    weekly_infra_cost: Decimal
    active_advertiser_count: int


def quote_price(c: AdCampaign, state: ExchangeState,
                base_cpi: Decimal,
                now: Optional[datetime] = None) -> PricingQuote:
    """Weekly charge = impressions x base CPI + infra cost amortized over
    every active advertiser, so ads get cheaper as the exchange grows."""
    if state.active_advertiser_count < 1:
        raise AdError("advertiser count must include the quoted advertiser")
    base = (Decimal(c.target_impressions) * Decimal(base_cpi)).quantize(
        CENTS, rounding=ROUND_HALF_UP)
    infra = (Decimal(state.weekly_infra_cost)
             / Decimal(state.active_advertiser_count)).quantize(
        CENTS, rounding=ROUND_HALF_UP)
    return PricingQuote(
        base_component=base,
        infra_component=infra,
        weekly_charge=base + infra,
        quoted_at=now or datetime.now(timezone.utc),
    )


class AdExchange:
    """Thread-safe inventory. Reads take a snapshot; impression counting is
    an atomic compare-and-increment that refuses to pass the weekly target."""

    def __init__(self, on_change: Optional[Callable[[AdCampaign], None]] = None):
        self._campaigns: dict[str, AdCampaign] = {}
        self._lock = threading.Lock()
        self.on_change = on_change

    def submit_campaign(self, c: AdCampaign) -> str:
        c.check()
        with self._lock:
            previous = self._campaigns.get(c.ad_id)
            if previous is not None:
                c = replace_served(c, previous.served_impressions)
            self._campaigns[c.ad_id] = c
            if self.on_change:
                self.on_change(c)
        return c.ad_id

    def get(self, ad_id: str) -> AdCampaign:
        with self._lock:
            if ad_id not in self._campaigns:
                raise UnknownAd(ad_id)
            return copy_campaign(self._campaigns[ad_id])

    def campaigns(self) -> list[AdCampaign]:
        with self._lock:
            return [copy_campaign(c) for c in self._campaigns.values()]

    def select_ads(self, ctx: AdContext, k: int) -> list[AdCampaign]:
        """Top-k eligible campaigns: most tag overlap first, then the least
        served, then lexicographic ad id."""
        if k <= 0:
            return []
        snapshot = self.campaigns()
        ranked = [c for c in snapshot if eligible(c, ctx)]
        ranked.sort(key=lambda c: (-relevance(c, ctx), c.served_impressions,
                                   c.ad_id))
        return ranked[:k]

    def record_impression(self, ad_id: str) -> int:
        with self._lock:
            c = self._campaigns.get(ad_id)
            if c is None:
                raise UnknownAd(ad_id)
            if c.served_impressions >= c.target_impressions:
                raise TargetReached(
                    f"{ad_id} already served {c.served_impressions}")
            c.served_impressions += 1
            if self.on_change:
                self.on_change(c)
            return c.served_impressions

    def active_advertiser_count(self, now: datetime) -> int:
        with self._lock:
            return len({c.advertiser_id for c in self._campaigns.values()
                        if c.window_start <= now < c.window_end})


def copy_campaign(c: AdCampaign) -> AdCampaign:
    return replace(c)


def replace_served(c: AdCampaign, served: int) -> AdCampaign:
    return replace(c, served_impressions=served)
