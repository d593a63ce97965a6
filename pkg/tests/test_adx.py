import random
import threading
from datetime import datetime, timedelta, timezone
from decimal import Decimal

import pytest

from gaius.adx import (
    AdCampaign, AdContext, AdExchange, Creatives, ExchangeState, GeoTarget,
    InvalidWindow, NoCreative, TargetReached, UnknownAd, eligible, quote_price,
)
from gaius.geo import haversine_km
from gaius.maml import GeoPoint
from gaius.policy import AD_FORMAT_BY_FIDELITY, AdFormat, Fidelity

NOW = datetime(2020, 3, 1, 12, 0, tzinfo=timezone.utc)
BLR = GeoPoint(12.9716, 77.5946)


def campaign(ad_id="a1", **kw):
    defaults = dict(
        advertiser_id="adv1",
        creatives=Creatives(video_url="v.mp4", image_url="i.jpg",
                            text_body="buy local"),
        click_href="https://shop.example/",
        home_community_id="c1",
        window_start=NOW - timedelta(days=1),
        window_end=NOW + timedelta(days=6),
    )
    defaults.update(kw)
    return AdCampaign(ad_id=ad_id, **defaults)


def ctx(**kw):
    defaults = dict(location=BLR, community_id="c1",
                    interest_tags=frozenset({"food", "sports"}),
                    fidelity=Fidelity.MEDIUM, now=NOW)
    defaults.update(kw)
    return AdContext(**defaults)


class TestSubmit:
    def test_text_only_campaign_accepted(self):
        ex = AdExchange()
        c = campaign(creatives=Creatives(text_body="text only"))
        assert ex.submit_campaign(c) == "a1"
        # serves only where the slot format is text
        assert eligible(c, ctx(fidelity=Fidelity.LOW))
        assert not eligible(c, ctx(fidelity=Fidelity.MEDIUM))
        assert not eligible(c, ctx(fidelity=Fidelity.HIGH))

    def test_no_creative_rejected(self):
        with pytest.raises(NoCreative):
            AdExchange().submit_campaign(campaign(creatives=Creatives()))

    def test_invalid_window_rejected(self):
        with pytest.raises(InvalidWindow):
            AdExchange().submit_campaign(
                campaign(window_start=NOW, window_end=NOW))

    def test_resubmission_replaces_but_keeps_counter(self):
        ex = AdExchange()
        ex.submit_campaign(campaign(target_impressions=10))
        for _ in range(4):
            ex.record_impression("a1")
        ex.submit_campaign(campaign(target_impressions=99,
                                    click_href="https://new.example/"))
        stored = ex.get("a1")
        assert stored.served_impressions == 4
        assert stored.target_impressions == 99
        assert stored.click_href == "https://new.example/"


class TestEligibility:
    def test_window(self):
        c = campaign(window_start=NOW + timedelta(days=1),
                     window_end=NOW + timedelta(days=2))
        assert not eligible(c, ctx())

    def test_cap(self):
        c = campaign(target_impressions=5, served_impressions=5)
        assert not eligible(c, ctx())

    def test_community_visibility(self):
        local = campaign(visibility="local_only", home_community_id="c9")
        assert not eligible(local, ctx(community_id="c1"))
        assert eligible(local, ctx(community_id="c9"))
        glob = campaign(visibility="global", home_community_id="c9")
        assert eligible(glob, ctx(community_id="c1"))

    def test_geo_radius(self):
        delhi = GeoPoint(28.6139, 77.2090)
        c = campaign(geo_target=GeoTarget(center=BLR, radius_km=25))
        assert eligible(c, ctx(location=BLR))
        assert not eligible(c, ctx(location=delhi))
        assert haversine_km(BLR, delhi) > 1000


class TestSelect:
    def test_empty_inventory(self):
        assert AdExchange().select_ads(ctx(), 3) == []

    def test_single_eligible(self):
        ex = AdExchange()
        ex.submit_campaign(campaign())
        got = ex.select_ads(ctx(), 3)
        assert [c.ad_id for c in got] == ["a1"]

    def test_ranking_by_overlap_then_served_then_id(self):
        ex = AdExchange()
        ex.submit_campaign(campaign("b", interest_tags=frozenset({"food"})))
        ex.submit_campaign(campaign(
            "a", interest_tags=frozenset({"food", "sports"})))
        ex.submit_campaign(campaign("c", interest_tags=frozenset({"food"})))
        ex.record_impression("c")
        got = [c.ad_id for c in ex.select_ads(ctx(), 3)]
        assert got == ["a", "b", "c"]

    def test_matches_bruteforce_oracle(self):
        rng = random.Random(42)
        for trial in range(40):
            ex = AdExchange()
            inventory = [random_campaign(rng, i) for i in range(rng.randint(0, 10))]
            for c in inventory:
                ex.submit_campaign(c)
            context = random_context(rng)
            k = rng.randint(0, 5)
            got = [c.ad_id for c in ex.select_ads(context, k)]
            assert got == oracle_select(inventory, context, k), trial


class TestImpressions:
    def test_increment(self):
        ex = AdExchange()
        ex.submit_campaign(campaign())
        assert ex.record_impression("a1") == 1
        assert ex.record_impression("a1") == 2

    def test_unknown_ad(self):
        with pytest.raises(UnknownAd):
            AdExchange().record_impression("ghost")

    def test_cap_refused(self):
        ex = AdExchange()
        ex.submit_campaign(campaign(target_impressions=2))
        ex.record_impression("a1")
        ex.record_impression("a1")
        with pytest.raises(TargetReached):
            ex.record_impression("a1")
        assert ex.get("a1").served_impressions == 2

    def test_concurrent_increments_stop_exactly_at_target(self):
        ex = AdExchange()
        ex.submit_campaign(campaign(target_impressions=60))
        successes = []
        lock = threading.Lock()

        def worker():
            try:
                ex.record_impression("a1")
            except TargetReached:
                return
            with lock:
                successes.append(1)

        threads = [threading.Thread(target=worker) for _ in range(100)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert len(successes) == 60
        assert ex.get("a1").served_impressions == 60


class TestPricing:
    def test_single_advertiser_quote(self):
        q = quote_price(campaign(target_impressions=1000),
                        ExchangeState(Decimal("70"), 1), Decimal("0.01"))
        assert q.base_component == Decimal("10.00")
        assert q.infra_component == Decimal("70.00")
        assert q.weekly_charge == Decimal("80.00")

    def test_seven_advertisers_share_infra(self):
        q = quote_price(campaign(target_impressions=1000),
                        ExchangeState(Decimal("70"), 7), Decimal("0.01"))
        assert q.weekly_charge == Decimal("20.00")

    def test_infra_component_non_increasing(self):
        previous = None
        for n in range(1, 101):
            q = quote_price(campaign(), ExchangeState(Decimal("70"), n),
                            Decimal("0.01"))
            if previous is not None:
                assert q.infra_component <= previous
            previous = q.infra_component

    def test_charge_increases_with_impressions(self):
        state = ExchangeState(Decimal("70"), 3)
        charges = [quote_price(campaign(target_impressions=n), state,
                               Decimal("0.01")).weekly_charge
                   for n in (100, 1000, 5000)]
        assert charges[0] < charges[1] < charges[2]


# ---------------------------------------------------------------------------
# independent brute-force oracle (kept deliberately dumb)

def oracle_select(inventory, context, k):
    fmt = AD_FORMAT_BY_FIDELITY[context.fidelity]
    survivors = []
    for c in inventory:
        if not (c.window_start <= context.now < c.window_end):
            continue
        if c.served_impressions >= c.target_impressions:
            continue
        creative = {AdFormat.VIDEO: c.creatives.video_url,
                    AdFormat.IMAGE: c.creatives.image_url,
                    AdFormat.TEXT: c.creatives.text_body}[fmt]
        if not creative:
            continue
        if c.visibility != "global" and c.home_community_id != context.community_id:
            continue
        if c.geo_target is not None and \
                haversine_km(context.location, c.geo_target.center) > c.geo_target.radius_km:
            continue
        survivors.append(c)
    survivors = sorted(
        survivors,
        key=lambda c: (-len(c.interest_tags & context.interest_tags),
                       c.served_impressions, c.ad_id))
    return [c.ad_id for c in survivors[:k]]


TAGS = ["food", "sports", "music", "school", "market", "phones"]
CITIES = [BLR, GeoPoint(13.0827, 80.2707), GeoPoint(19.0760, 72.8777),
          GeoPoint(-1.2921, 36.8219), GeoPoint(23.8103, 90.4125)]


def random_campaign(rng, i):
    creatives = Creatives(
        video_url="v.mp4" if rng.random() < 0.6 else None,
        image_url="i.jpg" if rng.random() < 0.6 else None,
        text_body="t" if rng.random() < 0.6 else None)
    if not creatives.any():
        creatives = Creatives(text_body="fallback")
    start = NOW - timedelta(days=rng.randint(-2, 5))
    target = rng.randint(1, 50)
    return AdCampaign(
        ad_id=f"ad{i:02d}",
        advertiser_id=f"adv{rng.randint(0, 3)}",
        creatives=creatives,
        click_href="https://x.example/",
        home_community_id=rng.choice(["c1", "c2", "c3"]),
        visibility=rng.choice(["local_only", "global"]),
        geo_target=None if rng.random() < 0.5 else GeoTarget(
            center=rng.choice(CITIES), radius_km=rng.choice([5, 50, 500, 3000])),
        interest_tags=frozenset(rng.sample(TAGS, rng.randint(0, 4))),
        target_impressions=target,
        window_start=start,
        window_end=start + timedelta(days=rng.randint(1, 14)),
        served_impressions=rng.randint(0, target),
    )


def random_context(rng):
    return AdContext(
        location=rng.choice(CITIES),
        community_id=rng.choice(["c1", "c2", "c3"]),
        interest_tags=frozenset(rng.sample(TAGS, rng.randint(0, 3))),
        fidelity=rng.choice(list(Fidelity)),
        now=NOW,
    )
