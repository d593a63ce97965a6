import json
from datetime import datetime, timezone
from pathlib import Path

import pytest

from gaius.adx import AdCampaign, Creatives
from gaius.edge import (
    EdgeConfig, EdgeService, Forbidden, NotFound, UnknownToken,
    ValidationFailed, rank_feed,
)
from gaius.edge.models import ContentItem, UserProfile
from gaius.maml import GeoPoint, parse_page
from gaius.policy import Fidelity


@pytest.fixture
def service(tmp_path):
    return EdgeService(EdgeConfig(store_path=tmp_path / "store"))


def simple_doc(**meta):
    page_meta = {"title": "note"}
    page_meta.update(meta)
    return json.dumps({"page": page_meta, "objects": [
        {"type": "txt", "txt": "hello", "x": 0, "y": 0, "w": 600, "h": 40,
         "font": 20, "font-type": "Arial", "color": "#112233"}]})


class TestUsers:
    def test_register_and_lookup(self, service):
        user = service.register_user(language="sw",
                                     location=GeoPoint(-1.29, 36.82))
        assert service.user_by_token(user.token).user_id == user.user_id
        assert service.user_by_token("bogus") is None

    def test_require_user(self, service):
        with pytest.raises(Forbidden):
            service.require_user(None)


class TestPublish:
    def test_publish_fills_profile_defaults(self, service):
        author = service.register_user(language="bn-BD",
                                       location=GeoPoint(23.8, 90.4))
        page = service.publish_page(author, simple_doc())
        assert page.language == "bn-BD"
        assert page.location == GeoPoint(23.8, 90.4)
        assert page.author_id == author.user_id
        stored = service.store.get_page(page.page_id)
        assert stored == page

    def test_publish_roundtrips_objects(self, service):
        author = service.register_user()
        page = service.publish_page(author, simple_doc())
        served, _ = service.serve_page(page.page_id, author, "high")
        reparsed = parse_page(served.decode("utf-8"))
        assert reparsed.objects == page.objects

    def test_validation_failure_lists_rule(self, service):
        author = service.register_user()
        doc = simple_doc()
        bad = doc.replace("#112233", "#XXYYZZ")
        with pytest.raises(ValidationFailed):
            service.publish_page(author, bad)

    def test_version_increments_on_republish(self, service):
        author = service.register_user()
        first = service.publish_page(author, simple_doc())
        doc = simple_doc(page_id=first.page_id)
        second = service.publish_page(author, doc)
        assert second.version == first.version + 1
        assert second.created_at == first.created_at

    def test_foreign_page_id_rejected(self, service):
        alice = service.register_user()
        bob = service.register_user()
        page = service.publish_page(alice, simple_doc())
        with pytest.raises(Forbidden):
            service.publish_page(bob, simple_doc(page_id=page.page_id))

    def test_unknown_community(self, service):
        author = service.register_user()
        with pytest.raises(NotFound):
            service.publish_page(author, simple_doc(), community_id="ghost")


class TestServe:
    def test_unknown_page_leaves_no_log(self, service):
        user = service.register_user()
        with pytest.raises(NotFound):
            service.serve_page("ghost", user)
        assert service.read_logs() == []

    def test_each_serve_appends_one_record(self, service):
        author = service.register_user()
        page = service.publish_page(author, simple_doc())
        service.serve_page(page.page_id, author, "low")
        service.serve_page(page.page_id, author, "high")
        logs = service.read_logs()
        assert len(logs) == 2
        assert {r["fidelity"] for r in logs} == {"low", "high"}
        assert all(r["page_size"] > 0 for r in logs)

    def test_fidelity_resolution_order(self, service):
        author = service.register_user(preferred_fidelity=Fidelity.LOW)
        page = service.publish_page(author, simple_doc())
        _, record = service.serve_page(page.page_id, author, None)
        assert record.fidelity is Fidelity.LOW
        _, record = service.serve_page(page.page_id, author, "high")
        assert record.fidelity is Fidelity.HIGH

    def test_serve_is_deterministic(self, service):
        author = service.register_user()
        page = service.publish_page(author, simple_doc())
        a, _ = service.serve_page(page.page_id, author, "medium")
        b, _ = service.serve_page(page.page_id, author, "medium")
        assert a == b

    def test_popularity_counted(self, service):
        author = service.register_user()
        page = service.publish_page(author, simple_doc())
        for _ in range(3):
            service.serve_page(page.page_id, author, "low")
        item = service.store.get_content("ct-" + page.page_id)
        assert item.popularity == 3


class TestNewsFixtureFidelity:
    def test_low_weight_at_most_quarter_of_high(self, service, corpus_dir):
        doc = (corpus_dir / "news" / "page.maml").read_text(encoding="utf-8")
        page = parse_page(doc)
        from gaius.convert import load_snapshot
        snap = load_snapshot(corpus_dir / "news")
        for url in {o.url for o in page.objects if hasattr(o, "url")}:
            service.register_image(snap.resource_bytes(url), original_url=url)
        author = service.register_user()
        raw = json.loads(doc)
        raw["page"].pop("author_id", None)
        published = service.publish_page(author, json.dumps(raw))
        _, low = service.serve_page(published.page_id, author, "low")
        _, high = service.serve_page(published.page_id, author, "high")
        assert low.page_size <= 0.25 * high.page_size
        assert low.page_size < high.page_size


class TestPrivacyMatrix:
    def test_private_isolation(self, service):
        owner = service.register_user()
        member = service.register_user()
        outsider = service.register_user()
        private = service.create_community(owner, "club", visibility="private")
        public = service.create_community(owner, "plaza", visibility="public")
        service.join_community(owner, private.community_id,
                               member_id=member.user_id)
        pages = {}
        for community in (private, public):
            page = service.publish_page(
                owner, simple_doc(), community_id=community.community_id)
            pages[community.community_id] = page.page_id

        readers = {"owner": owner, "member": member, "outsider": outsider,
                   "anonymous": None}
        for label, reader in readers.items():
            # public pages serve to everyone
            payload, _ = service.serve_page(pages[public.community_id], reader)
            assert payload, label
        for label in ("owner", "member"):
            payload, _ = service.serve_page(pages[private.community_id],
                                            readers[label])
            assert payload, label
        for label in ("outsider", "anonymous"):
            with pytest.raises(Forbidden):
                service.serve_page(pages[private.community_id], readers[label])

    def test_private_feed_hidden(self, service):
        owner = service.register_user()
        outsider = service.register_user()
        private = service.create_community(owner, "club", visibility="private")
        with pytest.raises(Forbidden):
            service.community_feed(private.community_id, outsider)
        assert private.community_id not in [
            c.community_id for c in service.list_communities(outsider)]


class TestRankFeed:
    def make_item(self, cid, lon, views, day=1):
        return ContentItem(
            content_id=cid, kind="post", author_id="a", community_id="c",
            location=GeoPoint(0.0, lon), language="en",
            created_at=datetime(2020, 1, day, tzinfo=timezone.utc),
            popularity=views)

    def user_at_origin(self):
        return UserProfile(user_id="u", token="t", location=GeoPoint(0.0, 0.0))

    def test_alpha_one_is_proximity_only(self):
        near = self.make_item("near", lon=0.0, views=0)
        far = self.make_item("far", lon=1.0, views=10_000)
        out = rank_feed([far, near], self.user_at_origin(), alpha=1.0)
        assert [i.content_id for i in out] == ["near", "far"]

    def test_alpha_zero_is_popularity_only(self):
        hot = self.make_item("hot", lon=5.0, views=10)
        cold = self.make_item("cold", lon=0.0, views=5)
        out = rank_feed([cold, hot], self.user_at_origin(), alpha=0.0)
        assert [i.content_id for i in out] == ["hot", "cold"]

    def test_eight_item_hand_computed_oracle(self):
        # user at the equator origin; item distance = 111.19493 km per deg lon
        # scores at alpha=0.5 (prox = 1/(1+km), pop = views/100):
        #   A lon 0.0  views 0   -> 0.5*1.00000 + 0       = 0.50000
        #   B lon 0.1  views 100 -> 0.5*0.08251 + 0.50    = 0.54126
        #   C lon 0.5  views 80  -> 0.5*0.01766 + 0.40    = 0.40883
        #   D lon 1.0  views 90  -> 0.5*0.00891 + 0.45    = 0.45446
        #   E lon 2.0  views 20  -> 0.5*0.00448 + 0.10    = 0.10224
        #   F lon 5.0  views 60  -> 0.5*0.00180 + 0.30    = 0.30090
        #   G lon 10.0 views 100 -> 0.5*0.00090 + 0.50    = 0.50045
        #   H lon 20.0 views 10  -> 0.5*0.00045 + 0.05    = 0.05022
        spec = [("A", 0.0, 0), ("B", 0.1, 100), ("C", 0.5, 80),
                ("D", 1.0, 90), ("E", 2.0, 20), ("F", 5.0, 60),
                ("G", 10.0, 100), ("H", 20.0, 10)]
        items = [self.make_item(cid, lon, views) for cid, lon, views in spec]
        out = rank_feed(items, self.user_at_origin(), alpha=0.5)
        assert [i.content_id for i in out] == \
            ["B", "G", "A", "D", "C", "F", "E", "H"]

    def test_ties_break_newest_then_id(self):
        a = self.make_item("a", lon=1.0, views=5, day=1)
        b = self.make_item("b", lon=1.0, views=5, day=2)
        out = rank_feed([a, b], self.user_at_origin(), alpha=0.5)
        assert [i.content_id for i in out] == ["b", "a"]

    def test_output_is_permutation(self):
        items = [self.make_item(f"i{k}", lon=float(k), views=k * 3)
                 for k in range(12)]
        out = rank_feed(items, self.user_at_origin(), alpha=0.3)
        assert sorted(i.content_id for i in out) == \
            sorted(i.content_id for i in items)


class TestMetrics:
    def test_merge_and_duplicate_rejection(self, service):
        author = service.register_user()
        page = service.publish_page(author, simple_doc())
        _, record = service.serve_page(page.page_id, author, "low")
        merged = service.log_metrics(record.token, 1600,
                                     network_type="3g", device_model="S4")
        assert merged.plt_ms == 1600
        with pytest.raises(UnknownToken):
            service.log_metrics(record.token, 999)
        logs = service.read_logs()
        assert len(logs) == 1
        assert logs[0]["plt_ms"] == 1600 and logs[0]["network_type"] == "3g"

    def test_unknown_token(self, service):
        with pytest.raises(UnknownToken):
            service.log_metrics("nope", 100)

    def test_flush_writes_pending_once(self, service):
        author = service.register_user()
        page = service.publish_page(author, simple_doc())
        service.serve_page(page.page_id, author, "low")
        assert service.flush_logs() == 1
        assert service.flush_logs() == 0
        assert len(service.store.read_logs()) == 1


class TestAdsOnServe:
    def test_impressions_recorded_for_served_ads(self, service, tmp_path):
        author = service.register_user(interest_tags=frozenset({"food"}))
        community = service.create_community(author, "market")
        slot_doc = json.dumps({"page": {"title": "front"}, "objects": [
            {"type": "rect", "x": 0, "y": 0, "w": 1080, "h": 200,
             "color": "#00adfe"}]})
        page = service.publish_page(author, slot_doc,
                                    community_id=community.community_id)
        service.exchange.submit_campaign(AdCampaign(
            ad_id="adX", advertiser_id="adv",
            creatives=Creatives(text_body="fresh mangoes"),
            click_href="https://mangoes.example/",
            home_community_id=community.community_id,
            interest_tags=frozenset({"food"})))
        payload, record = service.serve_page(page.page_id, author, "low")
        assert record.fidelity is Fidelity.LOW
        served = parse_page(payload.decode("utf-8"))
        assert served.objects[0].txt == "fresh mangoes"
        assert service.exchange.get("adX").served_impressions == 1
        # campaign state persisted through the store
        reloaded = EdgeService(EdgeConfig(store_path=service.config.store_path))
        assert reloaded.exchange.get("adX").served_impressions == 1
