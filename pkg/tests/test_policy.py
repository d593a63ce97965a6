import pytest
from PIL import Image as PilImage

from gaius.maml import GeoPoint, Image, MamlPage, Rect, Text, Video, page_weight
from gaius.adx import AdCampaign, Creatives
from gaius.policy import (
    AD_SLOT_COLOR, AdFormat, Fidelity, FidelityProfile, FidelityTier,
    MediaEntry, MediaIndex, MissingVariant, PolicyError, UnsupportedImageFormat,
    assemble_page, build_variant_set, count_ad_slots, select_fidelity,
    transcode_image,
)


from imagegen import photo_bytes

PHOTO = photo_bytes(540, 304)


class TestFidelity:
    def test_total_order(self):
        assert Fidelity.LOW < Fidelity.MEDIUM < Fidelity.HIGH
        assert Fidelity.HIGH >= Fidelity.MEDIUM

    def test_profile_defaults(self):
        p = FidelityProfile()
        assert p.tier(Fidelity.HIGH).image_scale == 1.0
        assert p.tier(Fidelity.MEDIUM).image_scale == 0.5
        assert p.tier(Fidelity.LOW).image_scale == 0.25
        assert p.ad_format(Fidelity.HIGH) is AdFormat.VIDEO
        assert p.ad_format(Fidelity.MEDIUM) is AdFormat.IMAGE
        assert p.ad_format(Fidelity.LOW) is AdFormat.TEXT
        assert not p.tier(Fidelity.LOW).video_allowed

    def test_profile_rejects_non_monotone_scales(self):
        with pytest.raises(PolicyError):
            FidelityProfile(tiers={
                Fidelity.HIGH: FidelityTier(0.5, 85, True),
                Fidelity.MEDIUM: FidelityTier(0.5, 60, True),
                Fidelity.LOW: FidelityTier(0.25, 35, False),
            })


class TestSelectFidelity:
    def test_preference_wins(self):
        assert select_fidelity(Fidelity.LOW,
                               {"bandwidth_kbps": 9000, "rtt_ms": 20}) is Fidelity.LOW

    def test_fast_network_is_high(self):
        assert select_fidelity(None, {"bandwidth_kbps": 5000, "rtt_ms": 50}) is Fidelity.HIGH

    def test_thresholds(self):
        assert select_fidelity(None, {"bandwidth_kbps": 200}) is Fidelity.LOW
        assert select_fidelity(None, {"rtt_ms": 900}) is Fidelity.LOW
        assert select_fidelity(None, {"bandwidth_kbps": 600}) is Fidelity.MEDIUM
        assert select_fidelity(None, {"rtt_ms": 400}) is Fidelity.MEDIUM

    def test_no_hint_defaults_medium(self):
        assert select_fidelity(None, None) is Fidelity.MEDIUM


class TestTranscode:
    def test_high_keeps_dimensions(self):
        v = transcode_image(PHOTO, Fidelity.HIGH, FidelityProfile())
        assert (v.width, v.height) == (540, 304)

    def test_medium_halves_round_half_up(self):
        data = photo_bytes(1080, 607)
        v = transcode_image(data, Fidelity.MEDIUM, FidelityProfile())
        assert (v.width, v.height) == (540, 304)

    def test_low_quarters(self):
        data = photo_bytes(1080, 607)
        v = transcode_image(data, Fidelity.LOW, FidelityProfile())
        assert (v.width, v.height) == (270, 152)

    def test_garbage_rejected(self):
        with pytest.raises(UnsupportedImageFormat):
            transcode_image(b"definitely not an image", Fidelity.HIGH,
                            FidelityProfile())

    def test_variant_bytes_ordered(self):
        for seed in range(4):
            vs = build_variant_set(f"m{seed}", photo_bytes(640, 480, seed),
                                   FidelityProfile())
            low = vs.variants[Fidelity.LOW].byte_size
            high = vs.variants[Fidelity.HIGH].byte_size
            assert low < high


def make_media_index(urls, identity_high=True):
    """Index mapping each url to per-fidelity variants with shrinking sizes."""
    index = MediaIndex()
    for i, url in enumerate(urls):
        base = 40_000 + i * 1000
        index.add(url, MediaEntry(
            media_id=f"m{i}", kind="image",
            urls={Fidelity.HIGH: url if identity_high else f"{url}?f=high",
                  Fidelity.MEDIUM: f"{url}?f=medium",
                  Fidelity.LOW: f"{url}?f=low"},
            sizes={Fidelity.HIGH: base, Fidelity.MEDIUM: base // 4,
                   Fidelity.LOW: base // 16},
        ))
    return index


def stored_page(objects):
    return MamlPage(page_id="stored", title="t", language="en",
                    location=GeoPoint(0, 0), author_id="a",
                    objects=tuple(objects))


def test_assemble_identity_at_high_with_no_ads():
    url = "https://cdn.example/hero.jpg"
    page = stored_page([Image(url=url, x=0, y=0, w=1080, h=600)])
    out = assemble_page(page, Fidelity.HIGH, [], make_media_index([url]),
                        FidelityProfile())
    assert out == page


def test_assemble_swaps_urls_per_fidelity():
    url = "https://cdn.example/hero.jpg"
    page = stored_page([Image(url=url, x=0, y=0, w=1080, h=600)])
    out = assemble_page(page, Fidelity.LOW, [], make_media_index([url]),
                        FidelityProfile())
    assert out.objects[0].url == url + "?f=low"


def test_assemble_passes_unregistered_urls_through():
    page = stored_page([Image(url="https://cdn.example/x.jpg", x=0, y=0,
                              w=10, h=10)])
    out = assemble_page(page, Fidelity.LOW, [], MediaIndex(), FidelityProfile())
    assert out.objects[0].url == "https://cdn.example/x.jpg"


def test_assemble_missing_variant_for_incomplete_entry():
    url = "https://cdn.example/x.jpg"
    page = stored_page([Image(url=url, x=0, y=0, w=10, h=10)])
    index = MediaIndex()
    index.add(url, MediaEntry(media_id="m", kind="image",
                              urls={Fidelity.HIGH: url},
                              sizes={Fidelity.HIGH: 10}))
    with pytest.raises(MissingVariant):
        assemble_page(page, Fidelity.LOW, [], index, FidelityProfile())


def test_video_degrades_to_poster_image_at_low():
    video_url = "https://cdn.example/clip.mp4"
    index = MediaIndex()
    index.add(video_url, MediaEntry(
        media_id="v0", kind="video",
        urls={Fidelity.HIGH: video_url, Fidelity.MEDIUM: video_url,
              Fidelity.LOW: "https://cdn.example/clip-poster.jpg?f=low"},
        sizes={Fidelity.HIGH: 900_000, Fidelity.MEDIUM: 900_000,
               Fidelity.LOW: 4_000}))
    page = stored_page([Video(url=video_url, x=0, y=0, w=626, h=352)])
    high = assemble_page(page, Fidelity.HIGH, [], index, FidelityProfile())
    low = assemble_page(page, Fidelity.LOW, [], index, FidelityProfile())
    assert isinstance(high.objects[0], Video)
    assert isinstance(low.objects[0], Image)
    assert low.objects[0].url.endswith("poster.jpg?f=low")
    assert (low.objects[0].x, low.objects[0].w) == (0, 626)


def ad_campaign(fmt_urls=True):
    return AdCampaign(
        ad_id="ad-1", advertiser_id="shop", click_href="https://shop.example/",
        home_community_id="c1",
        creatives=Creatives(
            video_url="https://ads.example/spot.mp4" if fmt_urls else None,
            image_url="https://ads.example/banner.jpg" if fmt_urls else None,
            text_body="Fresh fruit daily at the corner market"))


def slotted_page():
    return stored_page([
        Text(txt="headline", x=0, y=0, w=1080, h=40, font=28,
             font_type="Arial", color="#111111"),
        Rect(x=0, y=60, w=1080, h=180, color=AD_SLOT_COLOR),
    ])


def test_ad_format_by_fidelity():
    page = slotted_page()
    index = MediaIndex()
    profile = FidelityProfile()
    ads = [ad_campaign()]
    high = assemble_page(page, Fidelity.HIGH, ads, index, profile)
    medium = assemble_page(page, Fidelity.MEDIUM, ads, index, profile)
    low = assemble_page(page, Fidelity.LOW, ads, index, profile)
    assert isinstance(high.objects[1], Video)
    assert isinstance(medium.objects[1], Image)
    assert isinstance(low.objects[1], Text)
    assert low.objects[1].href == "https://shop.example/"
    assert high.objects[1].href == "https://shop.example/"


def test_unfilled_slot_stays_rect():
    page = slotted_page()
    out = assemble_page(page, Fidelity.LOW, [], MediaIndex(), FidelityProfile())
    assert isinstance(out.objects[1], Rect)
    assert count_ad_slots(page) == 1


def test_weight_monotone_across_fidelities():
    urls = [f"https://cdn.example/{i}.jpg" for i in range(4)]
    page = stored_page([Image(url=u, x=0, y=120 * i, w=1080, h=120)
                        for i, u in enumerate(urls)])
    index = make_media_index(urls, identity_high=False)
    profile = FidelityProfile()
    weights = []
    for fid in (Fidelity.LOW, Fidelity.MEDIUM, Fidelity.HIGH):
        out = assemble_page(page, fid, [], index, profile)
        weights.append(page_weight(out, index.sizes_for(out)))
    assert weights[0] <= weights[1] <= weights[2]


def test_assembled_weight_equals_recomputed_page_weight():
    urls = ["https://cdn.example/a.jpg", "https://cdn.example/b.jpg"]
    page = stored_page([Image(url=u, x=0, y=0, w=540, h=300) for u in urls])
    index = make_media_index(urls)
    out = assemble_page(page, Fidelity.MEDIUM, [], index, FidelityProfile())
    sizes = index.sizes_for(out)
    expected = sum(sizes[o.url] for o in out.objects)
    from gaius.maml import serialize_page
    expected += len(serialize_page(out).encode("utf-8"))
    assert page_weight(out, sizes) == expected
