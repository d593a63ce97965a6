import pytest

from gaius.convert import (
    FeedParseError, RssFeed, RssItem, RssLayoutParams, parse_feed,
    translate_rss,
)
from gaius.maml import Image, Text, serialize_page, validate

ATOM_DOC = """<?xml version="1.0"?>
<feed xmlns="http://www.w3.org/2005/Atom">
  <title>Atom Channel</title>
  <entry>
    <title>First entry</title>
    <summary>Short summary.</summary>
    <link rel="alternate" href="https://a.example/1"/>
    <published>2020-01-03T10:00:00Z</published>
  </entry>
  <entry>
    <title>Second entry</title>
    <summary>Another summary.</summary>
    <link href="https://a.example/2"/>
    <published>2020-01-05T10:00:00Z</published>
  </entry>
</feed>
"""


def test_parse_rss_fixture(fixtures_dir):
    xml = (fixtures_dir / "rss" / "feed5.xml").read_text(encoding="utf-8")
    feed = parse_feed(xml, source_url="https://news.chennai.example/rss")
    assert feed.title == "Chennai Local Wire"
    assert len(feed.items) == 5
    # newest first
    dates = [i.published_at for i in feed.items]
    assert dates == sorted(dates, reverse=True)
    assert feed.items[0].image_url == "https://news.chennai.example/img/metro.jpg"
    assert feed.items[1].image_url == "https://news.chennai.example/img/fair.jpg"
    assert feed.items[2].image_url is None


def test_parse_atom():
    feed = parse_feed(ATOM_DOC)
    assert feed.title == "Atom Channel"
    assert [i.title for i in feed.items] == ["Second entry", "First entry"]
    assert feed.items[0].link == "https://a.example/2"


def test_malformed_xml_reports_position():
    with pytest.raises(FeedParseError) as e:
        parse_feed("<rss><channel><item></rss>")
    assert e.value.line is not None


def test_unsupported_root():
    with pytest.raises(FeedParseError):
        parse_feed("<opml></opml>")


def test_three_objects_per_item():
    feed = RssFeed(title="t", source_url="s", items=(
        RssItem(title="A", description="da", link="https://x.example/a",
                image_url="https://x.example/a.jpg"),
        RssItem(title="B", description="db", link="https://x.example/b"),
    ))
    page = translate_rss(feed)
    assert len(page.objects) == 6
    for k, item in enumerate(feed.items):
        image, title, desc = page.objects[3 * k: 3 * k + 3]
        assert isinstance(image, Image) and image.href == item.link
        assert isinstance(title, Text) and title.href == item.link
        assert isinstance(desc, Text) and desc.href is None
    # second item fell back to the placeholder image
    assert page.objects[3].url == RssLayoutParams().placeholder_image
    assert validate(page) == []


def test_empty_feed_gives_empty_page():
    page = translate_rss(RssFeed(title="empty", source_url="s"))
    assert page.objects == ()


def test_items_stack_downward():
    feed = RssFeed(title="t", source_url="s", items=(
        RssItem(title="A", description="d", link="https://x.example/a"),
        RssItem(title="B", description="d", link="https://x.example/b"),
    ))
    page = translate_rss(feed)
    assert page.objects[3].y > page.objects[0].y
    assert page.objects[3].y >= page.objects[2].y + page.objects[2].h


def test_fixture_feed_golden_is_byte_stable(fixtures_dir):
    xml = (fixtures_dir / "rss" / "feed5.xml").read_text(encoding="utf-8")
    feed = parse_feed(xml, source_url="https://news.chennai.example/rss")
    page = translate_rss(feed, RssLayoutParams(page_id="chennai-local-wire",
                                               language="en-IN"))
    golden = (fixtures_dir / "maml" / "rss_feed5.maml").read_text(encoding="utf-8")
    assert serialize_page(page) == golden
