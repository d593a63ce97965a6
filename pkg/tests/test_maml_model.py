import random

import pytest

from gaius.maml import (
    GeoPoint, Image, MamlPage, Rect, Text, Video,
    hit_test, validate,
)


def make_page(objects=(), **kw):
    defaults = dict(page_id="p1", title="t", language="en",
                    location=GeoPoint(12.97, 77.59), author_id="u1")
    defaults.update(kw)
    return MamlPage(objects=tuple(objects), **defaults)


def test_canvas_height_computed_from_content():
    page = make_page([Rect(x=0, y=28, w=1080, h=147, color="#ffffff")])
    assert page.canvas_height == 175
    assert make_page().canvas_height == 0


def test_explicit_canvas_height_kept_when_larger():
    page = make_page([Rect(x=0, y=0, w=10, h=10, color="#ffffff")],
                     canvas_height=500)
    assert page.canvas_height == 500
    assert validate(page) == []


def test_valid_table_style_page_has_no_violations():
    page = make_page([
        Image(url="www.example.com/logo.png", x=43.0, y=57.0, w=390, h=60),
        Text(txt="Example text of page", x=65.0, y=867.0, w=950, h=31,
             font=20, font_type="Arial", color="#946c3b"),
        Rect(x=0, y=28, w=1080, h=147, color="#ffffff"),
        Video(url="www.example.com/video.mp4", x=82.0, y=60.0, w=626, h=352),
    ])
    assert validate(page) == []


def test_zero_extent_flagged():
    page = make_page([Image(url="u.png", x=0, y=0, w=0, h=10)])
    rules = [v.rule for v in validate(page)]
    assert "positive-extent" in rules


def test_bad_color_flagged():
    page = make_page([Text(txt="x", x=0, y=0, w=10, h=10, font=12,
                           font_type="Arial", color="#GGGGGG")])
    violations = validate(page)
    assert [v.rule for v in violations] == ["color-format"]
    assert violations[0].object_index == 0


def test_location_and_language_checks():
    page = make_page(location=GeoPoint(95.0, 10.0))
    assert "lat-range" in [v.rule for v in validate(page)]
    page = make_page(location=GeoPoint(0.0, -181.0))
    assert "lon-range" in [v.rule for v in validate(page)]
    page = make_page(language="not a tag!!")
    assert "language-tag" in [v.rule for v in validate(page)]


def test_undersized_canvas_flagged():
    page = make_page([Rect(x=0, y=0, w=10, h=300, color="#ffffff")],
                     canvas_height=100)
    assert "canvas-height" in [v.rule for v in validate(page)]


def test_hit_test_topmost_wins():
    page = make_page([
        Rect(x=0, y=0, w=100, h=100, color="#ffffff"),
        Image(url="a.png", x=10, y=10, w=20, h=20),
    ])
    assert hit_test(page, 15, 15) == 1
    assert hit_test(page, 90, 90) == 0
    assert hit_test(page, 200, 200) is None


def test_hit_test_empty_page():
    assert hit_test(make_page(), 5, 5) is None


def test_hit_test_matches_reverse_scan_oracle():
    from pagegen import random_page

    def oracle(page, x, y):
        best = None
        for i, o in enumerate(page.objects):
            if o.x <= x < o.x + o.w and o.y <= y < o.y + o.h:
                best = i
        return best

    rng = random.Random(20260809)
    for _ in range(50):
        page = random_page(rng)
        for _ in range(100):
            x = rng.uniform(0, 1200)
            y = rng.uniform(0, 1200)
            got = hit_test(page, x, y)
            assert got == oracle(page, x, y)
            if got is not None:
                o = page.objects[got]
                assert o.x <= x < o.x + o.w and o.y <= y < o.y + o.h
