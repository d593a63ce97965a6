import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from gaius.maml import (
    GeoPoint, Image, InvariantViolation, MamlPage, MamlRangeError,
    MamlSyntaxError, MissingField, MissingMediaSize, Rect, UnknownObjectType, page_weight, parse_page, serialize_object,
    serialize_page,
)
from pagegen import random_page

TABLE_DOC = """
{"page": {"page_id": "demo", "title": "Demo", "language": "en",
          "location": {"lat": 12.97, "lon": 77.59}, "author_id": "u1"},
 "objects": [
   {"type":"img","url":"www.example.com/logo.png","x":43.0,"y":57.0,"w":390,"h":60},
   {"type":"txt","txt":"Example text of page","x":65.0,"y":867.0,"w":950,"h":31,"font":20,"font-type":"Arial","color":"#946c3b"},
   {"type":"rect","x":0,"y":28,"w":1080,"h":147,"color":"#ffffff"},
   {"type":"video","url":"www.example.com/video.mp4","x":82.0,"y":60.0,"w":626,"h":352}
 ]}
"""


def test_parse_table_style_objects():
    page = parse_page(TABLE_DOC)
    img = page.objects[0]
    assert isinstance(img, Image)
    assert img.url == "www.example.com/logo.png"
    assert (img.x, img.y, img.w, img.h) == (43, 57, 390, 60)
    assert img.href is None
    txt = page.objects[1]
    assert txt.font == 20 and txt.font_type == "Arial" and txt.color == "#946c3b"


def test_parse_empty_objects_list():
    doc = ('{"page": {"page_id": "p", "title": "", "language": "en", '
           '"location": {"lat": 0, "lon": 0}, "author_id": "a"}, "objects": []}')
    page = parse_page(doc)
    assert page.objects == ()
    assert page.canvas_height == 0


def test_serialize_rect_matches_wire_form():
    rect = Rect(x=0, y=28, w=1080, h=147, color="#ffffff")
    assert serialize_object(rect) == \
        '{"type":"rect","x":0,"y":28,"w":1080,"h":147,"color":"#ffffff"}'


def test_roundtrip_1000_random_pages():
    rng = random.Random(7)
    for _ in range(1000):
        page = random_page(rng)
        assert parse_page(serialize_page(page)) == page


def test_double_serialize_is_byte_identical():
    rng = random.Random(8)
    for _ in range(100):
        doc = serialize_page(random_page(rng))
        assert serialize_page(parse_page(doc)) == doc


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_roundtrip_property(seed):
    page = random_page(random.Random(seed))
    assert parse_page(serialize_page(page)) == page


def test_syntax_error_carries_offset():
    with pytest.raises(MamlSyntaxError) as e:
        parse_page('{"page": {]}')
    assert e.value.offset is not None


def test_unknown_object_type():
    doc = json.loads(TABLE_DOC)
    doc["objects"][1] = {"type": "marquee", "x": 0, "y": 0, "w": 5, "h": 5}
    with pytest.raises(UnknownObjectType) as e:
        parse_page(json.dumps(doc))
    assert e.value.object_index == 1
    assert e.value.offset is not None


def test_missing_field_reports_index_and_offset():
    doc = json.loads(TABLE_DOC)
    del doc["objects"][0]["url"]
    with pytest.raises(MissingField) as e:
        parse_page(json.dumps(doc))
    assert e.value.object_index == 0
    assert e.value.offset == json.dumps(doc).index('{"type": "img"')


def test_range_error_on_bad_extent():
    doc = json.loads(TABLE_DOC)
    doc["objects"][2]["w"] = 0
    with pytest.raises(MamlRangeError) as e:
        parse_page(json.dumps(doc))
    assert e.value.object_index == 2


def test_bad_color_is_range_error():
    doc = json.loads(TABLE_DOC)
    doc["objects"][1]["color"] = "#94XC3B"
    with pytest.raises(MamlRangeError):
        parse_page(json.dumps(doc))


def test_color_normalized_to_lowercase():
    doc = json.loads(TABLE_DOC)
    doc["objects"][1]["color"] = "#946C3B"
    page = parse_page(json.dumps(doc))
    assert page.objects[1].color == "#946c3b"


def test_fractional_extent_rounds_half_up_with_note():
    doc = json.loads(TABLE_DOC)
    doc["objects"][0]["w"] = 390.5
    notes = []
    page = parse_page(json.dumps(doc), notes=notes)
    assert page.objects[0].w == 391
    assert notes and "390.5" in notes[0]


def test_strict_rejects_unknown_fields():
    doc = json.loads(TABLE_DOC)
    doc["objects"][2]["z-index"] = 9
    with pytest.raises(MamlSyntaxError):
        parse_page(json.dumps(doc))


def test_lenient_preserves_unknown_fields_across_roundtrip():
    doc = json.loads(TABLE_DOC)
    doc["objects"][2]["z-index"] = 9
    page = parse_page(json.dumps(doc), strict=False)
    out = serialize_page(page)
    assert '"z-index":9' in out
    assert parse_page(out, strict=False) == page


def test_serialize_rejects_invalid_page():
    page = MamlPage(page_id="p", title="", language="en",
                    location=GeoPoint(0, 0), author_id="a",
                    objects=(Image(url="", x=0, y=0, w=10, h=10),))
    with pytest.raises(InvariantViolation):
        serialize_page(page)


def test_page_weight_media_arithmetic():
    page = parse_page(TABLE_DOC)
    sizes = {"www.example.com/logo.png": 10_000,
             "www.example.com/video.mp4": 20_000}
    doc_len = len(serialize_page(page).encode("utf-8"))
    assert page_weight(page, sizes) == doc_len + 30_000


def test_page_weight_no_media():
    doc = ('{"page": {"page_id": "p", "title": "", "language": "en", '
           '"location": {"lat": 0, "lon": 0}, "author_id": "a"}, "objects": []}')
    page = parse_page(doc)
    assert page_weight(page, {}) == len(serialize_page(page).encode("utf-8"))


def test_page_weight_missing_media_size():
    page = parse_page(TABLE_DOC)
    with pytest.raises(MissingMediaSize):
        page_weight(page, {"www.example.com/logo.png": 1})


def test_golden_corpus_is_byte_stable(fixtures_dir):
    goldens = sorted((fixtures_dir / "maml").glob("*.maml"))
    assert goldens, "golden corpus missing"
    for path in goldens:
        doc = path.read_text(encoding="utf-8")
        assert serialize_page(parse_page(doc)) == doc, path.name


def test_fuzzed_documents_never_crash():
    rng = random.Random(99)
    base = serialize_page(random_page(rng))
    for _ in range(2000):
        mutated = _mutate(base, rng)
        try:
            parse_page(mutated)
        except (MamlSyntaxError, UnknownObjectType, MissingField,
                MamlRangeError):
            pass


def _mutate(doc: str, rng: random.Random) -> str:
    mode = rng.randrange(5)
    if mode == 0 and doc:
        i = rng.randrange(len(doc))
        return doc[:i] + chr(rng.randrange(32, 127)) + doc[i + 1:]
    if mode == 1:
        return doc[:rng.randrange(len(doc) + 1)]
    if mode == 2:
        i = rng.randrange(len(doc))
        return doc[:i] + rng.choice(['{', '}', '[', ']', '"', ',', ':']) + doc[i:]
    if mode == 3:
        try:
            data = json.loads(doc)
        except ValueError:
            return doc
        if data.get("objects"):
            k = rng.randrange(len(data["objects"]))
            obj = data["objects"][k]
            if obj:
                key = rng.choice(sorted(obj))
                obj[key] = rng.choice([None, True, -1, "", [], {}, 1e309])
        return json.dumps(data)
    return doc[::-1]
