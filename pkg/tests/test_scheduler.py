from datetime import datetime, timedelta, timezone

import pytest

from gaius.convert import (
    FeedScheduleEntry, RssFeed, RssItem, run_feed_scheduler, tick,
)

T0 = datetime(2020, 6, 1, tzinfo=timezone.utc)


def minute(n):
    return T0 + timedelta(minutes=n)


def ok_fetcher(url):
    return RssFeed(title="f", source_url=url, items=(
        RssItem(title="a", description="d", link="https://x.example/a"),))


def test_interval_below_one_minute_rejected():
    with pytest.raises(ValueError):
        FeedScheduleEntry(feed_url="u", page_id="p",
                          refresh_interval=timedelta(seconds=30))


def test_three_refreshes_in_ninety_minutes():
    entry = FeedScheduleEntry(feed_url="u", page_id="p")
    entries = [entry]
    runs = 0
    for m in range(0, 91):
        runs += len(tick(entries, minute(m), ok_fetcher))
    assert runs == 3


def test_failed_fetch_records_error_and_keeps_page():
    pages = {"p": "original"}

    def sink(page_id, page):
        pages[page_id] = page

    def bad_fetcher(url):
        raise ConnectionError("feed host unreachable")

    entry = FeedScheduleEntry(feed_url="u", page_id="p")
    tick([entry], minute(0), bad_fetcher, sink)
    results = tick([entry], minute(30), bad_fetcher, sink)
    assert len(results) == 1 and not results[0].ok
    assert entry.last_error == "feed host unreachable"
    assert pages["p"] == "original"


def test_success_clears_error_and_writes_page():
    pages = {}
    entry = FeedScheduleEntry(feed_url="u", page_id="p", last_error="old")
    tick([entry], minute(0), ok_fetcher, pages.__setitem__)
    tick([entry], minute(30), ok_fetcher, pages.__setitem__)
    assert entry.last_error is None
    assert len(pages["p"].objects) == 3


def test_interleaving_matches_event_list_oracle():
    entries = [
        FeedScheduleEntry(feed_url="u10", page_id="p10",
                          refresh_interval=timedelta(minutes=10)),
        FeedScheduleEntry(feed_url="u20", page_id="p20",
                          refresh_interval=timedelta(minutes=20)),
        FeedScheduleEntry(feed_url="u30", page_id="p30",
                          refresh_interval=timedelta(minutes=30)),
    ]
    log = []
    for m in range(0, 61):
        for result in tick(entries, minute(m), ok_fetcher):
            log.append((m, result.feed_url))
    expected = sorted(
        [(m, "u10") for m in (10, 20, 30, 40, 50, 60)]
        + [(m, "u20") for m in (20, 40, 60)]
        + [(m, "u30") for m in (30, 60)])
    assert sorted(log) == expected


def test_slow_tick_collapses_missed_refreshes():
    entry = FeedScheduleEntry(feed_url="u", page_id="p")
    tick([entry], minute(0), ok_fetcher)
    results = tick([entry], minute(95), ok_fetcher)
    assert len(results) == 1
    assert entry.last_run == minute(90)


class FakeClock:
    def __init__(self, start):
        self.t = start

    def now(self):
        return self.t

    def sleep(self, seconds):
        self.t += timedelta(seconds=seconds)


def test_generator_driven_by_injected_clock():
    clock = FakeClock(T0)
    entry = FeedScheduleEntry(feed_url="u", page_id="p")
    stream = run_feed_scheduler([entry], clock, ok_fetcher)
    results = [next(stream) for _ in range(3)]
    assert [r.at for r in results] == [minute(30), minute(60), minute(90)]
    assert all(r.ok for r in results)
