"""Periodic feed refresh with an injected clock and fetcher, so tests can
drive time by hand and refreshes stay deterministic."""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timedelta
from typing import Callable, Iterator, Optional

from ..maml import MamlPage
from .rss import RssFeed, RssLayoutParams, translate_rss

DEFAULT_INTERVAL = timedelta(minutes=30)
MIN_INTERVAL = timedelta(minutes=1)

Fetcher = Callable[[str], RssFeed]
PageSink = Callable[[str, MamlPage], None]


@dataclass
class FeedScheduleEntry:
    feed_url: str
    page_id: str
    refresh_interval: timedelta = DEFAULT_INTERVAL
    last_run: Optional[datetime] = None
    last_error: Optional[str] = None
    layout: Optional[RssLayoutParams] = None

    def __post_init__(self):
        if self.refresh_interval < MIN_INTERVAL:
            raise ValueError(
                f"refresh interval {self.refresh_interval} is under one minute")

    def _layout(self) -> RssLayoutParams:
        return self.layout or RssLayoutParams(page_id=self.page_id)


@dataclass(frozen=True)
class RefreshResult:
    feed_url: str
    page_id: str
    at: datetime
    ok: bool
    error: Optional[str] = None
    page: Optional[MamlPage] = None


def tick(entries: list[FeedScheduleEntry], now: datetime, fetcher: Fetcher,
         sink: Optional[PageSink] = None) -> list[RefreshResult]:
    """Refresh every due entry at ``now``; never touches pages on failure.

    ``last_run`` advances to the most recent due instant, so a slow tick
    collapses missed refreshes instead of replaying them.
    """
    results = []
    for entry in entries:
        if entry.last_run is None:
            entry.last_run = now
            continue
        elapsed = now - entry.last_run
        if elapsed < entry.refresh_interval:
            continue
        entry.last_run += (elapsed // entry.refresh_interval) * entry.refresh_interval
        try:
            feed = fetcher(entry.feed_url)
            page = translate_rss(feed, entry._layout())
        except Exception as e:
            entry.last_error = str(e)
            results.append(RefreshResult(entry.feed_url, entry.page_id, now,
                                         ok=False, error=entry.last_error))
            continue
        entry.last_error = None
        if sink is not None:
            sink(entry.page_id, page)
        results.append(RefreshResult(entry.feed_url, entry.page_id, now,
                                     ok=True, page=page))
    return results


def run_feed_scheduler(entries: list[FeedScheduleEntry], clock, fetcher: Fetcher,
                       sink: Optional[PageSink] = None) -> Iterator[RefreshResult]:
    """Run refreshes forever, yielding each result as it happens.

    ``clock`` supplies ``now() -> datetime`` and ``sleep(seconds)``; wall
    time in production, a stub in tests.
    """
    for entry in entries:
        if entry.last_run is None:
            entry.last_run = clock.now()
    while True:
        next_due = min(e.last_run + e.refresh_interval for e in entries)
        pause = (next_due - clock.now()).total_seconds()
        if pause > 0:
            clock.sleep(pause)
        yield from tick(entries, clock.now(), fetcher, sink)
