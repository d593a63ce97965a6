"""Converters: HTML snapshots and RSS/Atom feeds into MAML pages."""

from .snapshot import (
    GraphEdge,
    HtmlPageSnapshot,
    LayoutBox,
    Resource,
    SnapshotError,
    check_snapshot,
    load_snapshot,
    save_manifest,
    snapshot_from_har,
)
from .html2maml import (
    ConvertError,
    ConvertOptions,
    EmptySnapshot,
    ParseFailure,
    UnscalableViewport,
    convert_html,
    fallback_layout,
)
from .rss import (
    FeedParseError,
    RssFeed,
    RssItem,
    RssLayoutParams,
    parse_feed,
    translate_rss,
)
from .scheduler import (
    FeedScheduleEntry,
    RefreshResult,
    run_feed_scheduler,
    tick,
)

__all__ = [
    "GraphEdge", "HtmlPageSnapshot", "LayoutBox", "Resource", "SnapshotError",
    "check_snapshot", "load_snapshot", "save_manifest", "snapshot_from_har",
    "ConvertError", "ConvertOptions", "EmptySnapshot", "ParseFailure",
    "UnscalableViewport", "convert_html", "fallback_layout",
    "FeedParseError", "RssFeed", "RssItem", "RssLayoutParams", "parse_feed",
    "translate_rss", "FeedScheduleEntry", "RefreshResult",
    "run_feed_scheduler", "tick",
]
