"""Edge server: storage, request path, communities, feeds, metrics, HTTP."""

from .config import ConfigError, EdgeConfig, parse_kv
from .models import (
    Community, ContentItem, EdgeError, Forbidden, NotFound, RequestLog,
    UnknownToken, UserProfile, ValidationFailed,
)
from .service import EdgeService, rank_feed
from .store import EdgeStore, atomic_write, media_url
from .http import EdgeServer, make_server

__all__ = [
    "ConfigError", "EdgeConfig", "parse_kv",
    "Community", "ContentItem", "EdgeError", "Forbidden", "NotFound",
    "RequestLog", "UnknownToken", "UserProfile", "ValidationFailed",
    "EdgeService", "rank_feed", "EdgeStore", "atomic_write", "media_url",
    "EdgeServer", "make_server",
]
