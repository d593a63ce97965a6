"""Edge-side records: users, communities, content items, request logs."""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from typing import Optional

from ..maml import GeoPoint, format_timestamp, parse_timestamp
from ..policy import Fidelity


class EdgeError(Exception):
    pass


class NotFound(EdgeError):
    pass


class Forbidden(EdgeError):
    pass


class UnknownToken(EdgeError):
    pass


class ValidationFailed(EdgeError):
    def __init__(self, violations):
        self.violations = violations
        rules = ", ".join(v.rule for v in violations)
        super().__init__(f"page failed validation: {rules}")


@dataclass
class UserProfile:
    user_id: str
    token: str
    language: str = "en"
    location: GeoPoint = GeoPoint(0.0, 0.0)
    interest_tags: frozenset[str] = frozenset()
    preferred_fidelity: Optional[Fidelity] = None
    communities: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "user_id": self.user_id,
            "token": self.token,
            "language": self.language,
            "location": {"lat": self.location.lat, "lon": self.location.lon},
            "interest_tags": sorted(self.interest_tags),
            "preferred_fidelity":
                self.preferred_fidelity.value if self.preferred_fidelity else None,
            "communities": list(self.communities),
        }

    @classmethod
    def from_json(cls, raw: dict) -> "UserProfile":
        fid = raw.get("preferred_fidelity")
        return cls(
            user_id=raw["user_id"], token=raw["token"],
            language=raw.get("language", "en"),
            location=GeoPoint(raw["location"]["lat"], raw["location"]["lon"]),
            interest_tags=frozenset(raw.get("interest_tags", [])),
            preferred_fidelity=Fidelity(fid) if fid else None,
            communities=list(raw.get("communities", [])),
        )


@dataclass
class Community:
    community_id: str
    name: str
    owner_id: str
    description: str = ""
    topics: frozenset[str] = frozenset()
    visibility: str = "public"  # or "private"
    members: set[str] = field(default_factory=set)
    content_ids: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.visibility not in ("public", "private"):
            raise EdgeError(f"bad visibility {self.visibility!r}")
        self.members.add(self.owner_id)  # the owner is always a member

    def is_member(self, user_id: Optional[str]) -> bool:
        return user_id is not None and user_id in self.members

    def readable_by(self, user_id: Optional[str]) -> bool:
        return self.visibility == "public" or self.is_member(user_id)

    def to_json(self) -> dict:
        return {
            "community_id": self.community_id, "name": self.name,
            "owner_id": self.owner_id, "description": self.description,
            "topics": sorted(self.topics), "visibility": self.visibility,
            "members": sorted(self.members),
            "content_ids": list(self.content_ids),
        }

    @classmethod
    def from_json(cls, raw: dict) -> "Community":
        return cls(
            community_id=raw["community_id"], name=raw["name"],
            owner_id=raw["owner_id"], description=raw.get("description", ""),
            topics=frozenset(raw.get("topics", [])),
            visibility=raw.get("visibility", "public"),
            members=set(raw.get("members", [])),
            content_ids=list(raw.get("content_ids", [])),
        )


@dataclass
class ContentItem:
    content_id: str
    kind: str  # page | post | media
    author_id: str
    community_id: Optional[str]
    location: GeoPoint
    language: str
    created_at: datetime
    page_id: Optional[str] = None
    popularity: int = 0

    def to_json(self) -> dict:
        return {
            "content_id": self.content_id, "kind": self.kind,
            "author_id": self.author_id, "community_id": self.community_id,
            "location": {"lat": self.location.lat, "lon": self.location.lon},
            "language": self.language,
            "created_at": format_timestamp(self.created_at),
            "page_id": self.page_id, "popularity": self.popularity,
        }

    @classmethod
    def from_json(cls, raw: dict) -> "ContentItem":
        return cls(
            content_id=raw["content_id"], kind=raw["kind"],
            author_id=raw["author_id"], community_id=raw.get("community_id"),
            location=GeoPoint(raw["location"]["lat"], raw["location"]["lon"]),
            language=raw.get("language", "en"),
            created_at=parse_timestamp(raw["created_at"]),
            page_id=raw.get("page_id"),
            popularity=raw.get("popularity", 0),
        )


@dataclass
class RequestLog:
    """One page request: load time, size, fidelity, coarse geo, client info."""
    timestamp: datetime
    page_id: str
    fidelity: Fidelity
    page_size: int
    token: str
    plt_ms: Optional[int] = None
    geo_lat: float = 0.0
    geo_lon: float = 0.0
    network_type: str = "unknown"
    device_model: str = "unknown"

    def to_json(self) -> dict:
        return {
            "timestamp": format_timestamp(self.timestamp),
            "page_id": self.page_id,
            "fidelity": self.fidelity.value,
            "page_size": self.page_size,
            "plt_ms": self.plt_ms,
            "geo": {"lat": round(self.geo_lat, 2), "lon": round(self.geo_lon, 2)},
            "network_type": self.network_type,
            "device_model": self.device_model,
            "token": self.token,
        }
