"""Deterministic page-load cost model.

Objects become fetchable when their parents complete. A fetch pays DNS
(first use of its host), connection setup (unless an idle connection is
free), one request round trip, and size/bandwidth transfer, under a
per-host connection cap. PLT is the completion time of the last object.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional
from urllib.parse import urlparse


class CyclicGraph(ValueError):
    pass


@dataclass(frozen=True)
class NetworkModel:
    rtt_ms: float = 100.0
    bandwidth_kbps: float = 1024.0
    dns_ms: float = 100.0
    max_connections_per_host: int = 6
    connection_setup_rtts: float = 1.0
    request_rtts: float = 1.0

    def __post_init__(self):
        for name in ("rtt_ms", "bandwidth_kbps", "dns_ms",
                     "max_connections_per_host", "connection_setup_rtts",
                     "request_rtts"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @property
    def model_id(self) -> str:
        return (f"rtt{self.rtt_ms:g}ms-bw{self.bandwidth_kbps:g}kbps-"
                f"dns{self.dns_ms:g}ms-conn{self.max_connections_per_host}")

    def transfer_s(self, size_bytes: int) -> float:
        return size_bytes * 8.0 / (self.bandwidth_kbps * 1000.0)


@dataclass(frozen=True)
class FetchItem:
    url: str
    size: int
    parents: tuple[str, ...] = ()


def host_of(url: str) -> str:
    parsed = urlparse(url)
    if parsed.netloc:
        return parsed.netloc
    # scheme-less urls like "www.example.com/logo.png"
    return url.split("/", 1)[0] or "local"


class _HostState:
    __slots__ = ("dns_done", "connections")

    def __init__(self):
        self.dns_done: Optional[float] = None
        self.connections: list[float] = []  # times each connection frees up


def simulate_plt(items: list[FetchItem], model: NetworkModel) -> float:
    """Completion time in seconds of the last object in the fetch plan."""
    if not items:
        return 0.0
    by_url = {item.url: item for item in items}
    order = {item.url: i for i, item in enumerate(items)}
    children: dict[str, list[str]] = {u: [] for u in by_url}
    blocking: dict[str, int] = {}
    for item in items:
        parents = [p for p in item.parents if p in by_url]
        blocking[item.url] = len(parents)
        for p in parents:
            children[p].append(item.url)

    rtt = model.rtt_ms / 1000.0
    dns = model.dns_ms / 1000.0
    setup = model.connection_setup_rtts * rtt
    request = model.request_rtts * rtt

    hosts: dict[str, _HostState] = {}
    ready: dict[str, float] = {u: 0.0 for u, b in blocking.items() if b == 0}
    if not ready:
        raise CyclicGraph("no root object; every fetch waits on another")
    done: dict[str, float] = {}

    def candidate(url: str) -> tuple[float, float, bool]:
        """(start, completion, opens_new_connection) for one ready object."""
        item = by_url[url]
        state = hosts.setdefault(host_of(url), _HostState())
        r = ready[url]
        dns_done = state.dns_done if state.dns_done is not None else r + dns
        effective = max(r, dns_done)
        transfer = model.transfer_s(item.size)
        best = None
        if state.connections:
            free = min(state.connections)
            start = max(effective, free)
            best = (start, start + request + transfer, False)
        if len(state.connections) < model.max_connections_per_host:
            start = effective
            fresh = (start, start + setup + request + transfer, True)
            if best is None or fresh[1] < best[1]:
                best = fresh
        return best

    while len(done) < len(items):
        if not ready:
            raise CyclicGraph("request graph contains a cycle")
        chosen = min(ready, key=lambda u: (candidate(u)[0], order[u]))
        start, completion, fresh = candidate(chosen)
        state = hosts[host_of(chosen)]
        if state.dns_done is None:
            state.dns_done = ready[chosen] + dns
        if fresh:
            state.connections.append(completion)
        else:
            state.connections[state.connections.index(min(state.connections))] = completion
        del ready[chosen]
        done[chosen] = completion
        for child in children[chosen]:
            blocking[child] -= 1
            if blocking[child] == 0:
                ready[child] = max(done[p] for p in by_url[child].parents
                                   if p in by_url)
    return max(done.values())
