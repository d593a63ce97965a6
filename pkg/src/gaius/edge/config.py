"""Server configuration from a flat key=value file.

Example::

    listen_host = 127.0.0.1
    listen_port = 8340
    store_path = /var/lib/gaius
    base_cpi = 0.01
    weekly_infra_cost = 70
    feed_alpha = 0.5
    fidelity.medium.image_quality = 60
    studio_dir = frontend/dist

Unquoted strings are fine; ``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Optional

from ..policy import Fidelity, FidelityProfile, FidelityTier


class ConfigError(ValueError):
    pass


def parse_kv(text: str) -> dict[str, str]:
    values: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, _, raw = stripped.partition("=")
        value = raw.strip()
        if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
            value = value[1:-1]
        values[key.strip()] = value
    return values


@dataclass
class EdgeConfig:
    listen_host: str = "127.0.0.1"
    listen_port: int = 8340
    store_path: Path = Path("./edge-store")
    base_cpi: Decimal = Decimal("0.01")
    weekly_infra_cost: Decimal = Decimal("70")
    feed_alpha: float = 0.5
    studio_dir: Optional[Path] = None
    profile: FidelityProfile = field(default_factory=FidelityProfile)

    @classmethod
    def from_file(cls, path: Path) -> "EdgeConfig":
        path = Path(path)
        if not path.exists():
            raise ConfigError(f"config file {path} does not exist")
        return cls.from_values(parse_kv(path.read_text(encoding="utf-8")))

    @classmethod
    def from_values(cls, values: dict[str, str]) -> "EdgeConfig":
        cfg = cls()
        tier_overrides: dict[Fidelity, dict[str, object]] = {f: {} for f in Fidelity}
        for key, value in values.items():
            try:
                if key == "listen_host":
                    cfg.listen_host = value
                elif key == "listen_port":
                    cfg.listen_port = int(value)
                elif key == "store_path":
                    cfg.store_path = Path(value)
                elif key == "base_cpi":
                    cfg.base_cpi = Decimal(value)
                elif key == "weekly_infra_cost":
                    cfg.weekly_infra_cost = Decimal(value)
                elif key == "feed_alpha":
                    cfg.feed_alpha = float(value)
                    if not 0.0 <= cfg.feed_alpha <= 1.0:
                        raise ConfigError(f"feed_alpha {value} outside [0, 1]")
                elif key == "studio_dir":
                    cfg.studio_dir = Path(value)
                elif key.startswith("fidelity."):
                    _, tier_name, attr = key.split(".", 2)
                    fid = Fidelity(tier_name)
                    if attr == "image_scale":
                        tier_overrides[fid][attr] = float(value)
                    elif attr == "image_quality":
                        tier_overrides[fid][attr] = int(value)
                    elif attr == "video_allowed":
                        tier_overrides[fid][attr] = value.lower() in ("1", "true", "yes")
                    else:
                        raise ConfigError(f"unknown fidelity attribute {attr!r}")
                else:
                    raise ConfigError(f"unknown config key {key!r}")
            except (ValueError, InvalidOperation) as e:
                if isinstance(e, ConfigError):
                    raise
                raise ConfigError(f"bad value for {key!r}: {value!r}") from None
        if any(tier_overrides.values()):
            base = FidelityProfile()
            tiers = {}
            for fid in Fidelity:
                current = base.tiers[fid]
                merged = {
                    "image_scale": current.image_scale,
                    "image_quality": current.image_quality,
                    "video_allowed": current.video_allowed,
                }
                merged.update(tier_overrides[fid])
                tiers[fid] = FidelityTier(**merged)
            cfg.profile = FidelityProfile(tiers=tiers)
        return cfg
