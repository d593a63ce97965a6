"""Fidelity policy: delivery tiers, media transcoding, and on-the-fly
page assembly that matches media quality and ad formats to the tier."""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .maml import Image, MamlPage, Rect, Text, Video, validate
from .maml.model import MamlObject

# stored pages mark ad slots with rects of this sentinel color
AD_SLOT_COLOR = "#00adfe"


class Fidelity(str, Enum):
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"

    @property
    def rank(self) -> int:
        return ("low", "medium", "high").index(self.value)

    def __lt__(self, other):
        return self.rank < other.rank

    def __le__(self, other):
        return self.rank <= other.rank

    def __gt__(self, other):
        return self.rank > other.rank

    def __ge__(self, other):
        return self.rank >= other.rank


FIDELITIES = (Fidelity.LOW, Fidelity.MEDIUM, Fidelity.HIGH)


class AdFormat(str, Enum):
    VIDEO = "video"
    IMAGE = "image"
    TEXT = "text"


# the tier -> creative format mapping is fixed; profiles may not change it
AD_FORMAT_BY_FIDELITY = {
    Fidelity.HIGH: AdFormat.VIDEO,
    Fidelity.MEDIUM: AdFormat.IMAGE,
    Fidelity.LOW: AdFormat.TEXT,
}


class PolicyError(ValueError):
    pass


class UnsupportedImageFormat(PolicyError):
    pass


class ZeroDimension(PolicyError):
    pass


class MissingVariant(PolicyError):
    def __init__(self, url: str, fidelity: "Fidelity"):
        self.url, self.fidelity = url, fidelity
        super().__init__(f"no {fidelity.value} variant for {url!r}")


class VariantOrderingBroken(PolicyError):
    pass


@dataclass(frozen=True)
class FidelityTier:
    image_scale: float
    image_quality: int
    video_allowed: bool


@dataclass(frozen=True)
class FidelityProfile:
    tiers: dict[Fidelity, FidelityTier] = field(default_factory=lambda: {
        Fidelity.HIGH: FidelityTier(image_scale=1.0, image_quality=85,
                                    video_allowed=True),
        Fidelity.MEDIUM: FidelityTier(image_scale=0.5, image_quality=60,
                                      video_allowed=True),
        Fidelity.LOW: FidelityTier(image_scale=0.25, image_quality=35,
                                   video_allowed=False),
    })

    def __post_init__(self):
        for fid in FIDELITIES:
            if fid not in self.tiers:
                raise PolicyError(f"profile misses tier {fid.value}")
        low, med, high = (self.tiers[f] for f in FIDELITIES)
        if not (low.image_scale < med.image_scale < high.image_scale):
            raise PolicyError("image_scale must strictly increase with fidelity")
        if not (low.image_quality < med.image_quality < high.image_quality):
            raise PolicyError("image_quality must strictly increase with fidelity")
        for scale in (low.image_scale, med.image_scale, high.image_scale):
            if not 0 < scale <= 1:
                raise PolicyError(f"image_scale {scale} outside (0, 1]")
        for q in (low.image_quality, med.image_quality, high.image_quality):
            if not 1 <= q <= 100:
                raise PolicyError(f"image_quality {q} outside 1..100")

    def tier(self, fidelity: Fidelity) -> FidelityTier:
        return self.tiers[fidelity]

    def ad_format(self, fidelity: Fidelity) -> AdFormat:
        return AD_FORMAT_BY_FIDELITY[fidelity]


def select_fidelity(user_pref: Optional[Fidelity],
                    network_hint: Optional[dict] = None) -> Fidelity:
    """Explicit preference wins; otherwise classify the network; else medium."""
    if user_pref is not None:
        return user_pref
    if not network_hint:
        return Fidelity.MEDIUM
    rtt = network_hint.get("rtt_ms")
    bw = network_hint.get("bandwidth_kbps")
    if (bw is not None and bw < 256) or (rtt is not None and rtt > 800):
        return Fidelity.LOW
    if (bw is not None and bw < 1024) or (rtt is not None and rtt > 300):
        return Fidelity.MEDIUM
    return Fidelity.HIGH


# ---------------------------------------------------------------------------
# transcoding

@dataclass(frozen=True)
class MediaVariant:
    fidelity: Fidelity
    width: int
    height: int
    byte_size: int
    data: bytes
    ext: str = "jpg"


def _round_half_up(v: float) -> int:
    return math.floor(v + 0.5)


def transcode_image(data: bytes, fidelity: Fidelity,
                    profile: FidelityProfile) -> MediaVariant:
    """Rescale and re-encode one image for a tier (JPEG output)."""
    from PIL import Image as PilImage, UnidentifiedImageError

    tier = profile.tier(fidelity)
    try:
        im = PilImage.open(io.BytesIO(data))
        im.load()
    except (UnidentifiedImageError, OSError) as e:
        raise UnsupportedImageFormat(str(e)) from None
    if im.width <= 0 or im.height <= 0:
        raise ZeroDimension(f"{im.width}x{im.height}")
    w = max(1, _round_half_up(im.width * tier.image_scale))
    h = max(1, _round_half_up(im.height * tier.image_scale))
    if im.mode in ("RGBA", "LA", "P"):
        im = im.convert("RGBA")
        background = PilImage.new("RGB", im.size, (255, 255, 255))
        background.paste(im, mask=im.split()[-1])
        im = background
    elif im.mode != "RGB":
        im = im.convert("RGB")
    if (w, h) != (im.width, im.height):
        im = im.resize((w, h), PilImage.LANCZOS)
    out = io.BytesIO()
    im.save(out, format="JPEG", quality=tier.image_quality)
    payload = out.getvalue()
    return MediaVariant(fidelity=fidelity, width=w, height=h,
                        byte_size=len(payload), data=payload)


@dataclass(frozen=True)
class MediaVariantSet:
    media_id: str
    variants: dict[Fidelity, MediaVariant]

    def __post_init__(self):
        sizes = [self.variants[f].byte_size for f in FIDELITIES
                 if f in self.variants]
        if sizes != sorted(sizes):
            raise VariantOrderingBroken(
                f"{self.media_id}: variant bytes not monotone {sizes}")


def build_variant_set(media_id: str, data: bytes,
                      profile: FidelityProfile) -> MediaVariantSet:
    variants = {f: transcode_image(data, f, profile) for f in FIDELITIES}
    return MediaVariantSet(media_id=media_id, variants=variants)


# ---------------------------------------------------------------------------
# assembly

@dataclass(frozen=True)
class MediaEntry:
    """Where each fidelity of one media asset is served from.

    For videos the low entry points at the poster image, which is what a
    tier without video gets instead.
    """
    media_id: str
    kind: str  # "image" | "video"
    urls: dict[Fidelity, str]
    sizes: dict[Fidelity, int]


class MediaIndex:
    """Original url -> MediaEntry lookup used by assembly and weighing."""

    def __init__(self, entries: Optional[dict[str, MediaEntry]] = None):
        self._entries = dict(entries or {})

    def add(self, url: str, entry: MediaEntry) -> None:
        self._entries[url] = entry

    def get(self, url: str) -> Optional[MediaEntry]:
        return self._entries.get(url)

    def sizes_for(self, page: MamlPage) -> dict[str, int]:
        """Byte sizes for every media url on an assembled page.

        Urls outside the index (external ad creatives and the like) count
        zero bytes; their true size is unknowable offline.
        """
        sizes: dict[str, int] = {}
        known = {}
        for entry in self._entries.values():
            for fid, url in entry.urls.items():
                known[url] = entry.sizes[fid]
        for obj in page.objects:
            if isinstance(obj, (Image, Video)):
                sizes[obj.url] = known.get(obj.url, 0)
        return sizes


def _ad_object(campaign, fmt: AdFormat, slot: Rect) -> MamlObject:
    href = campaign.click_href
    if fmt is AdFormat.VIDEO:
        return Video(url=campaign.creatives.video_url, x=slot.x, y=slot.y,
                     w=slot.w, h=slot.h, href=href)
    if fmt is AdFormat.IMAGE:
        return Image(url=campaign.creatives.image_url, x=slot.x, y=slot.y,
                     w=slot.w, h=slot.h, href=href)
    return Text(txt=campaign.creatives.text_body, x=slot.x, y=slot.y,
                w=slot.w, h=slot.h, font=20, font_type="Arial",
                color="#333333", href=href)


def assemble_page(page: MamlPage, fidelity: Fidelity, ads: list,
                  media: MediaIndex, profile: FidelityProfile) -> MamlPage:
    """Produce the delivered page for one tier.

    Registered media urls flip to their fidelity variants and Video
    degrades to its poster Image when the tier disallows video; urls the
    store does not know (external resources) pass through untouched since
    nothing can be transcoded for them. Ad slot rects are filled in paint
    order with objects matching the tier's ad format. Pure: identical
    inputs give identical bytes.

    Raises MissingVariant only for a registered asset lacking the
    requested tier, which means the store is inconsistent.
    """
    tier = profile.tier(fidelity)
    fmt = profile.ad_format(fidelity)
    slot_index = 0
    objects: list[MamlObject] = []
    for obj in page.objects:
        if isinstance(obj, Image):
            entry = media.get(obj.url)
            if entry is None:
                objects.append(obj)
                continue
            if fidelity not in entry.urls:
                raise MissingVariant(obj.url, fidelity)
            objects.append(Image(url=entry.urls[fidelity], x=obj.x, y=obj.y,
                                 w=obj.w, h=obj.h, href=obj.href))
        elif isinstance(obj, Video):
            entry = media.get(obj.url)
            if entry is None:
                objects.append(obj)
                continue
            if fidelity not in entry.urls:
                raise MissingVariant(obj.url, fidelity)
            url = entry.urls[fidelity]
            if tier.video_allowed:
                objects.append(Video(url=url, x=obj.x, y=obj.y,
                                     w=obj.w, h=obj.h, href=obj.href))
            else:
                objects.append(Image(url=url, x=obj.x, y=obj.y,
                                     w=obj.w, h=obj.h, href=obj.href))
        elif isinstance(obj, Rect) and obj.color == AD_SLOT_COLOR:
            if slot_index < len(ads):
                objects.append(_ad_object(ads[slot_index], fmt, obj))
            else:
                objects.append(obj)  # unfilled slot stays a plain rect
            slot_index += 1
        else:
            objects.append(obj)
    assembled = page.with_objects(objects)
    violations = validate(assembled)
    if violations:
        raise PolicyError(f"assembly broke an invariant: {violations[0]}")
    return assembled


def count_ad_slots(page: MamlPage) -> int:
    return sum(1 for o in page.objects
               if isinstance(o, Rect) and o.color == AD_SLOT_COLOR)
