"""Deterministic photo-like test images (noisy gradients, JPEG)."""

import io

import numpy as np
from PIL import Image as PilImage


def photo_bytes(w=640, h=480, seed=3, quality=88) -> bytes:
    rng = np.random.default_rng(seed)
    xs = np.arange(w)[None, :]
    ys = np.arange(h)[:, None]
    noise = rng.integers(0, 64, size=(h, w, 3), dtype=np.uint8)
    base = np.stack([
        (xs * 7 + ys * 0) % 256 * np.ones_like(ys),
        (ys * 5) % 256 * np.ones_like(xs),
        (xs + ys) % 256,
    ], axis=-1).astype(np.uint16)
    img = ((base + noise) % 256).astype(np.uint8)
    out = io.BytesIO()
    PilImage.fromarray(img, "RGB").save(out, format="JPEG", quality=quality)
    return out.getvalue()
