"""Flat page format: model, validation, and wire codec."""

from .model import (
    Button,
    CANVAS_WIDTH,
    EPOCH,
    GeoPoint,
    Image,
    MamlObject,
    MamlPage,
    OBJECT_KINDS,
    Rect,
    Text,
    TextField,
    Video,
    Violation,
    content_height,
    hit_test,
    resource_urls,
    validate,
)
from .codec import (
    InvariantViolation,
    MamlError,
    MamlRangeError,
    MamlSyntaxError,
    MissingField,
    MissingMediaSize,
    UnknownObjectType,
    format_timestamp,
    page_weight,
    parse_page,
    parse_timestamp,
    serialize_object,
    serialize_page,
)

__all__ = [
    "Button", "CANVAS_WIDTH", "EPOCH", "GeoPoint", "Image", "MamlObject",
    "MamlPage", "OBJECT_KINDS", "Rect", "Text", "TextField", "Video",
    "Violation", "content_height", "hit_test", "resource_urls", "validate",
    "InvariantViolation", "MamlError", "MamlRangeError", "MamlSyntaxError",
    "MissingField", "MissingMediaSize", "UnknownObjectType",
    "format_timestamp", "page_weight", "parse_page", "parse_timestamp",
    "serialize_object", "serialize_page",
]
