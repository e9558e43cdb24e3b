"""Structured news events: typed documents, extraction from text, and queries."""

from .model import (
    Head,
    Location,
    Measure,
    Money,
    NewsForm,
    Organization,
    Person,
    ValidationReport,
    classify_sentiment,
    validate,
)
from .xmlcodec import parse_newsform, serialize_newsform

__all__ = [
    "Head",
    "Location",
    "Measure",
    "Money",
    "NewsForm",
    "Organization",
    "Person",
    "ValidationReport",
    "classify_sentiment",
    "parse_newsform",
    "serialize_newsform",
    "validate",
]
