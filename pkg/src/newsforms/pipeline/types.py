"""Shared datatypes for the text-analysis stages."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class Pos(Enum):
    DET = "DET"
    NOUN = "NOUN"
    PROPN = "PROPN"
    PRON = "PRON"
    VERB = "VERB"
    ADJ = "ADJ"
    ADV = "ADV"
    NUM = "NUM"
    PREP = "PREP"
    CONJ = "CONJ"
    PUNCT = "PUNCT"
    SYM = "SYM"
    OTHER = "OTHER"


@dataclass(frozen=True)
class Token:
    text: str
    start: int  # character offsets into the source text
    end: int
    pos: Pos


@dataclass(frozen=True)
class NounGroup:
    first: int  # token indices, inclusive
    last: int
    head: int   # index of the head token, within [first, last]


class ReadingKind(Enum):
    PERSON = "Person"
    LOCATION = "Location"
    ORGANIZATION = "Organization"
    PRODUCT = "Product"
    NUMBER = "Number"
    PERCENT = "Percent"
    MONEY = "Money"
    DURATION = "Duration"
    TEMPERATURE = "Temperature"
    SPEED = "Speed"
    DISTANCE = "Distance"
    DATE = "Date"


@dataclass(frozen=True)
class EntityReading:
    """One interpretation of a text span: a kind plus its typed payload.

    The payload is a model value (Person, Location, Organization, Money,
    Measure) or a Decimal/str scalar, depending on the kind.
    """

    kind: ReadingKind
    value: object
    attrs: tuple[tuple[str, str], ...] = ()

    def attr(self, key: str, default: Optional[str] = None) -> Optional[str]:
        for k, v in self.attrs:
            if k == key:
                return v
        return default


@dataclass(frozen=True)
class EntityMention:
    first: int  # token indices, inclusive
    last: int
    readings: tuple[EntityReading, ...]
    resolved_id: Optional[str] = None
    pronoun: bool = False
    ambiguous: bool = False

    @property
    def primary_kind(self) -> ReadingKind:
        return self.readings[0].kind


@dataclass(frozen=True)
class SentenceParse:
    start: int  # character span of the sentence in the source
    end: int
    tokens: tuple[Token, ...]
    noun_groups: tuple[NounGroup, ...]
    mentions: tuple[EntityMention, ...]

    def mention_text(self, mention: EntityMention) -> str:
        return " ".join(t.text for t in self.tokens[mention.first:mention.last + 1])
