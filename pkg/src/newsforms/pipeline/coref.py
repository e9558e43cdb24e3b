"""Reference resolution: one identifier per unique entity.

Mentions are visited in document order. Each is linked to a prior entity
by, in order: exact full-name match, family-name match to a prior person,
title match, and for pronouns the most recent prior person agreeing in
sex (unknown sex matches either). Anything else gets a fresh identifier;
an unresolvable pronoun is additionally flagged ambiguous. Identifiers
look like PERSON3, ORG1, LOC4 and never mix entity kinds.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from decimal import Decimal
from typing import Optional

from .. import model
from ..vocab import Sex
from .types import EntityReading, ReadingKind, SentenceParse

_PREFIX = {
    ReadingKind.PERSON: "PERSON",
    ReadingKind.LOCATION: "LOC",
    ReadingKind.ORGANIZATION: "ORG",
    ReadingKind.PRODUCT: "PROD",
    ReadingKind.NUMBER: "NUM",
    ReadingKind.PERCENT: "PCT",
    ReadingKind.MONEY: "MONEY",
    ReadingKind.DURATION: "DUR",
    ReadingKind.TEMPERATURE: "TEMP",
    ReadingKind.SPEED: "SPEED",
    ReadingKind.DISTANCE: "DIST",
    ReadingKind.DATE: "DATE",
}


@dataclass
class _Entity:
    eid: str
    kind: ReadingKind
    sex: Optional[Sex] = None
    full_names: set[str] = field(default_factory=set)
    families: set[str] = field(default_factory=set)
    functions: set[str] = field(default_factory=set)
    values: set[str] = field(default_factory=set)


def _value_key(reading: EntityReading) -> Optional[str]:
    value = reading.value
    if isinstance(value, model.Location):
        parts = (value.city, value.state, value.country, value.region,
                 str(value.continent) if value.continent else None)
        return "|".join((p or "").lower() for p in parts)
    if isinstance(value, model.Organization):
        return (value.full_name or value.nickname or "").lower()
    if isinstance(value, model.Money):
        return f"{value.currency}:{model.format_decimal(value.amount)}"
    if isinstance(value, model.Measure):
        return f"{model.format_decimal(value.value)} {value.unit}"
    if isinstance(value, Decimal):
        return model.format_decimal(value)
    if isinstance(value, str):
        return value.lower()
    return None


def _person_keys(person: model.Person):
    full = None
    if person.given and person.family:
        full = f"{person.given} {person.family}".lower()
    family = person.family.lower() if person.family else None
    function = person.function.lower() if person.function else None
    return full, family, function


def _sex_compatible(a: Optional[Sex], b: Optional[Sex]) -> bool:
    return a is None or b is None or a == b


class _Resolver:
    def __init__(self):
        self.entities: list[_Entity] = []
        self.counters: dict[str, int] = {}

    def fresh(self, kind: ReadingKind) -> _Entity:
        prefix = _PREFIX[kind]
        self.counters[prefix] = self.counters.get(prefix, 0) + 1
        entity = _Entity(eid=f"{prefix}{self.counters[prefix]}", kind=kind)
        self.entities.append(entity)
        return entity

    def resolve_person(self, person: model.Person, pronoun: bool) -> Optional[_Entity]:
        full, family, function = _person_keys(person)
        if pronoun:
            for entity in reversed(self.entities):
                if entity.kind is ReadingKind.PERSON and _sex_compatible(entity.sex, person.sex):
                    return entity
            return None
        for entity in reversed(self.entities):
            if entity.kind is not ReadingKind.PERSON:
                continue
            if full and full in entity.full_names:
                return entity
        if family:
            for entity in reversed(self.entities):
                if entity.kind is ReadingKind.PERSON and family in entity.families:
                    return entity
        if function and not family and not person.given:
            for entity in reversed(self.entities):
                if entity.kind is ReadingKind.PERSON and function in entity.functions:
                    return entity
        return None

    def resolve_value(self, reading: EntityReading) -> Optional[_Entity]:
        key = _value_key(reading)
        if key is None:
            return None
        for entity in reversed(self.entities):
            if entity.kind is reading.kind and key in entity.values:
                return entity
        return None

    def record(self, entity: _Entity, reading: EntityReading):
        if reading.kind is ReadingKind.PERSON:
            person = reading.value
            full, family, function = _person_keys(person)
            if full:
                entity.full_names.add(full)
            if family:
                entity.families.add(family)
            if function:
                entity.functions.add(function)
            if entity.sex is None and isinstance(person.sex, Sex):
                entity.sex = person.sex
        else:
            key = _value_key(reading)
            if key:
                entity.values.add(key)


def resolve_references(parses: list[SentenceParse]) -> list[SentenceParse]:
    """Assign an identifier to every mention; coreferent mentions share one."""
    resolver = _Resolver()
    resolved: list[SentenceParse] = []
    for parse in parses:
        new_mentions = []
        for mention in parse.mentions:
            primary = mention.readings[0]
            ambiguous = mention.ambiguous
            if primary.kind is ReadingKind.PERSON:
                entity = resolver.resolve_person(primary.value, mention.pronoun)
                if entity is None:
                    entity = resolver.fresh(ReadingKind.PERSON)
                    if mention.pronoun:
                        ambiguous = True
            else:
                entity = resolver.resolve_value(primary)
                if entity is None:
                    entity = resolver.fresh(primary.kind)
            if not mention.pronoun:
                resolver.record(entity, primary)
            new_mentions.append(replace(mention, resolved_id=entity.eid,
                                        ambiguous=ambiguous))
        resolved.append(replace(parse, mentions=tuple(new_mentions)))
    return resolved
