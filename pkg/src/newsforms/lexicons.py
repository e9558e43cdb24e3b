"""Gazetteer and lexicon resources mapping surface forms to entity readings.

A lexicon is a TSV file: ``surface<TAB>kind<TAB>normalized<TAB>attrs`` with
``;``-separated ``key=value`` attrs and ``#`` comment lines. One surface may
carry several entries, across files or within one; lookup always returns
all of them, in load order, so downstream stages see every ambiguity
(New York the city, the state, and several teams).

A manifest file in the lexicon directory lists the files to load, in
order; a second column ``ci`` marks a lexicon as case-insensitive (number
words, units, pronouns). Proper-noun lexicons are case-sensitive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional


class EntryKind(Enum):
    PERSON_NAME = "PersonName"
    GIVEN_NAME = "GivenName"
    FAMILY_NAME = "FamilyName"
    TITLE = "Title"
    CITY = "City"
    STATE = "State"
    COUNTRY = "Country"
    REGION = "Region"
    CONTINENT = "Continent"
    ORG_NAME = "OrgName"
    ORG_SUFFIX = "OrgSuffix"
    SPORTS_TEAM = "SportsTeam"
    CURRENCY_UNIT = "CurrencyUnit"
    UNIT = "Unit"
    NUMBER_WORD = "NumberWord"
    PRONOUN = "Pronoun"
    PRODUCT = "Product"


class LexiconError(ValueError):
    def __init__(self, path, lineno: int, message: str):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = str(path)
        self.lineno = lineno


@dataclass(frozen=True)
class LexiconEntry:
    surface: str
    kind: EntryKind
    normalized: str
    attributes: tuple[tuple[str, str], ...] = ()

    def attr(self, key: str, default: Optional[str] = None) -> Optional[str]:
        for k, v in self.attributes:
            if k == key:
                return v
        return default


def _normalize_surface(surface: str, case_sensitive: bool) -> str:
    key = " ".join(surface.split())
    return key if case_sensitive else key.casefold()


@dataclass
class Lexicon:
    name: str
    case_sensitive: bool = True
    entries: dict[str, list[LexiconEntry]] = field(default_factory=dict)
    max_words: int = 0

    def __len__(self) -> int:
        return sum(len(v) for v in self.entries.values())

    def add(self, entry: LexiconEntry):
        key = _normalize_surface(entry.surface, self.case_sensitive)
        bucket = self.entries.setdefault(key, [])
        for existing in bucket:
            if (existing.kind, existing.normalized) == (entry.kind, entry.normalized):
                return  # duplicate (surface, kind, normalized) triple
        bucket.append(entry)
        self.max_words = max(self.max_words, len(key.split()))

    def lookup(self, surface: str) -> list[LexiconEntry]:
        key = _normalize_surface(surface, self.case_sensitive)
        return list(self.entries.get(key, ()))


def _parse_attrs(raw: str, path, lineno: int) -> tuple[tuple[str, str], ...]:
    attrs: list[tuple[str, str]] = []
    seen = set()
    for piece in raw.split(";"):
        piece = piece.strip()
        if not piece:
            continue
        if "=" not in piece:
            raise LexiconError(path, lineno, f"bad attribute (need key=value): {piece!r}")
        key, value = piece.split("=", 1)
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise LexiconError(path, lineno, f"bad attribute (empty key or value): {piece!r}")
        if key in seen:
            raise LexiconError(path, lineno, f"duplicate attribute key {key!r}")
        seen.add(key)
        attrs.append((key, value))
    return tuple(attrs)


def _check_coordinates(entry: LexiconEntry, path, lineno: int):
    for key, bound in (("lat", 90), ("lon", 180)):
        raw = entry.attr(key)
        if raw is None:
            continue
        try:
            value = Decimal(raw)
        except InvalidOperation:
            raise LexiconError(path, lineno, f"{key} is not a decimal: {raw!r}") from None
        if not -bound <= value <= bound:
            raise LexiconError(path, lineno, f"{key} out of range: {raw}")


def load_lexicon(path, name: Optional[str] = None, case_sensitive: bool = True) -> Lexicon:
    """Load one TSV lexicon; malformed lines raise with their line number."""
    path = Path(path)
    lexicon = Lexicon(name=name or path.stem, case_sensitive=case_sensitive)
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        columns = raw.split("\t")
        if len(columns) not in (3, 4):
            raise LexiconError(path, lineno, f"expected 3 or 4 tab-separated columns, got {len(columns)}")
        surface, kind_token, normalized = (c.strip() for c in columns[:3])
        if not surface:
            raise LexiconError(path, lineno, "empty surface")
        try:
            kind = EntryKind(kind_token)
        except ValueError:
            raise LexiconError(path, lineno, f"unknown entry kind {kind_token!r}") from None
        if not normalized:
            raise LexiconError(path, lineno, "empty normalized value")
        attrs = _parse_attrs(columns[3], path, lineno) if len(columns) == 4 else ()
        entry = LexiconEntry(surface, kind, normalized, attrs)
        if kind in (EntryKind.CITY, EntryKind.COUNTRY):
            _check_coordinates(entry, path, lineno)
        lexicon.add(entry)
    return lexicon


class LexiconSet:
    """Ordered collection of lexicons with union lookup."""

    def __init__(self, lexicons: Iterable[Lexicon] = ()):
        self.lexicons = list(lexicons)

    def __len__(self) -> int:
        return sum(len(lx) for lx in self.lexicons)

    @property
    def max_words(self) -> int:
        return max((lx.max_words for lx in self.lexicons), default=0)

    def lookup(self, surface: str) -> list[LexiconEntry]:
        found: list[LexiconEntry] = []
        for lexicon in self.lexicons:
            found.extend(lexicon.lookup(surface))
        return found


def load_lexicon_set(directory) -> LexiconSet:
    """Load every lexicon named by the directory's manifest, in order."""
    directory = Path(directory)
    manifest = directory / "manifest"
    if not manifest.is_file():
        raise FileNotFoundError(f"no lexicon manifest at {manifest}")
    lexicons = []
    for lineno, raw in enumerate(manifest.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        filename = parts[0].strip()
        flags = {p.strip() for p in parts[1:]}
        unknown = flags - {"ci"}
        if unknown:
            raise LexiconError(manifest, lineno, f"unknown flag(s) {sorted(unknown)}")
        lexicons.append(load_lexicon(directory / filename, case_sensitive="ci" not in flags))
    return LexiconSet(lexicons)
