"""Entity identification: people, places, organizations, products, and
normalized quantities (numbers, percentages, money, durations,
temperatures, speeds, distances).

Matching is a single deterministic left-to-right scan. At each unconsumed
token the parser tries, in order: the quantity grammar, person composition
(title + given + family), longest-first lexicon window matching, the
organization-suffix rule, pronouns, date words, and finally a fallback
that treats an unknown capitalized run as a family name. A span keeps
every reading its sources supply; ambiguity is preserved for later stages
to resolve.
"""

from __future__ import annotations

from decimal import Decimal
from typing import Optional

from .. import model
from ..lexicons import EntryKind, LexiconEntry, LexiconSet
from .types import EntityMention, EntityReading, Pos, ReadingKind, Token

# Lexicon kinds that stand alone as mentions; the rest feed the grammars.
_STANDALONE_KINDS = {
    EntryKind.CITY, EntryKind.STATE, EntryKind.COUNTRY, EntryKind.REGION,
    EntryKind.CONTINENT, EntryKind.ORG_NAME, EntryKind.SPORTS_TEAM,
    EntryKind.PRODUCT, EntryKind.PERSON_NAME,
}

_WEEKDAYS = {"Monday", "Tuesday", "Wednesday", "Thursday", "Friday",
             "Saturday", "Sunday"}
_MONTHS = {"January", "February", "March", "April", "May", "June", "July",
           "August", "September", "October", "November", "December"}

# words that head a named weather system ("Hurricane Floyd"); they stay
# free tokens so the pattern stage can match them as literals
_STORM_WORDS = {"hurricane", "cyclone", "typhoon", "tropical"}

_DIM_KIND = {
    "percent": ReadingKind.PERCENT,
    "distance": ReadingKind.DISTANCE,
    "duration": ReadingKind.DURATION,
    "speed": ReadingKind.SPEED,
    "temperature": ReadingKind.TEMPERATURE,
}


def _window_surface(tokens: list[Token], first: int, last: int) -> str:
    text = " ".join(t.text for t in tokens[first:last + 1])
    return text.replace(" , ", ", ")


def _dec(raw: Optional[str]) -> Optional[Decimal]:
    return Decimal(raw) if raw is not None else None


def _reading_from_entry(entry: LexiconEntry) -> Optional[EntityReading]:
    kind = entry.kind
    if kind is EntryKind.CITY:
        value = model.Location(city=entry.normalized, country=entry.attr("country"),
                               state=entry.attr("state"), latitude=_dec(entry.attr("lat")),
                               longitude=_dec(entry.attr("lon")))
        return EntityReading(ReadingKind.LOCATION, value)
    if kind is EntryKind.STATE:
        value = model.Location(state=entry.normalized, country=entry.attr("country"))
        return EntityReading(ReadingKind.LOCATION, value)
    if kind is EntryKind.COUNTRY:
        value = model.Location(country=entry.normalized, latitude=_dec(entry.attr("lat")),
                               longitude=_dec(entry.attr("lon")))
        return EntityReading(ReadingKind.LOCATION, value)
    if kind is EntryKind.REGION:
        return EntityReading(ReadingKind.LOCATION, model.Location(region=entry.normalized))
    if kind is EntryKind.CONTINENT:
        return EntityReading(ReadingKind.LOCATION, model.Location(continent=entry.normalized))
    if kind is EntryKind.ORG_NAME:
        value = model.Organization(full_name=entry.normalized, ticker=entry.attr("ticker"),
                                   organization_type=entry.attr("type"),
                                   nickname=entry.attr("nickname"))
        return EntityReading(ReadingKind.ORGANIZATION, value)
    if kind is EntryKind.SPORTS_TEAM:
        value = model.Organization(full_name=entry.normalized, sport=entry.attr("sport"))
        return EntityReading(ReadingKind.ORGANIZATION, value)
    if kind is EntryKind.PRODUCT:
        return EntityReading(ReadingKind.PRODUCT, entry.normalized, entry.attributes)
    if kind is EntryKind.PERSON_NAME:
        given = entry.attr("given")
        family = entry.attr("family")
        if given is None and family is None:
            parts = entry.normalized.split()
            given = " ".join(parts[:-1]) or None
            family = parts[-1]
        value = model.Person(given=given, family=family, sex=entry.attr("sex"))
        return EntityReading(ReadingKind.PERSON, value)
    return None


def _dedupe(readings: list[EntityReading]) -> tuple[EntityReading, ...]:
    out: list[EntityReading] = []
    for reading in readings:
        if not any(r.kind == reading.kind and r.value == reading.value for r in out):
            out.append(reading)
    return tuple(out)


class _Scanner:
    def __init__(self, tokens: list[Token], lexicons: LexiconSet):
        self.tokens = tokens
        self.lexicons = lexicons
        self.n = len(tokens)

    # -- lexicon access helpers ---------------------------------------

    def entries_at(self, first: int, last: int, kinds) -> list[LexiconEntry]:
        if last >= self.n:
            return []
        if any(t.pos is Pos.PUNCT and t.text != "," for t in self.tokens[first:last + 1]):
            return []
        surface = _window_surface(self.tokens, first, last)
        return [e for e in self.lexicons.lookup(surface) if e.kind in kinds]

    def single(self, i: int, kind: EntryKind) -> Optional[LexiconEntry]:
        entries = self.entries_at(i, i, {kind})
        return entries[0] if entries else None

    def longest(self, i: int, kinds, max_len: Optional[int] = None):
        """Longest lexicon window starting at i restricted to the given kinds."""
        limit = min(self.lexicons.max_words, self.n - i)
        if max_len is not None:
            limit = min(limit, max_len)
        for length in range(limit, 0, -1):
            entries = self.entries_at(i, i + length - 1, kinds)
            if entries:
                return i + length - 1, entries
        return None

    # -- quantity grammar ----------------------------------------------

    def number_at(self, i: int):
        """Parse a numeral or a number-word run; returns (value, next index)."""
        tok = self.tokens[i]
        if tok.pos is Pos.NUM and tok.text[0].isdigit() or tok.pos is Pos.NUM and tok.text[0] == ".":
            try:
                return Decimal(tok.text.replace(",", "")), i + 1
            except ArithmeticError:
                return None
        total = None
        j = i
        while j < self.n:
            entry = self.single(j, EntryKind.NUMBER_WORD)
            if entry is None or entry.attr("val") is None:
                break
            word_value = Decimal(entry.attr("val"))
            if total is None:
                total = word_value
                j += 1
                continue
            # only "tens + unit" composes: twenty five -> 25
            if total % 10 == 0 and 20 <= total <= 90 and 1 <= word_value <= 9:
                total += word_value
                j += 1
                continue
            break
        if total is None:
            return None
        return total, j

    def magnitudes(self, value: Decimal, j: int):
        while j < self.n:
            entry = self.single(j, EntryKind.NUMBER_WORD)
            if entry is None or entry.attr("mag") is None:
                break
            value *= Decimal(entry.attr("mag"))
            j += 1
        return value, j

    def quant_at(self, i: int):
        parsed = self.number_at(i)
        if parsed is None:
            return None
        value, j = parsed
        return self.magnitudes(value, j)

    def unit_at(self, j: int):
        found = self.longest(j, {EntryKind.UNIT})
        if found is None:
            return None
        last, entries = found
        return last, entries[0]

    def match_quantity(self, i: int) -> Optional[EntityMention]:
        tok = self.tokens[i]
        # currency symbol before the figure: $2 million
        if tok.pos is Pos.SYM:
            entry = self.single(i, EntryKind.CURRENCY_UNIT)
            if entry is not None and entry.attr("sym") == "pre" and i + 1 < self.n:
                quant = self.quant_at(i + 1)
                if quant is not None:
                    value, j = quant
                    money = model.Money(value, entry.normalized)
                    return EntityMention(i, j - 1, (EntityReading(ReadingKind.MONEY, money),))
            return None
        quant = self.quant_at(i)
        if quant is None:
            return None
        value, j = quant
        # "two to three hours" takes the first bound
        if j < self.n and self.tokens[j].text.lower() == "to":
            second = self.quant_at(j + 1)
            if second is not None:
                tail = self.tail_reading(value, second[1])
                if tail is not None:
                    reading, last = tail
                    return EntityMention(i, last, (reading,))
        tail = self.tail_reading(value, j)
        if tail is not None:
            reading, last = tail
            return EntityMention(i, last, (reading,))
        return EntityMention(i, j - 1, (EntityReading(ReadingKind.NUMBER, value),))

    def tail_reading(self, value: Decimal, j: int):
        """Currency word or measure unit following a figure."""
        if j >= self.n:
            return None
        entry = self.single(j, EntryKind.CURRENCY_UNIT)
        if entry is not None and entry.attr("sym") != "pre":
            scale = entry.attr("scale")
            amount = value * Decimal(scale) if scale else value
            return EntityReading(ReadingKind.MONEY, model.Money(amount, entry.normalized)), j
        unit = self.unit_at(j)
        if unit is not None:
            last, entry = unit
            kind = _DIM_KIND[entry.attr("dim")]
            if kind is ReadingKind.PERCENT:
                return EntityReading(ReadingKind.PERCENT, value), last
            measure = model.Measure(value, entry.normalized)
            return EntityReading(kind, measure), last
        return None

    # -- person composition ---------------------------------------------

    def match_person(self, i: int) -> Optional[EntityMention]:
        j = i
        prefix = None
        functions: list[str] = []
        sex = None
        while j < self.n:
            found = self.longest(j, {EntryKind.TITLE})
            if found is None:
                break
            last, entries = found
            entry = entries[0]
            if entry.attr("role") == "prefix":
                prefix = prefix or entry.normalized
            else:
                functions.append(entry.normalized)
            sex = sex or entry.attr("sex")
            j = last + 1
        given = None
        given_entry = self.single(j, EntryKind.GIVEN_NAME) if j < self.n else None
        if given_entry is not None and self.tokens[j].text[0].isupper():
            given = given_entry.normalized
            sex = sex or given_entry.attr("sex")
            j += 1
        family_parts: list[str] = []
        while j < self.n and self.tokens[j].pos is Pos.PROPN:
            if self.single(j, EntryKind.GIVEN_NAME) and not family_parts and given is None:
                break  # a fresh given name starts a different person
            family_parts.append(self.tokens[j].text)
            j += 1
        family = " ".join(family_parts) or None
        has_title = prefix is not None or functions
        if not has_title and not given:
            return None  # a bare capitalized run is the fallback's job
        if has_title and not given and not family:
            # attributive use ("justice system", "police car") is no mention
            if j < self.n and self.tokens[j].pos is Pos.NOUN:
                return None
        person = model.Person(
            prefix=prefix,
            function=" ".join(functions) if functions else None,
            given=given,
            family=family,
            sex=sex,
        )
        readings = [EntityReading(ReadingKind.PERSON, person)]
        for entry in self.entries_at(i, j - 1, _STANDALONE_KINDS):
            extra = _reading_from_entry(entry)
            if extra is not None:
                readings.append(extra)
        return EntityMention(i, j - 1, _dedupe(readings))

    # -- other matchers ---------------------------------------------------

    def match_lexicon(self, i: int) -> Optional[EntityMention]:
        found = self.longest(i, _STANDALONE_KINDS)
        if found is None:
            return None
        last, entries = found
        readings = []
        for entry in entries:
            reading = _reading_from_entry(entry)
            if reading is not None:
                readings.append(reading)
        if not readings:
            return None
        return EntityMention(i, last, _dedupe(readings))

    def match_org_suffix(self, i: int) -> Optional[EntityMention]:
        closed = (Pos.DET, Pos.PREP, Pos.CONJ, Pos.PRON, Pos.PUNCT, Pos.SYM,
                  Pos.NUM)

        def name_like(tok: Token) -> bool:
            return (tok.text[0].isalpha() and tok.text[0].isupper()
                    and tok.pos not in closed)

        if not name_like(self.tokens[i]):
            return None
        j = i
        while j < self.n and name_like(self.tokens[j]) \
                and self.single(j, EntryKind.ORG_SUFFIX) is None:
            j += 1
        if j >= self.n or j == i:
            return None
        if self.single(j, EntryKind.ORG_SUFFIX) is None:
            return None
        name = _window_surface(self.tokens, i, j)
        org = model.Organization(full_name=name)
        return EntityMention(i, j, (EntityReading(ReadingKind.ORGANIZATION, org),))

    def match_pronoun(self, i: int) -> Optional[EntityMention]:
        if self.tokens[i].pos is not Pos.PRON:
            return None
        entry = self.single(i, EntryKind.PRONOUN)
        if entry is None:
            return None
        person = model.Person(sex=entry.attr("sex"))
        reading = EntityReading(ReadingKind.PERSON, person)
        return EntityMention(i, i, (reading,), pronoun=True)

    def match_date(self, i: int) -> Optional[EntityMention]:
        text = self.tokens[i].text
        if text in _WEEKDAYS or text in _MONTHS:
            return EntityMention(i, i, (EntityReading(ReadingKind.DATE, text),))
        return None

    def match_unknown_name(self, i: int) -> Optional[EntityMention]:
        if self.tokens[i].pos is not Pos.PROPN:
            return None
        if self.tokens[i].text.lower() in _STORM_WORDS:
            return None
        j = i
        while j < self.n and self.tokens[j].pos is Pos.PROPN:
            j += 1
        family = _window_surface(self.tokens, i, j - 1)
        person = model.Person(family=family)
        return EntityMention(i, j - 1, (EntityReading(ReadingKind.PERSON, person),))


def _merge_product_context(mentions: list[EntityMention]) -> list[EntityMention]:
    """Fold an adjacent maker or model-year mention into a product mention."""
    out: list[EntityMention] = []
    for mention in mentions:
        if (out and mention.primary_kind is ReadingKind.PRODUCT
                and out[-1].last + 1 == mention.first):
            prev = out[-1]
            product = mention.readings[0]
            if prev.primary_kind is ReadingKind.ORGANIZATION:
                carrier = prev.readings[0].value.full_name
                merged = EntityReading(ReadingKind.PRODUCT, product.value,
                                       product.attrs + (("carrier", carrier),))
                out[-1] = EntityMention(prev.first, mention.last, (merged,))
                continue
            if prev.primary_kind is ReadingKind.NUMBER:
                year = prev.readings[0].value
                if year == year.to_integral_value() and 1900 <= int(year) <= 2099:
                    merged = EntityReading(ReadingKind.PRODUCT, product.value,
                                           product.attrs + (("year", str(int(year))),))
                    out[-1] = EntityMention(prev.first, mention.last, (merged,))
                    continue
        out.append(mention)
    return out


def parse_entities(tokens: list[Token], lexicons: LexiconSet) -> list[EntityMention]:
    """Identify entity mentions over one sentence's tagged tokens."""
    scanner = _Scanner(list(tokens), lexicons)
    mentions: list[EntityMention] = []
    i = 0
    while i < scanner.n:
        tok = scanner.tokens[i]
        if tok.pos is Pos.PUNCT:
            i += 1
            continue
        mention = (scanner.match_quantity(i)
                   or scanner.match_person(i)
                   or scanner.match_lexicon(i)
                   or scanner.match_org_suffix(i)
                   or scanner.match_pronoun(i)
                   or scanner.match_date(i)
                   or scanner.match_unknown_name(i))
        if mention is not None:
            mentions.append(mention)
            i = mention.last + 1
        else:
            i += 1
    return _merge_product_context(mentions)
