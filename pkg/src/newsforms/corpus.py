"""Corpus index and query engine over news-event documents.

A corpus is a directory of ``*.newsform.xml`` files. The index holds the
parsed documents, an inverted map from (event type, field path, value
token) to document ids, and a dateline-time index. Queries are a
conjunction of field-path predicates that must all hold on one event
record, with optional sorting, and time windows; results equal brute-force
evaluation on every corpus.

Query surface syntax::

    Variant.Path.To.Field OP value [and Variant.Path OP value ...]
        [sort Variant.Path asc|desc] [since TS] [until TS]

Operators: = != < <= > >= contains. A bare variant name matches every
document containing an event of that type. Money literals are written
``USD:1000000.50``; comparing against a differently-denominated field is
an error. Timestamps use the dateline format ``YYYYMMDDTHHMMSSZ``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone
from decimal import Decimal, InvalidOperation
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional

from . import model
from .model import FieldKind, FieldSpec, Money, NewsForm
from .vocab import Sentiment
from .xmlcodec import FILE_EXTENSION, read_newsform

_MONEY_LITERAL_RE = re.compile(r"^([A-Z]{3}):(-?\d+(?:\.\d+)?)$")

_ORDERABLE = frozenset({FieldKind.INT, FieldKind.DECIMAL, FieldKind.TIMESTAMP,
                        FieldKind.MONEY})

_COMPARE_OPS = {"<", "<=", ">", ">="}
_ALL_OPS = {"=", "!=", "<", "<=", ">", ">=", "contains"}


class QueryError(ValueError):
    """Query text that does not parse or type-check; carries a position."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(message)
        self.position = position


def _norm_number(value) -> str:
    dec = value if isinstance(value, Decimal) else Decimal(value)
    return format(dec.normalize(), "f")


def _posting_token(spec: FieldSpec, value) -> str:
    if spec.kind in (FieldKind.INT, FieldKind.DECIMAL):
        return _norm_number(value)
    return model.leaf_token(spec, value)


# ---------------------------------------------------------------------------
# Index

@dataclass
class IndexedDoc:
    doc_id: str
    path: str
    form: NewsForm


@dataclass
class CorpusIndex:
    docs: list[IndexedDoc] = field(default_factory=list)
    postings: dict[tuple[str, str, str], set[str]] = field(default_factory=dict)
    time_index: list[tuple[datetime, str]] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)

    def doc(self, doc_id: str) -> IndexedDoc:
        return next(d for d in self.docs if d.doc_id == doc_id)


def _leaf_postings(value, cls: type, prefix: str):
    """Yield (dotted path, value token) for every populated leaf."""
    for spec in model.specs_for(cls):
        item = getattr(value, spec.attr)
        if item is None or item == ():
            continue
        path = f"{prefix}.{spec.element}" if prefix else spec.element
        if spec.kind in model.LEAF_KINDS:
            yield path, _posting_token(spec, item)
        elif spec.kind is FieldKind.MONEY:
            yield path, f"{item.currency}:{_norm_number(item.amount)}"
            yield f"{path}.Amount", _norm_number(item.amount)
            yield f"{path}.Currency", item.currency
        elif spec.kind is FieldKind.MEASURE:
            yield path, f"{_norm_number(item.value)} {item.unit}"
        elif spec.kind in (FieldKind.PERSON, FieldKind.ORGANIZATION,
                           FieldKind.LOCATION, FieldKind.ORG_OR_PERSON):
            yield from _leaf_postings(item, type(item), path)
        elif spec.kind in model.LIST_KINDS:
            for element in item:
                yield from _leaf_postings(element, type(element), path)


def build_index(paths: Iterable) -> CorpusIndex:
    """Index the given files; invalid ones are skipped with a diagnostic."""
    index = CorpusIndex()
    for n, path in enumerate(paths, start=1):
        doc_id = f"d{n:04d}"
        try:
            form = read_newsform(path)
        except (OSError, ValueError) as exc:
            index.diagnostics.append(f"skipped\t{path}\t{exc}")
            continue
        report = model.validate(form)
        if report.errors:
            first = report.errors[0]
            index.diagnostics.append(
                f"skipped\t{path}\tinvalid: {first.path}: {first.message}")
            continue
        index.docs.append(IndexedDoc(doc_id, str(path), form))
        for event in form.events:
            variant = model.ELEMENT_OF_EVENT[type(event)]
            for leaf_path, token in _leaf_postings(event, type(event), ""):
                index.postings.setdefault((variant, leaf_path, token), set()).add(doc_id)
        if form.head.dateline_time is not None:
            index.time_index.append((form.head.dateline_time, doc_id))
    index.time_index.sort(key=lambda pair: (pair[0], pair[1]))
    return index


def corpus_paths(directory) -> list[Path]:
    return sorted(Path(directory).glob(f"*{FILE_EXTENSION}"))


# ---------------------------------------------------------------------------
# Queries

@dataclass(frozen=True)
class Predicate:
    path: str          # dotted, without the variant
    op: str
    value: str         # literal token as written
    specs: tuple[FieldSpec, ...] = ()


class SortOrder(Enum):
    ASC = "asc"
    DESC = "desc"


@dataclass(frozen=True)
class QueryExpr:
    variant: str
    predicates: tuple[Predicate, ...] = ()
    sort_path: Optional[str] = None
    sort_specs: tuple[FieldSpec, ...] = ()
    sort_order: SortOrder = SortOrder.ASC
    since: Optional[datetime] = None
    until: Optional[datetime] = None


def _resolve_path(variant_cls: type, dotted: str) -> Optional[tuple[FieldSpec, ...]]:
    """Resolve a dotted path; person-or-organization hops try both sides."""

    def step(classes: tuple[type, ...], parts: list[str]):
        if not parts:
            return None
        head, *rest = parts
        for cls in classes:
            spec = model.spec_by_element(cls, head)
            if spec is None:
                continue
            if not rest:
                return (spec,)
            nested = {
                FieldKind.PERSON: (model.Person,),
                FieldKind.PERSON_LIST: (model.Person,),
                FieldKind.ORGANIZATION: (model.Organization,),
                FieldKind.ORG_LIST: (model.Organization,),
                FieldKind.LOCATION: (model.Location,),
                FieldKind.MONEY: (model.Money,),
                FieldKind.ORG_OR_PERSON: (model.Organization, model.Person),
                FieldKind.ORG_OR_PERSON_LIST: (model.Organization, model.Person),
            }.get(spec.kind)
            if nested is None:
                continue
            tail = step(nested, rest)
            if tail is not None:
                return (spec,) + tail
        return None

    return step((variant_cls,), dotted.split("."))


_TOKEN_SPLIT_RE = re.compile(r'"[^"]*"|\S+')


def parse_query(text: str) -> QueryExpr:
    """Parse query surface syntax; errors carry the offending position."""
    tokens = [(m.group(), m.start()) for m in _TOKEN_SPLIT_RE.finditer(text)]
    if not tokens:
        raise QueryError("empty query")
    variant: Optional[str] = None
    predicates: list[Predicate] = []
    sort_path = None
    sort_specs: tuple[FieldSpec, ...] = ()
    sort_order = SortOrder.ASC
    since = until = None
    i = 0

    def parse_stamp(token: str, pos: int) -> datetime:
        try:
            stamp = datetime.strptime(token, model.TIMESTAMP_FORMAT)
        except ValueError:
            raise QueryError(f"bad timestamp {token!r} (want YYYYMMDDTHHMMSSZ)",
                             pos) from None
        return stamp.replace(tzinfo=timezone.utc)

    def split_variant(dotted: str, pos: int):
        nonlocal variant
        parts = dotted.split(".", 1)
        name = parts[0]
        if name not in model.EVENT_TYPES:
            raise QueryError(f"unknown event type {name!r}", pos)
        if variant is None:
            variant = name
        elif variant != name:
            raise QueryError(
                f"all predicates must use one event type ({variant}), got {name}", pos)
        return parts[1] if len(parts) > 1 else None

    while i < len(tokens):
        token, pos = tokens[i]
        lower = token.lower()
        if lower == "and":
            i += 1
            continue
        if lower == "sort":
            if i + 1 >= len(tokens):
                raise QueryError("sort needs a field path", pos)
            path_token, path_pos = tokens[i + 1]
            i += 2
            if i < len(tokens) and tokens[i][0].lower() in ("asc", "desc"):
                sort_order = SortOrder(tokens[i][0].lower())
                i += 1
            if path_token == "DatelineTime":
                sort_path = "DatelineTime"
                continue
            rel = split_variant(path_token, path_pos)
            if rel is None:
                raise QueryError("sort path needs a field", path_pos)
            specs = _resolve_path(model.EVENT_TYPES[variant], rel)
            if specs is None:
                raise QueryError(f"unknown field path {path_token!r}", path_pos)
            if specs[-1].kind not in _ORDERABLE:
                raise QueryError(
                    f"sort field {path_token!r} is not numeric, date, or money",
                    path_pos)
            sort_path, sort_specs = rel, specs
            continue
        if lower == "since" or lower == "until":
            if i + 1 >= len(tokens):
                raise QueryError(f"{lower} needs a timestamp", pos)
            stamp = parse_stamp(tokens[i + 1][0], tokens[i + 1][1])
            if lower == "since":
                since = stamp
            else:
                until = stamp
            i += 2
            continue
        # predicate: Path OP value, or a bare variant name
        rel = split_variant(token, pos)
        if rel is None:
            i += 1
            continue
        if i + 2 >= len(tokens):
            raise QueryError(f"predicate on {token!r} needs an operator and value", pos)
        op_token, op_pos = tokens[i + 1]
        value_token, _ = tokens[i + 2]
        if op_token not in _ALL_OPS:
            raise QueryError(f"unknown operator {op_token!r}", op_pos)
        specs = _resolve_path(model.EVENT_TYPES[variant], rel)
        if specs is None:
            raise QueryError(f"unknown field path {token!r}", pos)
        kind = specs[-1].kind
        if op_token in _COMPARE_OPS and kind not in _ORDERABLE:
            raise QueryError(
                f"operator {op_token!r} needs a numeric, date, or money field", op_pos)
        if kind is FieldKind.MONEY and op_token != "contains" \
                and not _MONEY_LITERAL_RE.match(value_token):
            raise QueryError(
                f"money literal must look like USD:100.50, got {value_token!r}", pos)
        predicates.append(Predicate(rel, op_token, value_token.strip('"'), specs))
        i += 3
    if variant is None:
        raise QueryError("query names no event type")
    return QueryExpr(variant=variant, predicates=tuple(predicates),
                     sort_path=sort_path, sort_specs=sort_specs,
                     sort_order=sort_order, since=since, until=until)


# -- evaluation --------------------------------------------------------------

def _values_at(event, specs: tuple[FieldSpec, ...]):
    """All populated values at a path; lists and either-type hops fan out."""
    values = [event]
    for spec in specs:
        next_values = []
        for value in values:
            if value is None:
                continue
            item = getattr(value, spec.attr, None)
            if item is None:
                continue
            if isinstance(item, tuple):
                next_values.extend(item)
            else:
                next_values.append(item)
        values = next_values
    return [v for v in values if v is not None]


def _predicate_holds(pred: Predicate, event) -> bool:
    spec = pred.specs[-1]
    kind = spec.kind
    values = _values_at(event, pred.specs)
    if not values:
        return False
    op = pred.op
    for value in values:
        if op == "contains":
            if isinstance(value, Money):
                token = f"{value.currency}:{_norm_number(value.amount)}"
            elif kind is FieldKind.MEASURE:
                token = f"{_norm_number(value.value)} {value.unit}"
            else:
                token = model.leaf_token(spec, value)
            if pred.value.lower() in token.lower():
                return True
            continue
        if kind is FieldKind.MEASURE:
            lhs = f"{_norm_number(value.value)} {value.unit}"
            if op == "=" and lhs == pred.value:
                return True
            if op == "!=" and lhs != pred.value:
                return True
            continue
        if kind is FieldKind.MONEY:
            match = _MONEY_LITERAL_RE.match(pred.value)
            currency, amount = match.group(1), Decimal(match.group(2))
            if value.currency != currency:
                raise QueryError(
                    f"cannot compare {value.currency} amount with {currency} literal")
            lhs, rhs = value.amount, amount
        elif kind is FieldKind.INT:
            try:
                lhs, rhs = Decimal(value), Decimal(pred.value)
            except InvalidOperation:
                continue
        elif kind is FieldKind.DECIMAL:
            try:
                lhs, rhs = value, Decimal(pred.value)
            except InvalidOperation:
                continue
        elif kind is FieldKind.TIMESTAMP:
            try:
                rhs = datetime.strptime(pred.value, model.TIMESTAMP_FORMAT)
            except ValueError:
                continue
            lhs, rhs = value, rhs.replace(tzinfo=timezone.utc)
        else:
            lhs, rhs = model.leaf_token(spec, value), pred.value
        if op == "=" and lhs == rhs:
            return True
        if op == "!=" and lhs != rhs:
            return True
        if op == "<" and lhs < rhs:
            return True
        if op == "<=" and lhs <= rhs:
            return True
        if op == ">" and lhs > rhs:
            return True
        if op == ">=" and lhs >= rhs:
            return True
    return False


def _event_matches(query: QueryExpr, event) -> bool:
    return all(_predicate_holds(pred, event) for pred in query.predicates)


def _doc_in_window(query: QueryExpr, doc: IndexedDoc) -> bool:
    if query.since is None and query.until is None:
        return True
    stamp = doc.form.head.dateline_time
    if stamp is None:
        return False
    if query.since is not None and stamp < query.since:
        return False
    if query.until is not None and stamp > query.until:
        return False
    return True


def _matching_events(query: QueryExpr, doc: IndexedDoc) -> list:
    cls = model.EVENT_TYPES[query.variant]
    return [event for event in doc.form.events
            if isinstance(event, cls) and _event_matches(query, event)]


@dataclass(frozen=True)
class QueryHit:
    doc_id: str
    path: str
    sort_value: str  # "-" when the doc has no value for the sort key


def _candidate_ids(index: CorpusIndex, query: QueryExpr) -> Optional[set[str]]:
    """Posting-list intersection for equality predicates; None = all docs."""
    candidates: Optional[set[str]] = None
    for pred in query.predicates:
        if pred.op != "=" or pred.specs[-1].kind is FieldKind.MONEY:
            continue
        kind = pred.specs[-1].kind
        if kind in (FieldKind.INT, FieldKind.DECIMAL):
            try:
                token = _norm_number(Decimal(pred.value))
            except InvalidOperation:
                token = pred.value
        else:
            token = pred.value
        ids = index.postings.get((query.variant, pred.path, token), set())
        candidates = ids if candidates is None else candidates & ids
    return candidates


def evaluate_query(index: CorpusIndex, query: QueryExpr) -> list[QueryHit]:
    candidates = _candidate_ids(index, query)
    hits = []
    for doc in index.docs:
        if candidates is not None and doc.doc_id not in candidates:
            continue
        if not _doc_in_window(query, doc):
            continue
        events = _matching_events(query, doc)
        if not events:
            continue
        sort_key = None
        if query.sort_path == "DatelineTime":
            stamp = doc.form.head.dateline_time
            if stamp is not None:
                sort_key = stamp
        elif query.sort_path is not None:
            for event in events:
                values = _values_at(event, query.sort_specs)
                if values:
                    sort_key = values[0]
                    break
        if sort_key is None:
            display = "-"
        elif isinstance(sort_key, Money):
            display = f"{sort_key.currency}:{_norm_number(sort_key.amount)}"
        elif isinstance(sort_key, datetime):
            display = sort_key.strftime(model.TIMESTAMP_FORMAT)
        else:
            display = _norm_number(sort_key)
        hits.append((sort_key, QueryHit(doc.doc_id, doc.path, display)))
    if query.sort_path is not None:
        def order_key(pair):
            sort_key, hit = pair
            if sort_key is None:
                return (1, 0)
            value = sort_key.amount if isinstance(sort_key, Money) else sort_key
            if isinstance(value, datetime):
                value = value.timestamp()
            value = float(value)
            return (0, -value if query.sort_order is SortOrder.DESC else value)
        hits.sort(key=order_key)  # stable: equal keys keep doc order
    return [hit for _, hit in hits]


def query(index: CorpusIndex, q: QueryExpr) -> list[str]:
    """Ordered ids of the documents with at least one fully matching event."""
    return [hit.doc_id for hit in evaluate_query(index, q)]


# ---------------------------------------------------------------------------
# Statistics

class Bucket(Enum):
    DAY = "day"
    WEEK = "week"


@dataclass(frozen=True)
class StatsResult:
    buckets: tuple[tuple[datetime, int], ...]
    undated: int


def _bucket_start(stamp: datetime, bucket: Bucket) -> datetime:
    day = datetime(stamp.year, stamp.month, stamp.day, tzinfo=timezone.utc)
    if bucket is Bucket.WEEK:
        return day - timedelta(days=day.weekday())
    return day


def stats(index: CorpusIndex, variant: str, bucket: Bucket) -> StatsResult:
    """Events of one type per UTC day or week; gaps inside the covered
    range appear with count 0; undated documents are tallied separately."""
    if variant not in model.EVENT_TYPES:
        raise QueryError(f"unknown event type {variant!r}")
    cls = model.EVENT_TYPES[variant]
    counts: dict[datetime, int] = {}
    undated = 0
    for doc in index.docs:
        n = sum(1 for event in doc.form.events if isinstance(event, cls))
        if n == 0:
            continue
        stamp = doc.form.head.dateline_time
        if stamp is None:
            undated += n
            continue
        start = _bucket_start(stamp, bucket)
        counts[start] = counts.get(start, 0) + n
    if not counts:
        return StatsResult(buckets=(), undated=undated)
    step = timedelta(days=7 if bucket is Bucket.WEEK else 1)
    current = min(counts)
    last = max(counts)
    out = []
    while current <= last:
        out.append((current, counts.get(current, 0)))
        current += step
    return StatsResult(buckets=tuple(out), undated=undated)


# ---------------------------------------------------------------------------
# Geographic distribution

@dataclass(frozen=True)
class GeoDistribution:
    per_country: tuple[tuple[str, tuple[int, int, int]], ...]  # sorted by code
    unlocated: tuple[int, int, int]

    def total(self) -> int:
        return sum(sum(c) for _, c in self.per_country) + sum(self.unlocated)


def resolve_event_country(event) -> Optional[str]:
    """Country of an event: its location, destination, or a party's origin."""
    for attr in ("at_location", "to_location"):
        location = getattr(event, attr, None)
        if location is not None and location.country:
            return location.country
    for spec in model.specs_for(type(event)):
        if spec.kind in (FieldKind.PERSON, FieldKind.ORG_OR_PERSON):
            value = getattr(event, spec.attr)
            if isinstance(value, model.Person) and value.country:
                return value.country
        elif spec.kind in (FieldKind.PERSON_LIST, FieldKind.ORG_OR_PERSON_LIST):
            for item in getattr(event, spec.attr):
                if isinstance(item, model.Person) and item.country:
                    return item.country
    return None


def geo_distribution(index: CorpusIndex, query_expr: QueryExpr) -> GeoDistribution:
    """Bucket matched events by country and sentiment."""
    tallies: dict[Optional[str], list[int]] = {}
    for doc in index.docs:
        if not _doc_in_window(query_expr, doc):
            continue
        for event in _matching_events(query_expr, doc):
            country = resolve_event_country(event)
            slot = {Sentiment.POSITIVE: 0, Sentiment.NEGATIVE: 1,
                    Sentiment.OTHER: 2}[model.classify_sentiment(event)]
            tallies.setdefault(country, [0, 0, 0])[slot] += 1
    unlocated = tuple(tallies.pop(None, [0, 0, 0]))
    per_country = tuple(sorted((code, tuple(counts))
                               for code, counts in tallies.items()))
    return GeoDistribution(per_country=per_country, unlocated=unlocated)
