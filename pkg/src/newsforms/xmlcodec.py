"""Parsing and canonical serialization of news-event documents as XML.

Input is liberal: children may appear in any order, person-or-organization
fields may spell the value inline or wrapped in an explicit ``<Person>`` /
``<Organization>`` element, and "Martial Arts" is accepted for the
MartialArts sport token.

Output is canonical and byte-deterministic: UTF-8, no XML declaration, no
attributes, 2-space indentation, children in each type's fixed order.
Person, organization, money, and measure values occupy a single line;
locations and the document structure are block-indented. A value that
carries only fields shared by Person and Organization (Email, URL) cannot
be re-inferred from an inline spelling, so the canonical form wraps it
explicitly; everything else is inline.
"""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from datetime import datetime, timezone
from decimal import Decimal
from typing import Union
from xml.sax.saxutils import escape

from . import model
from .model import (
    FieldKind,
    Head,
    Location,
    Measure,
    Money,
    NewsForm,
    Organization,
    Person,
    format_decimal,
)

FILE_EXTENSION = ".newsform.xml"

_INT_RE = re.compile(r"^[-+]?\d+$")
_DECIMAL_RE = re.compile(r"^[-+]?\d+(\.\d+)?$")
_MEASURE_RE = re.compile(r"^([-+]?\d+(?:\.\d+)?)\s+(\S+)$")

_PERSON_ONLY = {s.element for s in model.specs_for(Person)} - {"Email", "URL"}
_ORG_ONLY = {s.element for s in model.specs_for(Organization)} - {"Email", "URL"}


class XmlSyntaxError(ValueError):
    """Malformed XML; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class SchemaError(ValueError):
    """Well-formed XML that does not fit the document schema."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class FieldTypeError(ValueError):
    """Leaf text that does not parse as the field's type."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


class SerializeError(ValueError):
    """Refusal to serialize a document whose validation report has errors."""

    def __init__(self, report: model.ValidationReport):
        first = report.errors[0]
        super().__init__(
            f"document has {len(report.errors)} validation error(s); "
            f"first: {first.path}: {first.message}"
        )
        self.report = report


# ---------------------------------------------------------------------------
# Parsing

def parse_newsform(text: Union[str, bytes]) -> NewsForm:
    """Parse document XML into its typed form.

    Whitespace between elements is insignificant; numeric and enum leaf
    text is normalized into typed fields. Unknown vocabulary tokens are
    kept verbatim for :func:`model.validate` to report.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        line, column = exc.position
        raise XmlSyntaxError(exc.msg.split(":")[0], line, column) from None
    if root.tag != "NewsForm":
        raise SchemaError("", f"root element must be NewsForm, not {root.tag}")
    _reject_attributes(root, "NewsForm")
    _reject_text(root, "NewsForm")

    head = Head()
    seen_head = False
    events = []
    event_total = sum(1 for child in root if child.tag != "Head")
    event_no = 0
    for child in root:
        if child.tag == "Head":
            if seen_head:
                raise SchemaError("Head", "duplicate Head element")
            seen_head = True
            head = _parse_record(child, Head, "Head")
        elif child.tag in model.EVENT_TYPES:
            event_no += 1
            path = f"{child.tag}[{event_no}]" if event_total > 1 else child.tag
            events.append(_parse_record(child, model.EVENT_TYPES[child.tag], path))
        else:
            raise SchemaError(child.tag, f"unknown element <{child.tag}>")
    return NewsForm(head=head, events=tuple(events))


def read_newsform(path) -> NewsForm:
    with open(path, "rb") as fh:
        return parse_newsform(fh.read())


def _reject_attributes(elem: ET.Element, path: str):
    if elem.attrib:
        name = next(iter(elem.attrib))
        raise SchemaError(path, f"attributes are not allowed ({name!r})")


def _reject_text(elem: ET.Element, path: str):
    if elem.text and elem.text.strip():
        raise SchemaError(path, "unexpected text content")
    for child in elem:
        if child.tail and child.tail.strip():
            raise SchemaError(path, "unexpected text content")


def _parse_record(elem: ET.Element, cls: type, path: str):
    _reject_attributes(elem, path)
    _reject_text(elem, path)
    values: dict[str, object] = {}
    for child in elem:
        spec = model.spec_by_element(cls, child.tag)
        if spec is None:
            raise SchemaError(f"{path}/{child.tag}", f"unknown element <{child.tag}>")
        child_path = f"{path}/{child.tag}"
        parsed = _parse_field(child, spec, child_path)
        if spec.kind in model.LIST_KINDS:
            values.setdefault(spec.attr, []).append(parsed)
        elif spec.attr in values:
            raise SchemaError(child_path, f"<{child.tag}> may appear at most once")
        else:
            values[spec.attr] = parsed
    for attr, value in values.items():
        if isinstance(value, list):
            values[attr] = tuple(value)
    try:
        return cls(**values)
    except TypeError as exc:
        raise SchemaError(path, str(exc)) from None


def _leaf_text(elem: ET.Element, path: str) -> str:
    _reject_attributes(elem, path)
    if len(elem):
        raise SchemaError(path, f"<{elem.tag}> must not contain child elements")
    return (elem.text or "").strip()


def _parse_field(elem: ET.Element, spec: model.FieldSpec, path: str):
    kind = spec.kind
    if kind in (FieldKind.TEXT, FieldKind.TOKEN, FieldKind.COUNTRY,
                FieldKind.STATE, FieldKind.CURRENCY, FieldKind.TICKER):
        return _leaf_text(elem, path)
    if kind is FieldKind.INT:
        text = _leaf_text(elem, path)
        if not _INT_RE.match(text):
            raise FieldTypeError(path, f"not an integer: {text!r}")
        return int(text)
    if kind is FieldKind.DECIMAL:
        text = _leaf_text(elem, path)
        if not _DECIMAL_RE.match(text):
            raise FieldTypeError(path, f"not a decimal number: {text!r}")
        return Decimal(text)
    if kind is FieldKind.TIMESTAMP:
        text = _leaf_text(elem, path)
        try:
            stamp = datetime.strptime(text, model.TIMESTAMP_FORMAT)
        except ValueError:
            raise FieldTypeError(
                path, f"not a basic-format UTC timestamp (YYYYMMDDTHHMMSSZ): {text!r}"
            ) from None
        return stamp.replace(tzinfo=timezone.utc)
    if kind is FieldKind.ENUM:
        text = _leaf_text(elem, path)
        try:
            return spec.enum(text)
        except ValueError:
            return text  # kept verbatim; validate() reports the vocabulary error
    if kind is FieldKind.MEASURE:
        text = _leaf_text(elem, path)
        match = _MEASURE_RE.match(text)
        if not match:
            raise FieldTypeError(path, f"not a 'value unit' measure: {text!r}")
        return Measure(Decimal(match.group(1)), match.group(2))
    if kind is FieldKind.MONEY:
        return _parse_money(elem, path)
    if kind is FieldKind.LOCATION:
        return _parse_record(elem, Location, path)
    if kind in (FieldKind.PERSON, FieldKind.PERSON_LIST):
        return _parse_record(elem, Person, path)
    if kind in (FieldKind.ORGANIZATION, FieldKind.ORG_LIST):
        return _parse_record(elem, Organization, path)
    if kind in (FieldKind.ORG_OR_PERSON, FieldKind.ORG_OR_PERSON_LIST):
        return _parse_org_or_person(elem, path)
    raise AssertionError(f"unhandled field kind {kind}")


def _parse_money(elem: ET.Element, path: str) -> Money:
    _reject_attributes(elem, path)
    _reject_text(elem, path)
    amount = None
    currency = None
    for child in elem:
        child_path = f"{path}/{child.tag}"
        if child.tag == "Amount":
            if amount is not None:
                raise SchemaError(child_path, "<Amount> may appear at most once")
            text = _leaf_text(child, child_path)
            if not _DECIMAL_RE.match(text):
                raise FieldTypeError(child_path, f"not a decimal amount: {text!r}")
            amount = Decimal(text)
        elif child.tag == "Currency":
            if currency is not None:
                raise SchemaError(child_path, "<Currency> may appear at most once")
            currency = _leaf_text(child, child_path)
        else:
            raise SchemaError(child_path, f"unknown element <{child.tag}>")
    if amount is None or currency is None:
        raise SchemaError(path, "money needs both <Amount> and <Currency>")
    return Money(amount, currency)


def _parse_org_or_person(elem: ET.Element, path: str):
    """A person-or-organization field: wrapped or inline spelling."""
    children = list(elem)
    if len(children) == 1 and children[0].tag in ("Person", "Organization"):
        _reject_attributes(elem, path)
        _reject_text(elem, path)
        inner = children[0]
        cls = Person if inner.tag == "Person" else Organization
        return _parse_record(inner, cls, f"{path}/{inner.tag}")
    names = {child.tag for child in children}
    has_person = bool(names & _PERSON_ONLY)
    has_org = bool(names & _ORG_ONLY)
    if has_person and has_org:
        raise SchemaError(path, "mixes Person-only and Organization-only children")
    # Only shared children (Email/URL) or empty: read as Person. The
    # canonical serializer never emits that ambiguous inline form.
    cls = Organization if has_org else Person
    return _parse_record(elem, cls, path)


# ---------------------------------------------------------------------------
# Serialization

def serialize_newsform(doc: NewsForm) -> str:
    """Emit canonical XML for a valid document.

    ``parse_newsform(serialize_newsform(doc)) == doc`` for every valid
    document, and serializing a document parsed from canonical input
    reproduces the input byte for byte.
    """
    report = model.validate(doc)
    if report.errors:
        raise SerializeError(report)
    lines = ["<NewsForm>"]
    if doc.head.dateline_time is None:
        lines.append("  <Head/>")
    else:
        stamp = doc.head.dateline_time.strftime(model.TIMESTAMP_FORMAT)
        lines.append("  <Head>")
        lines.append(f"    <DatelineTime>{stamp}</DatelineTime>")
        lines.append("  </Head>")
    for event in doc.events:
        _write_record(lines, event, model.ELEMENT_OF_EVENT[type(event)], "  ")
    lines.append("</NewsForm>")
    return "\n".join(lines) + "\n"


def _leaf_value_text(spec: model.FieldSpec, value) -> str:
    if spec.kind is FieldKind.TIMESTAMP:
        return value.strftime(model.TIMESTAMP_FORMAT)
    if isinstance(value, Decimal):
        return format_decimal(value)
    return escape(model.leaf_token(spec, value))


def _inline(element: str, record) -> str:
    """Single-line form used for person/organization/money values."""
    if isinstance(record, Money):
        return (f"<{element}><Amount>{format_decimal(record.amount)}</Amount>"
                f"<Currency>{escape(record.currency)}</Currency></{element}>")
    parts = []
    for spec in model.specs_for(type(record)):
        value = getattr(record, spec.attr)
        if value is None:
            continue
        parts.append(f"<{spec.element}>{_leaf_value_text(spec, value)}</{spec.element}>")
    if not parts:
        return f"<{element}/>"
    return f"<{element}>{''.join(parts)}</{element}>"


def _needs_wrapper(record) -> bool:
    discriminating = _PERSON_ONLY if isinstance(record, Person) else _ORG_ONLY
    for spec in model.specs_for(type(record)):
        if spec.element in discriminating and getattr(record, spec.attr) is not None:
            return False
    return True


def _inline_org_or_person(element: str, record) -> str:
    if _needs_wrapper(record):
        kind = "Person" if isinstance(record, Person) else "Organization"
        inner = _inline(kind, record)
        return f"<{element}>{inner}</{element}>"
    return _inline(element, record)


def _write_record(lines: list[str], record, element: str, indent: str):
    specs = model.specs_for(type(record))
    populated = [(s, getattr(record, s.attr)) for s in specs]
    populated = [(s, v) for s, v in populated if v is not None and v != ()]
    if not populated:
        lines.append(f"{indent}<{element}/>")
        return
    lines.append(f"{indent}<{element}>")
    inner = indent + "  "
    for spec, value in populated:
        kind = spec.kind
        if kind in model.LEAF_KINDS:
            lines.append(f"{inner}<{spec.element}>{_leaf_value_text(spec, value)}</{spec.element}>")
        elif kind is FieldKind.MEASURE:
            text = f"{format_decimal(value.value)} {escape(value.unit)}"
            lines.append(f"{inner}<{spec.element}>{text}</{spec.element}>")
        elif kind is FieldKind.MONEY:
            lines.append(inner + _inline(spec.element, value))
        elif kind in (FieldKind.PERSON, FieldKind.ORGANIZATION):
            lines.append(inner + _inline(spec.element, value))
        elif kind is FieldKind.ORG_OR_PERSON:
            lines.append(inner + _inline_org_or_person(spec.element, value))
        elif kind is FieldKind.LOCATION:
            _write_record(lines, value, spec.element, inner)
        elif kind is FieldKind.PERSON_LIST:
            for person in value:
                lines.append(inner + _inline(spec.element, person))
        elif kind is FieldKind.ORG_LIST:
            for org in value:
                lines.append(inner + _inline(spec.element, org))
        elif kind is FieldKind.ORG_OR_PERSON_LIST:
            for item in value:
                lines.append(inner + _inline_org_or_person(spec.element, item))
        else:
            raise AssertionError(f"unhandled field kind {kind}")
    lines.append(f"{indent}</{element}>")
