"""Pattern rules: from resolved sentence parses to event records.

A rule file holds ``pattern => template`` rules, one per line-group
(blank lines separate groups, ``#`` starts a comment line). Pattern atoms:

* a bare word            literal token, matched case-insensitively
* ``?Kind`` / ``?Kind:v``  slot binding a mention that carries a reading
                           of that kind; other readings are discarded
* ``[ ... ]``            optional atom group
* ``*n``                 skip up to n items

The template is an event-element XML fragment whose leaves are either
constant tokens or ``?var`` placeholders. Rules with more literals match
first; file order breaks ties. Fragments of one event type merge into a
single record per document, earliest sentence winning conflicts. A
commonsense knowledge base then vets the merged events.
"""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field, replace
from decimal import Decimal
from pathlib import Path
from typing import Optional, Sequence, Union

from . import model, xmlcodec
from .lexicons import LexiconSet
from .model import FieldKind, FieldSpec, NewsForm
from .pipeline import ReadingKind, SentenceParse, analyze
from .pipeline.types import EntityMention, EntityReading


class RuleError(ValueError):
    """Rule or knowledge-base source that does not compile."""

    def __init__(self, rule_id: str, message: str):
        super().__init__(f"{rule_id}: {message}")
        self.rule_id = rule_id


@dataclass(frozen=True)
class Diagnostic:
    stage: str
    rule_id: Optional[str]
    action: str
    detail: str

    def line(self) -> str:
        return f"{self.stage}\t{self.rule_id or '-'}\t{self.action}\t{self.detail}"


# ---------------------------------------------------------------------------
# Pattern atoms

@dataclass(frozen=True)
class Literal:
    text: str


@dataclass(frozen=True)
class Slot:
    kind: ReadingKind
    var: str


@dataclass(frozen=True)
class OptionalGroup:
    atoms: tuple


@dataclass(frozen=True)
class Skip:
    limit: int


Atom = Union[Literal, Slot, OptionalGroup, Skip]


# ---------------------------------------------------------------------------
# Templates

@dataclass(frozen=True)
class VarRef:
    var: str


@dataclass(frozen=True)
class Composite:
    cls: type
    parts: tuple  # of (FieldSpec, VarRef | Composite | constant value)


@dataclass(frozen=True)
class Template:
    event_cls: type
    parts: tuple  # of (FieldSpec, VarRef | Composite | constant value)


@dataclass(frozen=True)
class ExtractionRule:
    rule_id: str
    atoms: tuple
    template: Template
    priority: int
    order: int

    @property
    def slots(self) -> dict:
        out = {}
        def walk(atoms):
            for atom in atoms:
                if isinstance(atom, Slot):
                    out[atom.var] = atom.kind
                elif isinstance(atom, OptionalGroup):
                    walk(atom.atoms)
        walk(self.atoms)
        return out


_SLOT_RE = re.compile(r"^\?([A-Za-z]+)(?::([A-Za-z][A-Za-z0-9_]*))?$")
_SKIP_RE = re.compile(r"^\*(\d+)$")

# slot kinds a field can absorb; TEXT/TOKEN/ENUM checked at instantiation
_FIELD_SLOT_KINDS = {
    FieldKind.PERSON: {ReadingKind.PERSON},
    FieldKind.PERSON_LIST: {ReadingKind.PERSON},
    FieldKind.ORGANIZATION: {ReadingKind.ORGANIZATION},
    FieldKind.ORG_LIST: {ReadingKind.ORGANIZATION},
    FieldKind.ORG_OR_PERSON: {ReadingKind.PERSON, ReadingKind.ORGANIZATION},
    FieldKind.ORG_OR_PERSON_LIST: {ReadingKind.PERSON, ReadingKind.ORGANIZATION},
    FieldKind.LOCATION: {ReadingKind.LOCATION},
    FieldKind.MONEY: {ReadingKind.MONEY},
    FieldKind.INT: {ReadingKind.NUMBER},
    FieldKind.DECIMAL: {ReadingKind.NUMBER, ReadingKind.PERCENT},
    FieldKind.MEASURE: {ReadingKind.DURATION, ReadingKind.TEMPERATURE,
                        ReadingKind.SPEED, ReadingKind.DISTANCE},
    FieldKind.COUNTRY: {ReadingKind.LOCATION},
    FieldKind.STATE: {ReadingKind.LOCATION},
    FieldKind.CURRENCY: {ReadingKind.MONEY},
    FieldKind.TICKER: {ReadingKind.ORGANIZATION},
}


def _parse_pattern(rule_id: str, source: str) -> tuple:
    tokens = re.findall(r"\[|\]|[^\s\[\]]+", source)
    atoms: list[Atom] = []
    stack: Optional[list[Atom]] = None
    for token in tokens:
        if token == "[":
            if stack is not None:
                raise RuleError(rule_id, "optional groups do not nest")
            stack = []
            continue
        if token == "]":
            if stack is None:
                raise RuleError(rule_id, "unbalanced ']'")
            if not stack:
                raise RuleError(rule_id, "empty optional group")
            atoms.append(OptionalGroup(tuple(stack)))
            stack = None
            continue
        target = stack if stack is not None else atoms
        if token.startswith("?"):
            match = _SLOT_RE.match(token)
            if not match:
                raise RuleError(rule_id, f"bad slot syntax {token!r}")
            kind_name, var = match.group(1), match.group(2)
            try:
                kind = ReadingKind(kind_name)
            except ValueError:
                raise RuleError(rule_id, f"unknown slot kind {kind_name!r}") from None
            target.append(Slot(kind, var or kind_name))
        elif token.startswith("*"):
            match = _SKIP_RE.match(token)
            if not match:
                raise RuleError(rule_id, f"bad skip syntax {token!r}")
            target.append(Skip(int(match.group(1))))
        else:
            target.append(Literal(token))
    if stack is not None:
        raise RuleError(rule_id, "unbalanced '['")
    if not atoms:
        raise RuleError(rule_id, "empty pattern")
    return tuple(atoms)


def _literal_count(atoms) -> int:
    count = 0
    for atom in atoms:
        if isinstance(atom, Literal):
            count += 1
        elif isinstance(atom, OptionalGroup):
            count += _literal_count(atom.atoms)
    return count


def _compile_template_value(rule_id, spec: FieldSpec, elem: ET.Element, slots):
    children = list(elem)
    text = (elem.text or "").strip()
    if not children and text.startswith("?"):
        var = text[1:]
        if var not in slots:
            raise RuleError(rule_id, f"unbound template variable ?{var}")
        allowed = _FIELD_SLOT_KINDS.get(spec.kind)
        if allowed is not None and slots[var] not in allowed:
            raise RuleError(
                rule_id,
                f"slot ?{var} has kind {slots[var].value}, incompatible with "
                f"element <{spec.element}>",
            )
        return VarRef(var)
    if spec.kind in model.LEAF_KINDS or spec.kind is FieldKind.MEASURE:
        if children:
            raise RuleError(rule_id, f"<{spec.element}> must hold a value, not elements")
        try:
            value = xmlcodec._parse_field(elem, spec, spec.element)
        except ValueError as exc:
            raise RuleError(rule_id, f"bad constant for <{spec.element}>: {exc}") from None
        if spec.kind in model.LEAF_KINDS:
            findings: list = []
            model._check_leaf(findings, spec.element, spec, value)
            if findings:
                raise RuleError(
                    rule_id, f"bad constant for <{spec.element}>: {findings[0].message}")
        return value
    # composite constant or mixed composite with variable leaves
    cls = {
        FieldKind.MONEY: model.Money,
        FieldKind.PERSON: model.Person,
        FieldKind.PERSON_LIST: model.Person,
        FieldKind.ORGANIZATION: model.Organization,
        FieldKind.ORG_LIST: model.Organization,
        FieldKind.LOCATION: model.Location,
    }.get(spec.kind)
    if cls is None:
        # person-or-organization fields accept a wrapped constant only
        try:
            return xmlcodec._parse_field(elem, spec, spec.element)
        except ValueError as exc:
            raise RuleError(rule_id, f"bad constant for <{spec.element}>: {exc}") from None
    if any((child.text or "").strip().startswith("?") for child in children):
        parts = []
        for child in children:
            child_spec = model.spec_by_element(cls, child.tag)
            if child_spec is None:
                raise RuleError(rule_id, f"<{child.tag}> is not a schema element")
            parts.append((child_spec, _compile_template_value(rule_id, child_spec, child, slots)))
        return Composite(cls, tuple(parts))
    try:
        return xmlcodec._parse_field(elem, spec, spec.element)
    except ValueError as exc:
        raise RuleError(rule_id, f"bad constant for <{spec.element}>: {exc}") from None


def _compile_template(rule_id: str, source: str, slots) -> Template:
    try:
        root = ET.fromstring(source)
    except ET.ParseError as exc:
        raise RuleError(rule_id, f"template is not well-formed XML: {exc.msg}") from None
    if root.tag not in model.EVENT_TYPES:
        raise RuleError(rule_id, f"<{root.tag}> is not an event element")
    event_cls = model.EVENT_TYPES[root.tag]
    parts = []
    for child in root:
        spec = model.spec_by_element(event_cls, child.tag)
        if spec is None:
            raise RuleError(rule_id, f"<{child.tag}> is not a schema element of <{root.tag}>")
        parts.append((spec, _compile_template_value(rule_id, spec, child, slots)))
    if not parts:
        raise RuleError(rule_id, "template sets no fields")
    return Template(event_cls, tuple(parts))


def compile_rules(source: str) -> list[ExtractionRule]:
    """Compile a rule file; raises RuleError naming the offending rule."""
    groups: list[list[str]] = [[]]
    for raw in source.splitlines():
        line = raw.rstrip()
        if line.lstrip().startswith("#"):
            continue
        if not line.strip():
            if groups[-1]:
                groups.append([])
            continue
        groups[-1].append(line.strip())
    rules = []
    order = 0
    for group in groups:
        if not group:
            continue
        order += 1
        rule_id = f"r{order:03d}"
        joined = " ".join(group)
        if "=>" not in joined:
            raise RuleError(rule_id, "missing '=>' between pattern and template")
        pattern_src, template_src = joined.split("=>", 1)
        atoms = _parse_pattern(rule_id, pattern_src.strip())
        slots = {}
        def collect(atom_seq):
            for atom in atom_seq:
                if isinstance(atom, Slot):
                    if atom.var in slots:
                        raise RuleError(rule_id, f"duplicate slot variable ?{atom.var}")
                    slots[atom.var] = atom.kind
                elif isinstance(atom, OptionalGroup):
                    collect(atom.atoms)
        collect(atoms)
        template = _compile_template(rule_id, template_src.strip(), slots)
        rules.append(ExtractionRule(rule_id, atoms, template,
                                    priority=_literal_count(atoms), order=order))
    return rules


def load_rules(directory) -> list[ExtractionRule]:
    """Compile every ``*.rules`` file in the directory, in name order."""
    directory = Path(directory)
    source = []
    for path in sorted(directory.glob("*.rules")):
        source.append(path.read_text(encoding="utf-8"))
    return compile_rules("\n\n".join(source))


# ---------------------------------------------------------------------------
# Pattern matching over resolved parses

@dataclass(frozen=True)
class Fragment:
    event: object
    bindings: dict
    sentence_index: int
    rule_id: str
    alternatives: dict  # attr -> tuple of alternate typed values


class _Item:
    __slots__ = ("mention", "token_index", "text")

    def __init__(self, mention=None, token_index=None, text=None):
        self.mention = mention
        self.token_index = token_index
        self.text = text


def _items_for(parse: SentenceParse) -> list[_Item]:
    items = []
    covered: dict[int, EntityMention] = {}
    for mention in parse.mentions:
        covered[mention.first] = mention
    i = 0
    while i < len(parse.tokens):
        mention = covered.get(i)
        if mention is not None:
            items.append(_Item(mention=mention))
            i = mention.last + 1
        else:
            items.append(_Item(token_index=i, text=parse.tokens[i].text))
            i += 1
    return items


def _match_at(atoms, items, pos: int) -> Optional[tuple[int, dict]]:
    """Match atoms against items starting at pos; returns (end, bindings)."""
    if not atoms:
        return pos, {}
    head, rest = atoms[0], atoms[1:]
    if isinstance(head, Literal):
        if pos < len(items) and items[pos].text is not None \
                and items[pos].text.lower() == head.text.lower():
            return _match_at(rest, items, pos + 1)
        return None
    if isinstance(head, Slot):
        if pos < len(items) and items[pos].mention is not None:
            mention = items[pos].mention
            if any(r.kind is head.kind for r in mention.readings):
                result = _match_at(rest, items, pos + 1)
                if result is not None:
                    end, bindings = result
                    return end, {head.var: mention, **bindings}
        return None
    if isinstance(head, OptionalGroup):
        with_group = _match_at(head.atoms + rest, items, pos)
        if with_group is not None:
            return with_group
        return _match_at(rest, items, pos)
    if isinstance(head, Skip):
        for skipped in range(0, head.limit + 1):
            if pos + skipped > len(items):
                break
            result = _match_at(rest, items, pos + skipped)
            if result is not None:
                return result
        return None
    raise AssertionError(f"unknown atom {head!r}")


class _BindError(Exception):
    pass


def _mention_surface(parse: SentenceParse, mention: EntityMention) -> str:
    return parse.mention_text(mention)


def _reading_for(mention: EntityMention, kind: ReadingKind) -> EntityReading:
    for reading in mention.readings:
        if reading.kind is kind:
            return reading
    raise _BindError(f"no {kind.value} reading")


def _convert(spec: FieldSpec, kind: ReadingKind, mention: EntityMention,
             parse: SentenceParse):
    reading = _reading_for(mention, kind)
    value = reading.value
    fk = spec.kind
    if fk in (FieldKind.PERSON, FieldKind.PERSON_LIST,
              FieldKind.ORGANIZATION, FieldKind.ORG_LIST,
              FieldKind.ORG_OR_PERSON, FieldKind.ORG_OR_PERSON_LIST,
              FieldKind.LOCATION, FieldKind.MONEY):
        return value
    if fk is FieldKind.INT:
        if value != value.to_integral_value():
            raise _BindError(f"{value} is not an integer count")
        return int(value)
    if fk is FieldKind.DECIMAL:
        return value
    if fk is FieldKind.MEASURE:
        return value
    if fk is FieldKind.COUNTRY:
        if isinstance(value, model.Location) and value.country:
            return value.country
        raise _BindError("location has no country code")
    if fk is FieldKind.STATE:
        if isinstance(value, model.Location) and value.state:
            return value.state
        raise _BindError("location has no state code")
    if fk is FieldKind.CURRENCY:
        return value.currency
    if fk is FieldKind.TICKER:
        if isinstance(value, model.Organization) and value.ticker:
            return value.ticker
        raise _BindError("organization has no ticker")
    if fk is FieldKind.ENUM:
        token = value if isinstance(value, str) else _mention_surface(parse, mention)
        try:
            return spec.enum(token)
        except ValueError:
            raise _BindError(f"{token!r} is not a {spec.enum.__name__} value") from None
    # TEXT / TOKEN: prefer a normalized title over raw surface
    if isinstance(value, model.Person) and value.function and not value.family \
            and not value.given:
        return value.function
    if isinstance(value, str):
        return value
    return _mention_surface(parse, mention)


def _alternate_values(spec: FieldSpec, kind: ReadingKind, mention: EntityMention):
    """Other person/organization readings a slot could have taken."""
    if spec.kind not in (FieldKind.ORG_OR_PERSON, FieldKind.ORG_OR_PERSON_LIST):
        return ()
    other = (ReadingKind.ORGANIZATION if kind is ReadingKind.PERSON
             else ReadingKind.PERSON)
    return tuple(r.value for r in mention.readings if r.kind is other)


def _instantiate(rule: ExtractionRule, bindings: dict, parse: SentenceParse,
                 sentence_index: int) -> Optional[Fragment]:
    slots = rule.slots
    values = {}
    alternatives = {}
    id_bindings = {}

    def resolve(spec: FieldSpec, part):
        if isinstance(part, VarRef):
            if part.var not in bindings:
                return None  # optional slot not matched
            mention = bindings[part.var]
            converted = _convert(spec, slots[part.var], mention, parse)
            alts = _alternate_values(spec, slots[part.var], mention)
            if alts:
                alternatives[spec.attr] = alts
            if mention.resolved_id:
                id_bindings[part.var] = mention.resolved_id
            return converted
        if isinstance(part, Composite):
            sub = {}
            for child_spec, child_part in part.parts:
                child_value = resolve(child_spec, child_part)
                if child_value is not None:
                    sub[child_spec.attr] = child_value
            if not sub:
                return None
            return part.cls(**sub)
        return part

    try:
        for spec, part in rule.template.parts:
            value = resolve(spec, part)
            if value is None:
                continue
            if spec.kind in model.LIST_KINDS and not isinstance(value, tuple):
                value = (value,)
            values[spec.attr] = value
    except _BindError:
        return None
    if not values:
        return None
    event = rule.template.event_cls(**values)
    return Fragment(event=event, bindings=id_bindings,
                    sentence_index=sentence_index, rule_id=rule.rule_id,
                    alternatives=alternatives)


def apply_patterns(parses: Sequence[SentenceParse],
                   rules: Sequence[ExtractionRule]) -> list[Fragment]:
    """Match every rule against every sentence, highest priority first."""
    ordered = sorted(rules, key=lambda r: (-r.priority, r.order))
    fragments: list[Fragment] = []
    for sentence_index, parse in enumerate(parses):
        items = _items_for(parse)
        sentence_frags: list[tuple[int, Fragment]] = []
        for rule in ordered:
            pos = 0
            while pos < len(items):
                result = _match_at(rule.atoms, items, pos)
                if result is None:
                    pos += 1
                    continue
                end, bindings = result
                fragment = _instantiate(rule, bindings, parse, sentence_index)
                if fragment is not None:
                    sentence_frags.append((pos, fragment))
                pos = max(end, pos + 1)
        sentence_frags.sort(key=lambda pair: pair[0])
        fragments.extend(frag for _, frag in sentence_frags)
    return fragments


# ---------------------------------------------------------------------------
# Fragment merging

@dataclass
class EventDraft:
    event: object
    alternatives: dict = field(default_factory=dict)


@dataclass
class MergeOutcome:
    drafts: list[EventDraft]
    warnings: list[Diagnostic]

    @property
    def events(self) -> list:
        return [draft.event for draft in self.drafts]


def merge_fragments(fragments: Sequence[Fragment]) -> MergeOutcome:
    """Merge same-type fragments into one event per type per document.

    Disjoint fields union; on conflict the earliest sentence's value is
    kept and a warning is recorded. Distinct event types never merge.
    """
    drafts: dict[type, EventDraft] = {}
    order: list[type] = []
    warnings: list[Diagnostic] = []
    for fragment in fragments:
        cls = type(fragment.event)
        if cls not in drafts:
            drafts[cls] = EventDraft(event=fragment.event,
                                     alternatives=dict(fragment.alternatives))
            order.append(cls)
            continue
        draft = drafts[cls]
        merged = {}
        for spec in model.specs_for(cls):
            mine = getattr(draft.event, spec.attr)
            theirs = getattr(fragment.event, spec.attr)
            if spec.kind in model.LIST_KINDS:
                combined = list(mine)
                for item in theirs:
                    if item not in combined:
                        combined.append(item)
                merged[spec.attr] = tuple(combined)
                continue
            if theirs is None:
                merged[spec.attr] = mine
            elif mine is None:
                merged[spec.attr] = theirs
                if spec.attr in fragment.alternatives:
                    draft.alternatives[spec.attr] = fragment.alternatives[spec.attr]
            else:
                merged[spec.attr] = mine
                if mine != theirs:
                    warnings.append(Diagnostic(
                        "merge", fragment.rule_id, "conflict",
                        f"{model.ELEMENT_OF_EVENT[cls]}/{spec.element}: kept "
                        f"{model.leaf_token(spec, mine) if spec.kind in model.LEAF_KINDS else mine} "
                        f"from an earlier sentence, ignored "
                        f"{model.leaf_token(spec, theirs) if spec.kind in model.LEAF_KINDS else theirs}",
                    ))
        draft.event = cls(**merged)
    return MergeOutcome(drafts=[drafts[cls] for cls in order], warnings=warnings)


# ---------------------------------------------------------------------------
# Commonsense knowledge base

@dataclass(frozen=True)
class Condition:
    path: str
    op: str          # set | empty | ambiguous | eq | ne | lt | gt
    value: Optional[str] = None  # token or comparison path


@dataclass(frozen=True)
class CommonsenseRule:
    rule_id: str
    variant: str
    conditions: tuple[Condition, ...]
    action: str      # RejectFragment | DropField | PreferReading
    target: Optional[str] = None


_ACTIONS = {"RejectFragment", "DropField", "PreferReading"}


def _resolve_path(cls: type, path: str):
    """Spec chain for a dotted field path, or None when it does not resolve."""
    specs = []
    current: Optional[type] = cls
    for part in path.split("."):
        if current is None:
            return None
        spec = model.spec_by_element(current, part)
        if spec is None:
            return None
        specs.append(spec)
        current = {
            FieldKind.PERSON: model.Person,
            FieldKind.ORGANIZATION: model.Organization,
            FieldKind.LOCATION: model.Location,
            FieldKind.MONEY: model.Money,
        }.get(spec.kind)
    return tuple(specs)


def _path_value(event, specs):
    value = event
    for spec in specs:
        if value is None:
            return None, specs[-1]
        value = getattr(value, spec.attr)
    if isinstance(value, tuple) and not value:
        value = None
    return value, specs[-1]


def _parse_condition(rule_id: str, variant_cls: type, atom: str) -> Condition:
    atom = atom.strip()
    for op_text, op in (("!=", "ne"), ("<", "lt"), (">", "gt"), ("=", "eq")):
        if op_text in atom:
            lhs, rhs = atom.split(op_text, 1)
            lhs, rhs = lhs.strip(), rhs.strip()
            if _resolve_path(variant_cls, lhs) is None:
                raise RuleError(rule_id, f"unknown field path {lhs!r}")
            return Condition(lhs, op, rhs)
    parts = atom.split()
    if len(parts) == 2 and parts[1] in ("set", "empty", "ambiguous"):
        path, op = parts[0], parts[1]
    elif len(parts) == 1:
        path, op = parts[0], "set"
    else:
        raise RuleError(rule_id, f"bad condition {atom!r}")
    if _resolve_path(variant_cls, path) is None:
        raise RuleError(rule_id, f"unknown field path {path!r}")
    return Condition(path, op)


def compile_kb(source: str) -> list[CommonsenseRule]:
    rules = []
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        columns = raw.split("\t")
        if len(columns) != 5:
            raise RuleError(f"kb:{lineno}", f"expected 5 columns, got {len(columns)}")
        rule_id, variant, when, action, target = (c.strip() for c in columns)
        if variant not in model.EVENT_TYPES:
            raise RuleError(rule_id, f"unknown event type {variant!r}")
        if action not in _ACTIONS:
            raise RuleError(rule_id, f"unknown action {action!r}")
        cls = model.EVENT_TYPES[variant]
        conditions = tuple(_parse_condition(rule_id, cls, atom)
                           for atom in when.split("&"))
        target_value = None if target in ("", "-") else target
        if action == "DropField":
            if target_value is None or model.spec_by_element(cls, target_value) is None:
                raise RuleError(rule_id, f"DropField target {target!r} is not a field")
        if action == "PreferReading":
            if target_value is None or ":" not in target_value:
                raise RuleError(rule_id, "PreferReading target must be Field:Kind")
            field_name, kind_name = target_value.split(":", 1)
            if model.spec_by_element(cls, field_name) is None:
                raise RuleError(rule_id, f"unknown field {field_name!r}")
            if kind_name not in ("Person", "Organization"):
                raise RuleError(rule_id, "PreferReading kind must be Person or Organization")
        rules.append(CommonsenseRule(rule_id, variant, conditions, action, target_value))
    return rules


def load_kb(directory) -> list[CommonsenseRule]:
    directory = Path(directory)
    rules = []
    for path in sorted(directory.glob("*.tsv")):
        rules.extend(compile_kb(path.read_text(encoding="utf-8")))
    return rules


def _condition_holds(cond: Condition, draft: EventDraft, cls: type) -> bool:
    specs = _resolve_path(cls, cond.path)
    value, last_spec = _path_value(draft.event, specs)
    if cond.op == "set":
        return value is not None
    if cond.op == "empty":
        return value is None
    if cond.op == "ambiguous":
        return bool(draft.alternatives.get(specs[0].attr))
    if value is None:
        return False
    token = model.leaf_token(last_spec, value)
    rhs_specs = _resolve_path(cls, cond.value) if cond.value else None
    if rhs_specs is not None:
        rhs_value, rhs_spec = _path_value(draft.event, rhs_specs)
        if rhs_value is None:
            return False
        rhs_token = model.leaf_token(rhs_spec, rhs_value)
    else:
        rhs_token = cond.value
        rhs_value = None
    if cond.op == "eq":
        return token == rhs_token
    if cond.op == "ne":
        return token != rhs_token
    lhs_num = value if isinstance(value, (int, Decimal)) else None
    rhs_num = rhs_value if isinstance(rhs_value, (int, Decimal)) else None
    if rhs_num is None and rhs_token is not None:
        try:
            rhs_num = Decimal(rhs_token)
        except ArithmeticError:
            return False
    if lhs_num is None or rhs_num is None:
        return False
    return lhs_num < rhs_num if cond.op == "lt" else lhs_num > rhs_num


def apply_commonsense(events: Sequence, kb: Sequence[CommonsenseRule]):
    """Vet merged events against the knowledge base.

    Accepts plain events or EventDrafts (drafts carry the alternative
    readings PreferReading needs). Returns the surviving events and the
    diagnostics of every fired rule. Applying twice equals applying once.
    """
    drafts = [e if isinstance(e, EventDraft) else EventDraft(event=e)
              for e in events]
    diagnostics: list[Diagnostic] = []
    survivors: list[EventDraft] = []
    for index, draft in enumerate(drafts):
        cls = type(draft.event)
        name = model.ELEMENT_OF_EVENT.get(cls)
        rejected = False
        for rule in kb:
            if rule.variant != name:
                continue
            if not all(_condition_holds(c, draft, cls) for c in rule.conditions):
                continue
            if rule.action == "RejectFragment":
                diagnostics.append(Diagnostic(
                    "commonsense", rule.rule_id, "RejectFragment",
                    f"{name}[{index + 1}] removed"))
                rejected = True
                break
            if rule.action == "DropField":
                spec = model.spec_by_element(cls, rule.target)
                cleared = () if spec.kind in model.LIST_KINDS else None
                draft.event = replace(draft.event, **{spec.attr: cleared})
                draft.alternatives.pop(spec.attr, None)
                diagnostics.append(Diagnostic(
                    "commonsense", rule.rule_id, "DropField",
                    f"{name}[{index + 1}]/{rule.target} cleared"))
            elif rule.action == "PreferReading":
                field_name, kind_name = rule.target.split(":", 1)
                spec = model.spec_by_element(cls, field_name)
                wanted = model.Organization if kind_name == "Organization" else model.Person
                alts = draft.alternatives.get(spec.attr, ())
                chosen = next((v for v in alts if isinstance(v, wanted)), None)
                if chosen is not None:
                    draft.event = replace(draft.event, **{spec.attr: chosen})
                    diagnostics.append(Diagnostic(
                        "commonsense", rule.rule_id, "PreferReading",
                        f"{name}[{index + 1}]/{field_name} rebound to {kind_name}"))
                draft.alternatives.pop(spec.attr, None)
        if not rejected:
            survivors.append(draft)
    return [d.event for d in survivors], diagnostics


# ---------------------------------------------------------------------------
# End-to-end extraction

@dataclass
class ExtractionResult:
    document: NewsForm
    diagnostics: list[Diagnostic]
    parses: list[SentenceParse]
    fragments: list[Fragment]


def extract(text: str, lexicons: LexiconSet, rules: Sequence[ExtractionRule],
            kb: Sequence[CommonsenseRule]) -> ExtractionResult:
    """Convert one story into a document: split, tag, chunk, parse
    entities, resolve references, match patterns, merge, vet, validate."""
    parses = analyze(text, lexicons)
    fragments = apply_patterns(parses, rules)
    outcome = merge_fragments(fragments)
    events, diagnostics = apply_commonsense(outcome.drafts, kb)
    diagnostics = outcome.warnings + diagnostics
    kept = []
    for event in events:
        report = model.validate(NewsForm(events=(event,)))
        if report.ok:
            kept.append(event)
        else:
            first = report.errors[0]
            diagnostics.append(Diagnostic(
                "validate", None, "dropped",
                f"{first.path}: {first.message}"))
    document = NewsForm(events=tuple(kept))
    return ExtractionResult(document=document, diagnostics=diagnostics,
                            parses=parses, fragments=fragments)
