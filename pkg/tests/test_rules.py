"""Rule compilation, pattern application, merging, and commonsense checks."""

from decimal import Decimal

import pytest

from newsforms import model
from newsforms.model import (
    Competition,
    EconomicRelease,
    InjuryFatality,
    LegalEvent,
    Organization,
    Person,
    Weather,
)
from newsforms.pipeline import analyze
from newsforms.pipeline.types import ReadingKind
from newsforms.rules import (
    EventDraft,
    Fragment,
    RuleError,
    apply_commonsense,
    apply_patterns,
    compile_kb,
    compile_rules,
    extract,
    merge_fragments,
)
from newsforms.vocab import Cause, FedAction, InterestRateName, Judgment

from conftest import INTRO_TEXT

INJURED_RULE = ("?Person was injured => "
              "<InjuryFatality><Injured>?Person</Injured></InjuryFatality>")


# ---- compilation -------------------------------------------------------------

def test_injured_rule_compiles():
    rules = compile_rules(INJURED_RULE)
    assert len(rules) == 1
    rule = rules[0]
    assert rule.priority == 2  # "was", "injured"
    assert rule.slots == {"Person": ReadingKind.PERSON}
    assert rule.template.event_cls is InjuryFatality


def test_empty_source_compiles_to_no_rules():
    assert compile_rules("") == []
    assert compile_rules("# only a comment\n\n") == []


def test_unknown_template_element_is_a_compile_error():
    bad = ("?Person was hurt => "
           "<InjuryFatality><Harmed>?Person</Harmed></InjuryFatality>")
    with pytest.raises(RuleError) as info:
        compile_rules(bad)
    assert "Harmed" in str(info.value)
    assert info.value.rule_id == "r001"


def test_unbound_template_variable_is_a_compile_error():
    bad = "nothing here => <InjuryFatality><Injured>?ghost</Injured></InjuryFatality>"
    with pytest.raises(RuleError) as info:
        compile_rules(bad)
    assert "?ghost" in str(info.value)


def test_unknown_slot_kind_is_a_compile_error():
    bad = "?Martian landed => <InjuryFatality><CauseEvent>?Martian</CauseEvent></InjuryFatality>"
    with pytest.raises(RuleError) as info:
        compile_rules(bad)
    assert "Martian" in str(info.value)


def test_kind_incompatible_with_element_is_a_compile_error():
    bad = "?Person fell => <InjuryFatality><KilledCount>?Person</KilledCount></InjuryFatality>"
    with pytest.raises(RuleError):
        compile_rules(bad)


def test_bad_constant_is_a_compile_error():
    bad = "boom => <InjuryFatality><Cause>Sharknado</Cause></InjuryFatality>"
    with pytest.raises(RuleError):
        compile_rules(bad)


def test_priority_counts_literals_file_order_breaks_ties():
    source = (
        "alpha beta ?Number:n => <Vote><InFavor>?n</InFavor></Vote>\n\n"
        "gamma ?Number:n => <Vote><Against>?n</Against></Vote>\n\n"
        "delta echo ?Number:n => <Vote><InFavor>?n</InFavor></Vote>\n"
    )
    rules = compile_rules(source)
    assert [r.priority for r in rules] == [2, 1, 2]
    ordered = sorted(rules, key=lambda r: (-r.priority, r.order))
    assert [r.rule_id for r in ordered] == ["r001", "r003", "r002"]


def test_rules_may_span_lines_within_a_group():
    source = ("?Person was injured =>\n"
              "  <InjuryFatality><Injured>?Person</Injured></InjuryFatality>\n")
    assert len(compile_rules(source)) == 1


# ---- application ---------------------------------------------------------------

def test_injured_rule_disambiguates_al_khartum(lexicons):
    rules = compile_rules(INJURED_RULE)
    parses = analyze("Al Khartum was injured.", lexicons)
    fragments = apply_patterns(parses, rules)
    assert len(fragments) == 1
    event = fragments[0].event
    assert isinstance(event, InjuryFatality)
    assert event.injured == (Person(given="Al", family="Khartum", sex="Male"),)
    # the location reading was discarded by slot-kind filtering
    assert event.at_location is None


def test_no_match_yields_no_fragments(lexicons):
    rules = compile_rules(INJURED_RULE)
    parses = analyze("The sky is blue.", lexicons)
    assert apply_patterns(parses, rules) == []


def test_intro_paragraph_produces_expected_fragments(lexicons, rules):
    parses = analyze(INTRO_TEXT, lexicons)
    fragments = apply_patterns(parses, rules)
    merged = merge_fragments(fragments)
    assert len(merged.events) == 1
    event = merged.events[0]
    assert event.cause is Cause.EARTHQUAKE
    assert event.killed_count == 143
    assert event.injured_count == 900
    assert event.at_location.country == "COL"
    assert event.source == Person(function="Civil Defense Official")


def test_optional_atoms_and_skips(lexicons):
    rules = compile_rules(
        "killing [at least] ?Number:n people => "
        "<InjuryFatality><KilledCount>?n</KilledCount></InjuryFatality>")
    with_opt = analyze("Floods came, killing at least 40 people.", lexicons)
    without = analyze("Floods came, killing 40 people.", lexicons)
    assert apply_patterns(with_opt, rules)[0].event.killed_count == 40
    assert apply_patterns(without, rules)[0].event.killed_count == 40


def test_same_rule_can_fire_twice_per_sentence(lexicons):
    rules = compile_rules(INJURED_RULE)
    parses = analyze("Lionel Jospin was injured and Jacques Chirac was injured.",
                     lexicons)
    fragments = apply_patterns(parses, rules)
    assert len(fragments) == 2


def test_slot_binding_records_resolved_ids(lexicons):
    rules = compile_rules(INJURED_RULE)
    parses = analyze("Al Khartum was injured.", lexicons)
    fragment = apply_patterns(parses, rules)[0]
    assert fragment.bindings["Person"].startswith("PERSON")
    assert fragment.sentence_index == 0


def test_rule_order_determinism_among_equal_priority(lexicons):
    # two equal-priority rules writing the same field: file order decides
    first = ("?Number:n people died => <InjuryFatality><KilledCount>?n</KilledCount></InjuryFatality>\n\n"
             "?Number:n people died => <InjuryFatality><InjuredCount>?n</InjuredCount></InjuryFatality>\n")
    swapped = ("?Number:n people died => <InjuryFatality><InjuredCount>?n</InjuredCount></InjuryFatality>\n\n"
               "?Number:n people died => <InjuryFatality><KilledCount>?n</KilledCount></InjuryFatality>\n")
    parses = analyze("Four people died.", lexicons)
    events_a = merge_fragments(apply_patterns(parses, compile_rules(first))).events
    events_b = merge_fragments(apply_patterns(parses, compile_rules(swapped))).events
    # both rules fire either way; merge keeps both fields; outputs equal
    assert events_a == events_b
    # a higher-priority rule beats both orders identically
    prioritized = first + "\nexactly four people died => <InjuryFatality><KilledCount>4</KilledCount></InjuryFatality>\n"
    events_c = merge_fragments(apply_patterns(parses, compile_rules(prioritized))).events
    assert events_c[0].killed_count == 4


# ---- merging -------------------------------------------------------------------

def frag(event, sentence=0, rule_id="rT"):
    return Fragment(event=event, bindings={}, sentence_index=sentence,
                    rule_id=rule_id, alternatives={})


def test_disjoint_fields_union():
    outcome = merge_fragments([
        frag(InjuryFatality(cause="Earthquake"), 0),
        frag(InjuryFatality(killed_count=143), 1),
    ])
    assert outcome.events == [InjuryFatality(cause="Earthquake", killed_count=143)]
    assert outcome.warnings == []


def test_conflicting_values_keep_earliest_and_warn():
    outcome = merge_fragments([
        frag(InjuryFatality(killed_count=143), 0),
        frag(InjuryFatality(killed_count=150), 1),
    ])
    assert outcome.events == [InjuryFatality(killed_count=143)]
    assert len(outcome.warnings) == 1
    assert "143" in outcome.warnings[0].detail


def test_distinct_variants_never_merge():
    outcome = merge_fragments([
        frag(InjuryFatality(cause="Fire")),
        frag(Weather(meteor="Hurricane")),
    ])
    assert len(outcome.events) == 2


def test_list_fields_append_unique():
    ann = Person(given="Ann")
    bo = Person(given="Bo")
    outcome = merge_fragments([
        frag(InjuryFatality(injured=(ann,))),
        frag(InjuryFatality(injured=(bo,))),
        frag(InjuryFatality(injured=(ann,))),
    ])
    assert outcome.events[0].injured == (ann, bo)


# ---- commonsense ------------------------------------------------------------------

def test_innocent_defendant_loses_sentence(kb):
    event = LegalEvent(judgment="Innocent", sentence_type="Jail")
    events, diagnostics = apply_commonsense([event], kb)
    assert events == [LegalEvent(judgment=Judgment.INNOCENT)]
    assert len(diagnostics) == 1
    assert diagnostics[0].action == "DropField"


def test_wrong_sport_competition_is_rejected(kb):
    event = Competition(sport="Baseball",
                        team=Organization(full_name="Packers", sport="Football"))
    events, diagnostics = apply_commonsense([event], kb)
    assert events == []
    assert diagnostics[0].action == "RejectFragment"


def test_matching_sport_competition_survives(kb):
    event = Competition(sport="Baseball",
                        team=Organization(full_name="Yankees", sport="Baseball"))
    events, diagnostics = apply_commonsense([event], kb)
    assert events == [event]
    assert diagnostics == []


def test_valid_injury_event_passes_untouched(kb):
    event = InjuryFatality(cause="Earthquake", killed_count=143)
    events, diagnostics = apply_commonsense([event], kb)
    assert events == [event]
    assert diagnostics == []


def test_source_only_injury_report_is_rejected(kb):
    event = InjuryFatality(source=Person(function="Official"))
    events, diagnostics = apply_commonsense([event], kb)
    assert events == []


def test_contradictory_release_direction_is_dropped(kb):
    event = EconomicRelease(direction="Up", rate=Decimal("4.0"),
                            previous_rate=Decimal("4.5"))
    events, diagnostics = apply_commonsense([event], kb)
    assert events[0].direction is None
    consistent = EconomicRelease(direction="Up", rate=Decimal("4.5"),
                                 previous_rate=Decimal("4.0"))
    events, _ = apply_commonsense([consistent], kb)
    assert events[0].direction is not None


def test_prefer_reading_rebinds_ambiguous_issuer(kb):
    org = Organization(full_name="National Weather Service")
    person = Person(family="Weathers")
    draft = EventDraft(event=Weather(meteor="Hurricane", issuer=person),
                       alternatives={"issuer": (org,)})
    events, diagnostics = apply_commonsense([draft], kb)
    assert events[0].issuer == org
    assert diagnostics[0].action == "PreferReading"


def test_commonsense_is_idempotent(kb):
    first, _ = apply_commonsense(
        [LegalEvent(judgment="Innocent", sentence_type="Jail"),
         InjuryFatality(cause="Fire")], kb)
    second, diagnostics = apply_commonsense(first, kb)
    assert first == second
    assert diagnostics == []


def test_kb_compile_errors():
    with pytest.raises(RuleError):
        compile_kb("x\tNotAnEvent\tJudgment=Innocent\tRejectFragment\t-\n")
    with pytest.raises(RuleError):
        compile_kb("x\tLegalEvent\tNoSuchField set\tRejectFragment\t-\n")
    with pytest.raises(RuleError):
        compile_kb("x\tLegalEvent\tJudgment=Innocent\tExplode\t-\n")


# ---- end-to-end -----------------------------------------------------------------

def test_extract_intro_matches_worked_example(lexicons, rules, kb):
    result = extract(INTRO_TEXT, lexicons, rules, kb)
    assert len(result.document.events) == 1
    event = result.document.events[0]
    assert event.cause is Cause.EARTHQUAKE
    assert event.killed_count == 143
    assert event.injured_count == 900
    assert event.at_location.country == "COL"
    assert model.validate(result.document).ok


def test_extract_empty_text(lexicons, rules, kb):
    result = extract("", lexicons, rules, kb)
    assert result.document == model.NewsForm()


def test_extract_fed_watch_mock(lexicons, rules, kb):
    text = "The Federal Reserve raised its federal funds target to 5.25 percent."
    result = extract(text, lexicons, rules, kb)
    assert result.document.events == (model.FedWatch(
        fed_action=FedAction.RAISE,
        interest_rate=InterestRateName.FEDERAL_FUNDS_TARGET,
        rate=Decimal("5.25")),)


def test_extract_output_always_validates(lexicons, rules, kb):
    texts = [
        INTRO_TEXT,
        "The Federal Reserve raised its federal funds target to 5.25 percent.",
        "GTE agreed to acquire Bell Atlantic for $52 billion.",
        "Microsoft reported earnings of $2 billion. Analysts cheered.",
        "Hurricane Floyd struck North Carolina with winds of 140 mph.",
        "The Senate passed the bill by a vote of 57 to 43.",
        "Nothing eventful happened today.",
    ]
    for text in texts:
        result = extract(text, lexicons, rules, kb)
        assert model.validate(result.document).ok, text


def test_extract_at_least_maps_to_minimum(lexicons, rules, kb):
    result = extract("A fire swept the city, killing at least 12 people.",
                     lexicons, rules, kb)
    event = result.document.events[0]
    assert event.killed_count == 12


def test_extract_is_total_over_word_salad(lexicons, rules, kb):
    import random
    rng = random.Random(3)
    words = ["the", "Fed", "raised", "rates", "$", "5", "million", "Dr.",
             "Smith", "said", "in", "New", "York", "on", "Monday", "killing",
             "7", "people", "percent", "to", "a", "storm", "!", "?", ",",
             "U.S.", "bill", "vote", "of", "hurricane", "Floyd"]
    for _ in range(40):
        text = " ".join(rng.choice(words) for _ in range(rng.randrange(0, 40)))
        result = extract(text, lexicons, rules, kb)
        assert model.validate(result.document).ok, text


def test_overlapping_rules_both_fire(lexicons):
    source = (
        "killing ?Number:n people => <InjuryFatality><KilledCount>?n</KilledCount></InjuryFatality>\n\n"
        "killing ?Number:n => <InjuryFatality><CauseEvent>violence</CauseEvent></InjuryFatality>\n")
    parses = analyze("Floods swept the valley, killing 12 people.", lexicons)
    fragments = apply_patterns(parses, compile_rules(source))
    assert len(fragments) == 2
    merged = merge_fragments(fragments)
    assert merged.events[0].killed_count == 12
    assert merged.events[0].cause_event == "violence"


def test_weather_story_end_to_end(lexicons, rules, kb):
    text = ("Hurricane Floyd struck North Carolina with winds of 140 mph. "
            "Officials ordered an evacuation.")
    result = extract(text, lexicons, rules, kb)
    (event,) = result.document.events
    assert isinstance(event, Weather)
    assert str(event.meteor) == "Hurricane"
    assert event.given == "Floyd"
    assert event.at_location.state == "NC"
    assert event.wind_speed == model.Measure(Decimal("140"), "mph")
    assert str(event.declared_state) == "Evacuation"


def test_extraction_is_pure_across_threads(lexicons, rules, kb):
    from concurrent.futures import ThreadPoolExecutor
    texts = [INTRO_TEXT,
             "The Federal Reserve raised its federal funds target to 5.25 percent.",
             "GTE agreed to acquire Bell Atlantic for $52 billion.",
             "Hurricane Floyd struck North Carolina with winds of 140 mph."] * 4
    sequential = [extract(t, lexicons, rules, kb).document for t in texts]
    with ThreadPoolExecutor(max_workers=8) as pool:
        threaded = list(pool.map(
            lambda t: extract(t, lexicons, rules, kb).document, texts))
    assert threaded == sequential


def test_long_document_extracts_quickly(lexicons, rules, kb):
    import time
    text = " ".join(
        ["An earthquake struck western Colombia on Monday, killing at least "
         "143 people and injuring more than 900, civil defense officials "
         "said."] * 100)
    started = time.perf_counter()
    result = extract(text, lexicons, rules, kb)
    elapsed = time.perf_counter() - started
    assert result.document.events
    assert elapsed < 5.0, f"{elapsed:.2f}s for 100 sentences"
