"""Validation behavior of the typed document model."""

from datetime import datetime, timezone
from decimal import Decimal

import pytest

from newsforms import model
from newsforms.model import (
    Deal,
    Earnings,
    FedWatch,
    Head,
    InjuryFatality,
    IPO,
    Location,
    Money,
    NewsForm,
    Organization,
    Person,
    Succession,
    Trip,
    validate,
)
from newsforms.vocab import Cause, Sentiment, Sex


def earthquake_doc(latitude="4.29") -> NewsForm:
    return NewsForm(
        head=Head(datetime(1999, 1, 25, 18, 19, 17, tzinfo=timezone.utc)),
        events=(InjuryFatality(
            cause="Earthquake",
            injured_count=900,
            killed_count=143,
            source=Person(function="Civil Defense Official"),
            at_location=Location(country="COL", latitude=Decimal(latitude),
                                 longitude=Decimal("-75.68")),
        ),),
    )


def test_earthquake_document_is_valid():
    report = validate(earthquake_doc())
    assert report.errors == ()
    assert report.ok


def test_latitude_out_of_range_is_one_error_with_path():
    report = validate(earthquake_doc(latitude="95"))
    assert len(report.errors) == 1
    finding = report.errors[0]
    assert finding.path == "InjuryFatality/AtLocation/Latitude"
    assert finding.code == "range"


def test_unknown_fed_action_is_an_enum_error():
    doc = NewsForm(events=(FedWatch(fed_action="Increase"),))
    report = validate(doc)
    assert len(report.errors) == 1
    assert report.errors[0].path == "FedWatch/FedAction"
    assert report.errors[0].code == "enum"
    assert "Increase" in report.errors[0].message


def test_enum_tokens_normalize_on_construction():
    event = InjuryFatality(cause="Earthquake")
    assert event.cause is Cause.EARTHQUAKE
    person = Person(sex="Female")
    assert person.sex is Sex.FEMALE


def test_longitude_bounds():
    ok = NewsForm(events=(Trip(to_location=Location(longitude=Decimal("-180"))),))
    assert validate(ok).ok
    bad = NewsForm(events=(Trip(to_location=Location(longitude=Decimal("180.01"))),))
    assert [f.path for f in validate(bad).errors] == ["Trip/ToLocation/Longitude"]


def test_age_bounds():
    assert validate(NewsForm(events=(Trip(visitor=Person(age=150)),))).ok
    report = validate(NewsForm(events=(Trip(visitor=Person(age=151)),)))
    assert [f.code for f in report.errors] == ["range"]
    report = validate(NewsForm(events=(Trip(visitor=Person(age=-1)),)))
    assert [f.code for f in report.errors] == ["range"]


def test_stake_is_open_at_zero_closed_at_hundred():
    assert validate(NewsForm(events=(Deal(stake=Decimal("100")),))).ok
    assert validate(NewsForm(events=(Deal(stake=Decimal("0.01")),))).ok
    assert not validate(NewsForm(events=(Deal(stake=Decimal("0")),))).ok
    assert not validate(NewsForm(events=(Deal(stake=Decimal("100.1")),))).ok


def test_stock_ratio_positive_and_shares_positive():
    assert not validate(NewsForm(events=(Deal(stock_ratio=Decimal("0")),))).ok
    assert validate(NewsForm(events=(Deal(stock_ratio=Decimal("0.5")),))).ok
    assert not validate(NewsForm(events=(IPO(shares=0),))).ok
    assert validate(NewsForm(events=(IPO(shares=1),))).ok


def test_counts_must_be_nonnegative():
    report = validate(NewsForm(events=(InjuryFatality(killed_count=-1),)))
    assert [f.path for f in report.errors] == ["InjuryFatality/KilledCount"]


@pytest.mark.parametrize("ticker", ["BEL", "A", "BRK.A", "ABCDEF", "X1.B2"])
def test_good_tickers(ticker):
    doc = NewsForm(events=(Deal(target=Organization(ticker=ticker)),))
    assert validate(doc).ok


@pytest.mark.parametrize("ticker", ["", "bel", "TOOLONGX", "BEL.", ".A", "BEL SY"])
def test_bad_tickers(ticker):
    doc = NewsForm(events=(Deal(target=Organization(ticker=ticker)),))
    assert [f.code for f in validate(doc).errors] == ["ticker"]


def test_country_code_must_be_in_shipped_table():
    bad = NewsForm(events=(Trip(to_location=Location(country="XYZ")),))
    assert [f.code for f in validate(bad).errors] == ["iso3166"]
    lowercase = NewsForm(events=(Trip(to_location=Location(country="col")),))
    assert [f.code for f in validate(lowercase).errors] == ["iso3166"]


def test_currency_code_must_be_in_shipped_table():
    bad = NewsForm(events=(Deal(deal_value=Money(Decimal("1"), "XXX")),))
    assert [f.code for f in validate(bad).errors] == ["iso4217"]
    assert validate(NewsForm(events=(Deal(deal_value=Money(Decimal("1"), "GBP")),))).ok


def test_state_code_table_includes_quebec():
    assert validate(NewsForm(events=(Trip(to_location=Location(state="PQ")),))).ok
    assert validate(NewsForm(events=(Trip(to_location=Location(state="CT")),))).ok
    assert not validate(NewsForm(events=(Trip(to_location=Location(state="ZZ")),))).ok


def test_earnings_amount_and_loss_are_exclusive():
    both = Earnings(earnings_amount=Money(Decimal("1"), "USD"),
                    loss=Money(Decimal("2"), "USD"))
    report = validate(NewsForm(events=(both,)))
    assert [f.code for f in report.errors] == ["exclusive"]


def test_succession_needs_someone():
    report = validate(NewsForm(events=(Succession(function="CEO"),)))
    assert [f.code for f in report.errors] == ["required"]
    assert validate(NewsForm(events=(Succession(person_in=Person(given="Ann")),))).ok


def test_money_rejects_float():
    with pytest.raises(TypeError):
        Money(1.5, "USD")


def test_money_accepts_int_and_text_amounts():
    assert Money(5, "USD").amount == Decimal("5")
    assert Money("2.50", "USD").amount == Decimal("2.50")


def test_dateline_must_be_utc():
    naive = NewsForm(head=Head(datetime(1999, 1, 25, 18, 19, 17)))
    assert [f.code for f in validate(naive).errors] == ["timezone"]


def test_empty_text_rejected():
    doc = NewsForm(events=(Trip(visitor=Person(family="  ")),))
    assert [f.code for f in validate(doc).errors] == ["empty"]


def test_multi_event_paths_carry_ordinals():
    doc = NewsForm(events=(FedWatch(fed_action="Hold"),
                           FedWatch(fed_action="Increase")))
    report = validate(doc)
    assert [f.path for f in report.errors] == ["FedWatch[2]/FedAction"]


def test_validation_is_pure_and_deterministic():
    doc = earthquake_doc(latitude="95")
    first = validate(doc)
    second = validate(doc)
    assert first == second


def test_validation_reports_every_violation_in_document_order():
    doc = NewsForm(events=(InjuryFatality(
        killed_count=-2,
        injured_count=-1,
        at_location=Location(country="ZZZ", latitude=Decimal("95")),
    ),))
    paths = [f.path for f in validate(doc).errors]
    assert paths == [
        "InjuryFatality/InjuredCount",
        "InjuryFatality/KilledCount",
        "InjuryFatality/AtLocation/Country",
        "InjuryFatality/AtLocation/Latitude",
    ]


# -- sentiment ---------------------------------------------------------------

def test_injury_fatality_is_negative():
    assert model.classify_sentiment(InjuryFatality()) is Sentiment.NEGATIVE


def test_good_earnings_are_positive_bad_negative():
    assert model.classify_sentiment(Earnings(good_bad="Good")) is Sentiment.POSITIVE
    assert model.classify_sentiment(Earnings(good_bad="Bad")) is Sentiment.NEGATIVE
    assert model.classify_sentiment(Earnings()) is Sentiment.OTHER


def test_plain_trip_is_other():
    assert model.classify_sentiment(Trip()) is Sentiment.OTHER


def test_sentiment_is_total_and_deterministic_over_all_types():
    for cls in model.EVENT_TYPES.values():
        event = cls()
        first = model.classify_sentiment(event)
        assert first in (Sentiment.POSITIVE, Sentiment.NEGATIVE, Sentiment.OTHER)
        assert model.classify_sentiment(event) is first


def test_latitude_acceptance_matches_range_exactly():
    import random
    rng = random.Random(5)
    for _ in range(200):
        lat = Decimal(rng.randrange(-20000, 20001)) / 100
        doc = NewsForm(events=(Trip(to_location=Location(latitude=lat)),))
        assert validate(doc).ok == (abs(lat) <= 90), lat


def test_wrong_python_types_are_reported_not_raised():
    doc = NewsForm(events=(Trip(visitor=Person(family=42), visitor_count="9"),))
    codes = {f.code for f in validate(doc).errors}
    assert codes == {"type"}
