import pytest
from hypothesis import given
from hypothesis import strategies as st

from lsi.social import (
    BAND_RANGES,
    DEFAULT_IMPOSITION,
    Disposition,
    ImpositionTable,
    SocialError,
    SocialStructure,
    StrategyBand,
    band_position,
    select_band,
    threat,
)
from lsi.speechact import SpeechActType

scale = st.integers(0, 50)


def test_imposition_defaults_are_ordered():
    ranked = sorted(DEFAULT_IMPOSITION, key=DEFAULT_IMPOSITION.get)
    assert ranked[-1] is SpeechActType.REQUEST_ACT
    assert DEFAULT_IMPOSITION[SpeechActType.ACCEPT_REQUEST] == 5
    assert len(DEFAULT_IMPOSITION) == len(SpeechActType)


def test_imposition_override():
    table = ImpositionTable({"offer": 40})
    assert table["offer"] == 40
    assert table["inform"] == 15
    with pytest.raises(SocialError):
        ImpositionTable({"offer": 51})
    with pytest.raises(SocialError):
        ImpositionTable({"shout": 3})


def test_threat_is_a_plain_sum():
    assert threat(4, 0, 45).theta == 49
    with pytest.raises(SocialError):
        threat(-1, 0, 0)
    with pytest.raises(SocialError):
        threat(0, 51, 0)


@pytest.mark.parametrize(
    "theta, band",
    [(0, "Direct"), (50, "Direct"), (51, "Approval"), (80, "Approval"),
     (81, "Autonomy"), (120, "Autonomy"), (121, "OffRecord"), (150, "OffRecord")],
)
def test_band_edges(theta, band):
    assert select_band(theta).label == band


def test_band_position_spans_zero_to_one():
    for band, (lo, hi) in BAND_RANGES.items():
        assert band_position(lo) == 0.0
        assert band_position(hi) == 1.0
    assert band_position(85) == pytest.approx(4 / 39)
    with pytest.raises(SocialError):
        select_band(151)


@given(scale, scale, scale, st.integers(0, 50))
def test_band_is_monotone_in_every_factor(d, p, r, bump):
    base = select_band(threat(d, p, r))
    assert select_band(threat(min(d + bump, 50), p, r)) >= base
    assert select_band(threat(d, min(p + bump, 50), r)) >= base
    assert select_band(threat(d, p, min(r + bump, 50))) >= base


def test_band_parse():
    assert StrategyBand.parse("offrecord") is StrategyBand.OFF_RECORD
    assert StrategyBand.parse("AUTONOMY") is StrategyBand.AUTONOMY
    with pytest.raises(SocialError):
        StrategyBand.parse("rude")


def test_pairs_are_directional(run1_social):
    assert run1_social.distance("laszlo", "waiter") == 0
    assert run1_social.distance("waiter", "laszlo") == 30
    assert run1_social.power("laszlo", "waiter") == 30
    assert run1_social.threat_for("waiter", "laszlo", "offer").theta == 85
    assert run1_social.disposition("laszlo") is Disposition.ANGRY
    with pytest.raises(SocialError):
        run1_social.distance("laszlo", "ilsa")


def test_from_dict_rejects_duplicates_and_versions():
    pair = {"speaker": "a", "hearer": "b", "distance": 1, "power": 2}
    with pytest.raises(SocialError, match="duplicate"):
        SocialStructure.from_dict({"format_version": 1, "pairs": [pair, pair]})
    with pytest.raises(SocialError):
        SocialStructure.from_dict({"format_version": 2, "pairs": []})
    with pytest.raises(SocialError):
        SocialStructure.from_dict({"format_version": 1, "pairs": [], "dispositions": {"a": "giddy"}})


def test_out_of_range_values_are_reported_not_raised():
    social = SocialStructure.from_dict(
        {"format_version": 1, "pairs": [{"speaker": "a", "hearer": "b", "distance": 70, "power": -1}]}
    )
    problems = social.range_problems()
    assert [pair for pair, _ in problems] == [("a", "b"), ("a", "b")]
