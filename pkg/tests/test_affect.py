import json

import pytest

from lsi.affect import (
    PARAMETER_GROUPS,
    PARAMETERS,
    AffectError,
    AffectVector,
    AnnotatedUtterance,
    Annotator,
    Palette,
    Token,
    default_palette,
    disposition_vector,
    emit_record,
)
from lsi.lexicon import bundled_path
from lsi.social import Disposition


def test_parameter_schema():
    assert len(PARAMETERS) == 17 == len(set(PARAMETERS))
    assert {k: len(v) for k, v in PARAMETER_GROUPS.items()} == {
        "pitch": 6, "timing": 5, "voice_quality": 5, "articulation": 1}


@pytest.mark.parametrize("disposition", list(Disposition))
def test_bundled_palette_is_complete_and_in_range(disposition):
    vec = disposition_vector(disposition, default_palette())
    assert len(vec.values) == 17
    assert all(-10 <= v <= 10 for v in vec.values)
    assert vec.is_neutral == (disposition is Disposition.NEUTRAL)


def test_vector_validation():
    with pytest.raises(AffectError):
        AffectVector((0.0,) * 16)
    with pytest.raises(AffectError):
        AffectVector((11.0,) + (0.0,) * 16)
    with pytest.raises(AffectError, match="missing"):
        AffectVector.from_mapping({"loudness": 1})


def test_palette_must_cover_every_disposition():
    doc = json.loads(bundled_path("palette.json").read_text())
    del doc["dispositions"]["sad"]
    with pytest.raises(AffectError, match="sad"):
        Palette.from_dict(doc)


def test_neutral_is_zero_even_if_the_palette_says_otherwise():
    doc = json.loads(bundled_path("palette.json").read_text())
    doc["dispositions"]["neutral"] = doc["dispositions"]["angry"]
    assert disposition_vector("neutral", Palette.from_dict(doc)).is_neutral


def test_tokens_carry_pos_and_accent(lexicon):
    utt = Annotator(lexicon).annotate("Bring us two cointreaux, right away.")
    assert [(t.surface, t.pos) for t in utt.tokens] == [
        ("Bring", "verb"), ("us", "pronoun"), ("two", "modifier"), ("cointreaux", "noun"),
        (",", "punct"), ("right", "modifier"), ("away", "modifier"), (".", "punct")]
    assert all(0.0 <= t.accent <= 1.0 for t in utt.tokens)
    assert utt.text == "Bring us two cointreaux, right away."


def test_boundaries_before_punctuation_and_final_adjuncts(lexicon):
    ann = Annotator(lexicon)
    assert ann.annotate("Bring us two cointreaux, right away.").boundaries == (4, 7)
    assert ann.annotate("We don't have two cointreaux yet.").boundaries == (5, 6)
    assert ann.annotate("Bring us two cointreaux, please.").boundaries == (4, 6)


def test_givenness_lowers_accent(lexicon):
    ann = Annotator(lexicon)
    first = ann.annotate("Bring us two cointreaux.").tokens[3]
    second = ann.annotate("Bring us two cointreaux.").tokens[3]
    third = ann.annotate("Yes, two cointreaux.").tokens[3]
    assert first.lemma == second.lemma == "cointreaux"
    assert first.accent == pytest.approx(0.9)
    assert second.accent == pytest.approx(0.45)
    assert third.accent < second.accent


def test_inflected_forms_share_a_lemma(lexicon):
    ann = Annotator(lexicon)
    brought = ann.annotate("Someone hasn't brought us two cointreaux.").tokens[2]
    bring = ann.annotate("Bring us two cointreaux.").tokens[0]
    assert brought.lemma == bring.lemma == "bring"
    assert bring.accent < brought.accent


def test_roster_names_are_proper_nouns(lexicon):
    utt = Annotator(lexicon, names=["Emil"]).annotate("Hey Emil, my man, bring us two cointreaux.")
    assert utt.tokens[1].pos == "proper-noun"
    assert "unknown" not in {t.pos for t in utt.tokens}


def test_annotation_rejects_bad_input(lexicon):
    with pytest.raises(AffectError):
        Annotator(lexicon).annotate("  ")
    with pytest.raises(AffectError):
        AnnotatedUtterance((Token("x", "noun", 1.5),), ())
    with pytest.raises(AffectError):
        AnnotatedUtterance((Token("x", "noun", 0.5), Token(".", "punct", 0.0)), (2,))


def test_record_uses_the_speakers_disposition(lexicon, run1_social):
    utt = Annotator(lexicon).annotate("I'd be glad to.")
    record = emit_record(utt, "waiter", run1_social, default_palette())
    assert record.disposition is Disposition.PLEASANT
    out = record.to_dict()
    assert list(out["affect"]) == list(PARAMETERS)
    assert out["tokens"][0] == {"text": "I'd", "pos": "pronoun", "accent": 0.2}
    with pytest.raises(AffectError):
        emit_record(utt, "rick", run1_social, default_palette())
