import json

import pytest

from lsi.cli import main
from lsi.engine import DEFAULT_SEED, PROSODY, TRACE, RunConfig, ValidationError, format_lines, run_dialogue
from lsi.lexicon import bundled_path
from lsi.script import CONSTRAINT, LEXICON, RANGE, REFERENCE, Script, validate
from lsi.social import SocialStructure


def doc(name):
    return json.loads(bundled_path(name).read_text())


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def categories(diags):
    return sorted({d.category for d in diags})


@pytest.mark.parametrize("script, social", [
    ("casablanca.json", "casablanca-run1.social.json"),
    ("casablanca.json", "casablanca-run2.social.json"),
    ("restaurant.json", "restaurant.social.json"),
])
def test_bundled_corpora_validate_clean(script, social, lexicon):
    from lsi.script import load_social

    assert validate(Script.load(bundled_path(script)), load_social(bundled_path(social)), lexicon) == []


def test_out_of_range_pair_is_a_diagnostic(casablanca, lexicon):
    raw = doc("casablanca-run1.social.json")
    raw["pairs"][0]["distance"] = 60
    diags = validate(casablanca, SocialStructure.from_dict(raw), lexicon)
    assert categories(diags) == [RANGE]
    assert diags[0].turn is not None


def test_broken_references(lexicon, run1_social):
    raw = doc("casablanca.json")
    raw["turns"][2]["content"] = "seat-everyone"
    raw["turns"][6]["speaker"] = "rick"
    diags = validate(Script.from_dict(raw), run1_social, lexicon)
    assert categories(diags) == [REFERENCE]
    assert {d.turn for d in diags} >= {2, 6}


def test_speaker_as_agent_request_is_a_constraint_violation(lexicon, run1_social):
    raw = doc("casablanca.json")
    turn = raw["turns"][6]
    turn["speaker"], turn["hearer"] = "waiter", "laszlo"
    diags = validate(Script.from_dict(raw), run1_social, lexicon)
    assert [(d.category, d.turn) for d in diags] == [(CONSTRAINT, 6)]


def test_missing_lexicon_entries_are_found_before_rendering(run1_social, lexicon):
    raw = doc("casablanca.json")
    raw["domain_acts"]["serve-cointreaux"]["roles"]["theme"] = "three-martinis"
    for part in ("decomposition", "preconditions", "effects"):
        for p in raw["domain_acts"]["serve-cointreaux"][part]:
            p["args"]["theme"] = "three-martinis"
    diags = validate(Script.from_dict(raw), run1_social, lexicon)
    assert categories(diags) == [LEXICON]
    with pytest.raises(ValidationError):
        run_dialogue(Script.from_dict(raw), run1_social, RunConfig(), lexicon)


def test_continuation_merges_into_one_line(casablanca, run2_social, lexicon):
    lines = run_dialogue(casablanca, run2_social, RunConfig(), lexicon)
    laszlo = [ln for ln in lines if ln.speaker == "laszlo"][0]
    assert [t.act for t in laszlo.trace] == ["request-act", "inform"]
    assert sum(not ln.is_stage_direction for ln in lines) == 5


def test_trace_records(casablanca, run1_social, lexicon):
    lines = run_dialogue(casablanca, run1_social, RunConfig(mode=TRACE), lexicon)
    offer = lines[1].trace[0].to_dict()
    assert offer == {"turn": 1, "act": "offer", "D": 30, "P": 30, "R": 25, "theta": 85, "band": "Autonomy",
                     "position": round(4 / 39, 4), "strategy": "query-ability-autonomy",
                     "source": "cando_precondition"}


def test_forced_strategy(casablanca, run1_social, lexicon):
    config = RunConfig(forced={6: "assert-negation-domain-effect"})
    lines = run_dialogue(casablanca, run1_social, config, lexicon)
    assert lines[-2].text == "We don't have two cointreaux yet."


def test_prosody_mode_attaches_records(casablanca, run1_social, lexicon):
    lines = run_dialogue(casablanca, run1_social, RunConfig(mode=PROSODY), lexicon)
    records = [json.loads(s) for s in format_lines(lines, PROSODY).splitlines()]
    assert records[0] == {"stage_direction": "(Laszlo and Ilsa enter Rick's Cafe)"}
    assert all("prosody" in r for r in records if "speaker" in r)


def test_restaurant_runs_across_seeds(restaurant, lexicon):
    from lsi.script import load_social

    social = load_social(bundled_path("restaurant.social.json"))
    seen = set()
    for seed in range(20):
        for line in run_dialogue(restaurant, social, RunConfig(seed=seed), lexicon):
            seen.add(line.text)
    assert len(seen) > 10


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(substitution_probability=1.5)
    with pytest.raises(ValueError):
        RunConfig(mode="html")


# -- command line ---------------------------------------------------------------

RUN1 = ["--script", "casablanca.json", "--social", "casablanca-run1.social.json"]


def test_cli_render_default_seed(capsys):
    assert main(["render", *RUN1]) == 0
    out = capsys.readouterr().out
    assert "Waiter: Could I help you?" in out
    assert main(["render", *RUN1, "--seed", str(DEFAULT_SEED)]) == 0
    assert capsys.readouterr().out == out


def test_cli_seed_from_environment(capsys, monkeypatch):
    main(["render", *RUN1, "--seed", "5"])
    explicit = capsys.readouterr().out
    monkeypatch.setenv("LSI_SEED", "5")
    main(["render", *RUN1])
    assert capsys.readouterr().out == explicit


def test_cli_no_contractions(capsys):
    main(["render", *RUN1, "--no-contractions"])
    out = capsys.readouterr().out
    assert "It is a pleasure." in out
    assert "I would be glad to." in out


def test_cli_trace_is_json(capsys):
    assert main(["render", *RUN1, "--trace"]) == 0
    records = [json.loads(s) for s in capsys.readouterr().out.splitlines()]
    keys = set(records[1]["trace"][0])
    assert {"D", "P", "R", "theta", "band", "strategy"} <= keys


def test_cli_validate_exit_codes(tmp_path, capsys):
    assert main(["validate", *RUN1]) == 0
    raw = doc("casablanca-run1.social.json")
    raw["pairs"][1]["power"] = 99
    bad = write(tmp_path, "bad.social.json", raw)
    assert main(["validate", "--script", "casablanca.json", "--social", bad]) == 1
    assert "range" in capsys.readouterr().out
    assert main(["render", "--script", "casablanca.json", "--social", bad]) == 1


def test_cli_reports_unreadable_files(tmp_path, capsys):
    assert main(["render", "--script", str(tmp_path / "nope.json"), "--social", "casablanca-run1.social.json"]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_lists_strategies(capsys):
    assert main(["strategies"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert len(rows) == 16
    assert rows[0].startswith("reluctant-direct-accept\tDirect")


def test_empty_script_gives_empty_output(run1_social, lexicon, tmp_path, capsys):
    empty = Script.from_dict({"format_version": 1, "agents": {}, "turns": []})
    assert run_dialogue(empty, run1_social, RunConfig(), lexicon) == []
    path = write(tmp_path, "empty.json", {"format_version": 1, "agents": {}, "turns": []})
    assert main(["render", "--script", path, "--social", "casablanca-run1.social.json"]) == 0
    assert capsys.readouterr().out == ""


def test_trace_is_consistent(restaurant, lexicon):
    from lsi.script import load_social
    from lsi.social import select_band

    social = load_social(bundled_path("restaurant.social.json"))
    for seed in range(10):
        for line in run_dialogue(restaurant, social, RunConfig(seed=seed), lexicon):
            for t in line.trace:
                assert t.theta == t.distance + t.power + t.imposition
                assert t.band is select_band(t.theta)
