"""The per-utterance improvisation loop over a whole script."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Mapping

from .affect import Annotator, Palette, ProsodyRecord, default_palette, emit_record
from .lexicon import Lexicon, default_lexicon
from .realizer import render
from .script import Diagnostic, Script, validate
from .semantics import Perspective
from .social import ImpositionTable, SocialStructure, StrategyBand, band_position, select_band, threat
from .speechact import instantiate_act
from .strategies import DEFAULT_SUBSTITUTION_PROBABILITY, apply_strategy, select_strategy

# reproduces both Casablanca example runs
DEFAULT_SEED = 203648

TEXT, PROSODY, TRACE = "text", "text+prosody", "trace"


class ValidationError(ValueError):
    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(str(d) for d in diagnostics))


@dataclass(frozen=True)
class RunConfig:
    seed: int = DEFAULT_SEED
    imposition: ImpositionTable | None = None
    palette: Palette | None = None
    substitution_probability: float = DEFAULT_SUBSTITUTION_PROBABILITY
    mode: str = TEXT
    contractions: bool = True
    forced: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self):
        if not 0.0 <= self.substitution_probability <= 1.0:
            raise ValueError(f"substitution probability {self.substitution_probability} outside [0, 1]")
        if self.mode not in (TEXT, PROSODY, TRACE):
            raise ValueError(f"unknown output mode {self.mode!r}")


@dataclass(frozen=True)
class TraceEntry:
    turn: int
    act: str
    distance: int
    power: int
    imposition: int
    theta: int
    band: StrategyBand
    position: float
    strategy: str
    source: str

    def to_dict(self) -> dict:
        return {
            "turn": self.turn,
            "act": self.act,
            "D": self.distance,
            "P": self.power,
            "R": self.imposition,
            "theta": self.theta,
            "band": self.band.label,
            "position": round(self.position, 4),
            "strategy": self.strategy,
            "source": self.source,
        }


@dataclass
class Line:
    speaker: str | None
    text: str
    label: str = ""
    trace: list[TraceEntry] = field(default_factory=list)
    prosody: ProsodyRecord | None = None

    @property
    def is_stage_direction(self) -> bool:
        return self.speaker is None

    def to_dict(self, trace: bool = False, prosody: bool = False) -> dict:
        if self.is_stage_direction:
            return {"stage_direction": self.text}
        out = {"speaker": self.speaker, "text": self.text}
        if trace:
            out["trace"] = [t.to_dict() for t in self.trace]
        if prosody and self.prosody is not None:
            out["prosody"] = self.prosody.to_dict()
        return out


def turn_rng(seed: int, turn: int) -> random.Random:
    # string seeds hash through sha512, so draws are stable across runs and platforms
    return random.Random(f"lsi:{seed}:{turn}")


def run_dialogue(
    script: Script,
    social: SocialStructure,
    config: RunConfig = RunConfig(),
    lexicon: Lexicon | None = None,
) -> list[Line]:
    lexicon = lexicon or default_lexicon()
    problems = [d for d in validate(script, social, lexicon) if d.severity == "error"]
    if problems:
        raise ValidationError(problems)
    imposition = config.imposition or social.imposition
    roster = script.roster

    lines: list[Line] = []
    for turn in script.turns:
        if not turn.is_utterance:
            lines.append(Line(None, f"({turn.stage_direction})"))
            continue
        act = instantiate_act(turn.act_type, turn.speaker, turn.hearer, script.resolve(turn.content))
        th = threat(
            social.distance(turn.speaker, turn.hearer),
            social.power(turn.hearer, turn.speaker),
            imposition[act.act_type],
        )
        band, position = select_band(th), band_position(th)
        rng = turn_rng(config.seed, turn.index)
        strategy = config.forced.get(turn.index) or select_strategy(
            act, band, position, rng, config.substitution_probability
        )
        perspective = Perspective.for_turn(turn.speaker, turn.hearer, roster)
        spec = apply_strategy(
            act,
            strategy,
            perspective,
            rng,
            address_form=script.agents[turn.speaker].address_form,
            politeness=turn.politeness_marker,
        )
        text = render(spec, lexicon, perspective, contractions=config.contractions)
        if turn.stage_direction:
            text = f"({turn.stage_direction}) {text}"
        entry = TraceEntry(
            turn.index, act.act_type.value, th.distance, th.power, th.imposition, th.theta,
            band, position, strategy, spec.source,
        )
        previous = lines[-1] if lines else None
        if turn.continues and previous is not None and previous.speaker == turn.speaker:
            previous.text += " " + text
            previous.trace.append(entry)
        else:
            lines.append(Line(turn.speaker, text, script.agents[turn.speaker].label, [entry]))

    if config.mode != TEXT:
        palette = config.palette or default_palette()
        annotator = Annotator(lexicon, names=roster.names.values())
        for line in lines:
            if not line.is_stage_direction:
                line.prosody = emit_record(annotator.annotate(line.text), line.speaker, social, palette)
    return lines


def format_lines(lines: list[Line], mode: str = TEXT) -> str:
    """Text mode: ``Label: text``.  Other modes: one JSON object per line."""
    out = []
    for line in lines:
        if mode == TEXT:
            out.append(line.text if line.is_stage_direction else f"{line.label}: {line.text}")
        else:
            record = line.to_dict(trace=mode == TRACE, prosody=True)
            out.append(json.dumps(record, ensure_ascii=False))
    return "".join(s + "\n" for s in out)
