"""Dialogue script documents and pre-run validation."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from .lexicon import Lexicon, LexiconError
from .realizer import RealizationError, render
from .semantics import Perspective, Roster, SpecError
from .social import SocialError, SocialStructure, StrategyBand
from .speechact import DomainAct, Proposition, SpeechActError, SpeechActType, instantiate_act
from .strategies import DEFAULT_ADDRESS_FORM, StrategyError, applicable_strategies, apply_strategy

FORMAT_VERSION = 1


class ScriptError(ValueError):
    pass


@dataclass(frozen=True)
class Agent:
    id: str
    name: str
    label: str
    pronoun: str = "they"
    address_form: str = DEFAULT_ADDRESS_FORM


@dataclass(frozen=True)
class Turn:
    index: int
    speaker: str | None = None
    hearer: str | None = None
    act_type: str | None = None
    content: str | None = None
    stage_direction: str | None = None
    continues: bool = False
    politeness_marker: bool = False
    original: str | None = None

    @property
    def is_utterance(self) -> bool:
        return self.act_type is not None


@dataclass(frozen=True)
class Script:
    agents: Mapping[str, Agent]
    groups: Mapping[str, frozenset[str]] = field(default_factory=dict)
    domain_acts: Mapping[str, DomainAct] = field(default_factory=dict)
    propositions: Mapping[str, Proposition] = field(default_factory=dict)
    turns: tuple[Turn, ...] = ()

    @property
    def roster(self) -> Roster:
        return Roster(
            names={a.id: a.name for a in self.agents.values()},
            groups=self.groups,
            pronouns={a.id: a.pronoun for a in self.agents.values()},
            address_forms={a.id: a.address_form for a in self.agents.values()},
        )

    def resolve(self, key: str) -> DomainAct | Proposition:
        if key in self.domain_acts:
            return self.domain_acts[key]
        if key in self.propositions:
            return self.propositions[key]
        raise ScriptError(f"unknown content reference {key!r}")

    @classmethod
    def from_dict(cls, doc: Mapping) -> "Script":
        if doc.get("format_version") != FORMAT_VERSION:
            raise ScriptError(f"unsupported script format_version {doc.get('format_version')!r}")
        agents = {}
        for aid, raw in doc.get("agents", {}).items():
            name = raw.get("name", aid)
            agents[aid] = Agent(
                aid,
                name,
                raw.get("label", name),
                raw.get("pronoun", "they"),
                raw.get("address_form", DEFAULT_ADDRESS_FORM),
            )
        groups = {g: frozenset(members) for g, members in doc.get("groups", {}).items()}
        try:
            domain_acts = {k: _domain_act(k, v) for k, v in doc.get("domain_acts", {}).items()}
            propositions = {k: _proposition(v) for k, v in doc.get("propositions", {}).items()}
        except (SpeechActError, KeyError, TypeError) as exc:
            raise ScriptError(f"bad plan definition: {exc}") from None
        turns = []
        for i, raw in enumerate(doc.get("turns", ())):
            turns.append(
                Turn(
                    index=i,
                    speaker=raw.get("speaker"),
                    hearer=raw.get("hearer"),
                    act_type=raw.get("act"),
                    content=raw.get("content"),
                    stage_direction=raw.get("stage_direction"),
                    continues=bool(raw.get("continues", False)),
                    politeness_marker=bool(raw.get("politeness_marker", False)),
                    original=raw.get("original"),
                )
            )
        return cls(
            MappingProxyType(agents),
            MappingProxyType(groups),
            MappingProxyType(domain_acts),
            MappingProxyType(propositions),
            tuple(turns),
        )

    @classmethod
    def load(cls, path: str | Path) -> "Script":
        return cls.from_dict(_read_json(path, ScriptError))


def _read_json(path, error):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise error(f"{path}: {exc}") from None


def load_social(path: str | Path) -> SocialStructure:
    return SocialStructure.from_dict(_read_json(path, SocialError))


def _term(raw):
    if isinstance(raw, dict):
        return _proposition(raw)
    if not isinstance(raw, str):
        raise ScriptError(f"bad term {raw!r}")
    return raw


def _proposition(raw: Mapping) -> Proposition:
    args = tuple((role, _term(t)) for role, t in raw.get("args", {}).items())
    return Proposition(raw["predicate"], args, bool(raw.get("positive", True)), raw.get("tense", "present"))


def _domain_act(name: str, raw: Mapping) -> DomainAct:
    return DomainAct(
        name=name,
        roles=tuple(raw["roles"].items()),
        verb=raw["verb"],
        preconditions=tuple(_proposition(p) for p in raw.get("preconditions", ())),
        decomposition=tuple(_proposition(p) for p in raw.get("decomposition", ())),
        effects=tuple(_proposition(p) for p in raw.get("effects", ())),
    )


# -- validation -----------------------------------------------------------------

RANGE, REFERENCE, CONSTRAINT, LEXICON = "range", "reference", "constraint", "lexicon"


@dataclass(frozen=True)
class Diagnostic:
    category: str
    message: str
    turn: int | None = None
    severity: str = "error"

    def __str__(self):
        where = f"turn {self.turn}" if self.turn is not None else "global"
        return f"{self.severity}: [{self.category}] {where}: {self.message}"


def validate(script: Script, social: SocialStructure, lexicon: Lexicon) -> list[Diagnostic]:
    """Everything that would make a run fail, as diagnostics rather than exceptions."""
    out: list[Diagnostic] = []
    bad_pairs = {}
    for pair, message in social.range_problems():
        bad_pairs.setdefault(pair, []).append(message)
    reported_pairs = set()

    for turn in script.turns:
        if not turn.is_utterance:
            if turn.stage_direction is None:
                out.append(Diagnostic(REFERENCE, "turn has neither an act nor a stage direction", turn.index))
            continue
        diag = _validate_turn(turn, script, social, lexicon, bad_pairs, reported_pairs)
        out.extend(diag)

    for pair, messages in bad_pairs.items():
        if pair not in reported_pairs:
            out.extend(Diagnostic(RANGE, m) for m in messages)
    return out


def _validate_turn(turn, script, social, lexicon, bad_pairs, reported_pairs):
    out = []
    i = turn.index
    for role in ("speaker", "hearer"):
        agent = getattr(turn, role)
        if agent is None or agent not in script.agents:
            out.append(Diagnostic(REFERENCE, f"{role} {agent!r} is not in the agent roster", i))
    try:
        act_type = SpeechActType(turn.act_type)
    except ValueError:
        out.append(Diagnostic(REFERENCE, f"unknown speech act type {turn.act_type!r}", i))
        act_type = None
    content = None
    try:
        content = script.resolve(turn.content)
    except ScriptError as exc:
        out.append(Diagnostic(REFERENCE, str(exc), i))
    if turn.continues:
        previous = [t for t in script.turns[:i] if t.is_utterance]
        if not previous or previous[-1].speaker != turn.speaker:
            out.append(Diagnostic(REFERENCE, "continuation does not follow a turn by the same speaker", i))

    pair = (turn.speaker, turn.hearer)
    if not social.has_pair(*pair):
        out.append(Diagnostic(REFERENCE, f"social structure has no entry for ({pair[0]}, {pair[1]})", i))
    elif pair in bad_pairs:
        if pair not in reported_pairs:
            out.extend(Diagnostic(RANGE, m, i) for m in bad_pairs[pair])
            reported_pairs.add(pair)
    if turn.speaker not in social.dispositions:
        out.append(Diagnostic(REFERENCE, f"speaker {turn.speaker!r} has no emotional disposition", i))

    if out or act_type is None or content is None:
        return out
    try:
        act = instantiate_act(act_type, turn.speaker, turn.hearer, content)
    except SpeechActError as exc:
        return [Diagnostic(CONSTRAINT, str(exc), i)]
    out.extend(_lexicon_check(act, turn, script, lexicon))
    return out


def _lexicon_check(act, turn, script, lexicon):
    """Dry-render every strategy the act could receive under any band."""
    perspective = Perspective.for_turn(turn.speaker, turn.hearer, script.roster)
    address = script.agents[turn.speaker].address_form
    problems = []
    seen = set()
    for band in StrategyBand:
        for strategy in applicable_strategies(act, band):
            if strategy in seen:
                continue
            seen.add(strategy)
            try:
                spec = apply_strategy(act, strategy, perspective, address_form=address,
                                      politeness=turn.politeness_marker)
                render(spec, lexicon, perspective)
            except (LexiconError, RealizationError, SpecError, StrategyError) as exc:
                problems.append(Diagnostic(LEXICON, f"{strategy}: {exc}", turn.index))
    return problems
