"""Intermediate realization plan passed from strategy selection to the realizer."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .speechact import Proposition


class SpecError(ValueError):
    pass


class SyntacticForm(str, enum.Enum):
    IMPERATIVE = "imperative"
    DECLARATIVE = "declarative"
    YESNO = "yesno-question"
    FRAGMENT = "fragment"


# decoration kinds
TAG_QUESTION = "tag-question"
HEDGE_PRE = "hedge-pre-sentential"
HEDGE_VERBAL = "hedge-verbal"
ADDRESS_FORM = "address-form"
URGENCY = "urgency"
OBLIGATION = "obligation"
POLITENESS = "politeness-marker"
TEMPORAL = "temporal"
GLADNESS = "gladness-formula"
RELUCTANCE = "reluctance-formula"
APOLOGY = "apology-formula"
RESPONSE = "response-formula"

DECORATION_KINDS = frozenset(
    {TAG_QUESTION, HEDGE_PRE, HEDGE_VERBAL, ADDRESS_FORM, URGENCY, OBLIGATION,
     POLITENESS, TEMPORAL, GLADNESS, RELUCTANCE, APOLOGY, RESPONSE}
)
FORMULA_KINDS = frozenset({GLADNESS, RELUCTANCE, APOLOGY, RESPONSE})


@dataclass(frozen=True)
class Decoration:
    kind: str
    text: str = ""

    def __post_init__(self):
        if self.kind not in DECORATION_KINDS:
            raise SpecError(f"unknown decoration kind {self.kind!r}")


@dataclass(frozen=True)
class Roster:
    """Who is who: proper names, groups, tag pronouns and address forms."""

    names: Mapping[str, str] = field(default_factory=dict)
    groups: Mapping[str, frozenset[str]] = field(default_factory=dict)
    pronouns: Mapping[str, str] = field(default_factory=dict)
    address_forms: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "names", MappingProxyType(dict(self.names)))
        object.__setattr__(
            self, "groups", MappingProxyType({k: frozenset(v) for k, v in self.groups.items()})
        )
        object.__setattr__(self, "pronouns", MappingProxyType(dict(self.pronouns)))
        object.__setattr__(self, "address_forms", MappingProxyType(dict(self.address_forms)))

    def knows(self, ref: str) -> bool:
        return ref in self.names or ref in self.groups

    def members(self, ref: str) -> frozenset[str]:
        return self.groups.get(ref, frozenset({ref}))

    def group_of(self, agent: str) -> frozenset[str]:
        group = {agent}
        for members in self.groups.values():
            if agent in members:
                group |= members
        return frozenset(group)


@dataclass(frozen=True)
class Perspective:
    speaker: str
    hearer: str
    speaker_group: frozenset[str]
    roster: Roster = field(default_factory=Roster)

    def __post_init__(self):
        if self.speaker not in self.speaker_group:
            raise SpecError(f"speaker {self.speaker!r} missing from its own speaker group")

    @classmethod
    def for_turn(cls, speaker: str, hearer: str, roster: Roster) -> "Perspective":
        return cls(speaker, hearer, roster.group_of(speaker), roster)


@dataclass(frozen=True)
class SemanticSpec:
    """Content proposition + syntactic form + decorations.

    ``source`` names the plan field the content was taken from.  ``tense``
    and ``modal`` override what the proposition itself says; ``construction``
    selects a fixed template (currently only ``"let"``).
    """

    content: Proposition | None
    form: SyntacticForm
    perspective: Perspective
    decorations: tuple[Decoration, ...] = ()
    strategy: str = ""
    source: str = ""
    tense: str | None = None
    modal: str | None = None
    construction: str | None = None

    def __post_init__(self):
        kinds = self.kinds
        if TAG_QUESTION in kinds and self.form is not SyntacticForm.DECLARATIVE:
            raise SpecError("tag question requires a declarative form")
        if OBLIGATION in kinds and self.form is SyntacticForm.IMPERATIVE:
            raise SpecError("obligation cannot decorate an imperative")
        if self.form is SyntacticForm.FRAGMENT:
            if not self.formula:
                raise SpecError("fragment form needs a formula decoration")
        elif self.content is None:
            raise SpecError(f"{self.form.value} spec needs content")

    @property
    def kinds(self) -> frozenset[str]:
        return frozenset(d.kind for d in self.decorations)

    def decoration(self, kind: str) -> Decoration | None:
        for d in self.decorations:
            if d.kind == kind:
                return d
        return None

    @property
    def formula(self) -> str | None:
        for d in self.decorations:
            if d.kind in FORMULA_KINDS:
                return d.text
        return None
