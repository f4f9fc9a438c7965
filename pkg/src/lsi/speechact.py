"""Speech acts, domain plans and the propositions they carry.

Everything here is an immutable value object. A speech act instance is
built once by :func:`instantiate_act`, which fills in the precondition and
effect propositions from the act's plan-operator schema.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Mapping, Union

SOMEONE = "someone"


class SpeechActType(str, enum.Enum):
    INFORM = "inform"
    OFFER = "offer"
    REQUEST_INFO = "request-info"
    REQUEST_ACT = "request-act"
    ACCEPT_INFORM = "accept-inform"
    ACCEPT_OFFER = "accept-offer"
    ACCEPT_REQUEST = "accept-request"
    REJECT_INFORM = "reject-inform"
    REJECT_OFFER = "reject-offer"
    REJECT_REQUEST = "reject-request"

    @property
    def initiating(self) -> bool:
        return self in _INITIATING

    @property
    def is_accept(self) -> bool:
        return self.value.startswith("accept-")

    @property
    def is_reject(self) -> bool:
        return self.value.startswith("reject-")

    @property
    def plan_bearing(self) -> bool:
        """True when the act's content is a domain act rather than a proposition."""
        return self in _PLAN_BEARING


_INITIATING = frozenset(
    {SpeechActType.INFORM, SpeechActType.OFFER, SpeechActType.REQUEST_INFO, SpeechActType.REQUEST_ACT}
)
_PLAN_BEARING = frozenset(
    {
        SpeechActType.OFFER,
        SpeechActType.REQUEST_ACT,
        SpeechActType.ACCEPT_OFFER,
        SpeechActType.ACCEPT_REQUEST,
        SpeechActType.REJECT_OFFER,
        SpeechActType.REJECT_REQUEST,
    }
)


class SpeechActError(ValueError):
    pass


Term = Union[str, "Proposition", "DomainAct"]


@dataclass(frozen=True)
class Proposition:
    """A predicate over role-labelled terms.

    ``args`` is an ordered tuple of ``(role, term)`` pairs.  A term is an
    agent/group id, a lexical noun-phrase key, a nested proposition, or a
    domain act (for ``want``/``cando`` style content).
    """

    predicate: str
    args: tuple[tuple[str, Term], ...] = ()
    positive: bool = True
    tense: str = "present"

    def __post_init__(self):
        if not self.predicate:
            raise SpeechActError("proposition predicate must be nonempty")
        roles = [role for role, _ in self.args]
        if len(roles) != len(set(roles)):
            raise SpeechActError(f"duplicate role labels in {self.predicate}: {roles}")
        if self.tense not in TENSES:
            raise SpeechActError(f"unknown tense {self.tense!r}")

    @classmethod
    def of(cls, predicate: str, positive: bool = True, tense: str = "present", **roles: Term) -> "Proposition":
        return cls(predicate, tuple(roles.items()), positive, tense)

    def role(self, name: str, default=None):
        for role, term in self.args:
            if role == name:
                return term
        return default

    @property
    def roles(self) -> dict[str, Term]:
        return dict(self.args)

    def with_role(self, name: str, term: Term) -> "Proposition":
        args = tuple((r, term if r == name else t) for r, t in self.args)
        return replace(self, args=args)

    def __str__(self):
        inner = ", ".join(_term_str(t) for _, t in self.args)
        sign = "" if self.positive else "not "
        return f"{sign}{self.predicate}({inner})"


TENSES = ("present", "past", "perfect", "future")


def _term_str(term: Term) -> str:
    if isinstance(term, DomainAct):
        return str(term.decomposition[0])
    return str(term)


@dataclass(frozen=True)
class DomainAct:
    """A non-linguistic plan, e.g. serving drinks or seating a party."""

    name: str
    roles: tuple[tuple[str, str], ...]
    verb: str
    preconditions: tuple[Proposition, ...] = ()
    decomposition: tuple[Proposition, ...] = ()
    effects: tuple[Proposition, ...] = ()

    def __post_init__(self):
        if "agent" not in dict(self.roles):
            raise SpeechActError(f"domain act {self.name!r} has no agent role")
        if not self.decomposition:
            raise SpeechActError(f"domain act {self.name!r} has an empty decomposition")
        if not self.effects:
            raise SpeechActError(f"domain act {self.name!r} has no effects")

    @property
    def agent(self) -> str:
        return dict(self.roles)["agent"]

    def role(self, name: str, default=None):
        return dict(self.roles).get(name, default)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class SpeechActInstance:
    act_type: SpeechActType
    speaker: str
    hearer: str
    content: Union[DomainAct, Proposition]
    want_precondition: Proposition | None = None
    cando_precondition: Proposition | None = None
    know_precondition: Proposition | None = None
    want_effect: Proposition | None = None
    know_effect: Proposition | None = None

    @property
    def domain_act(self) -> DomainAct | None:
        return self.content if isinstance(self.content, DomainAct) else None

    @property
    def derived_fields(self) -> dict[str, Proposition]:
        names = ("want_precondition", "cando_precondition", "know_precondition", "want_effect", "know_effect")
        return {n: getattr(self, n) for n in names if getattr(self, n) is not None}


def negate(p: Proposition) -> Proposition:
    return replace(p, positive=not p.positive)


def abstract_agent(p: Proposition) -> Proposition:
    """Replace the agent term with the existential placeholder ``someone``."""
    if p.role("agent") is None:
        raise SpeechActError(f"{p} has no agent role to abstract")
    return p.with_role("agent", SOMEONE)


def instantiate_act(
    act_type: SpeechActType | str,
    speaker: str,
    hearer: str,
    content: DomainAct | Proposition,
) -> SpeechActInstance:
    act_type = SpeechActType(act_type)
    if act_type.plan_bearing and not isinstance(content, DomainAct):
        raise SpeechActError(f"{act_type.value} needs a domain act as content, got {type(content).__name__}")
    if not act_type.plan_bearing and not isinstance(content, Proposition):
        raise SpeechActError(f"{act_type.value} needs a proposition as content, got {type(content).__name__}")

    fields = _SCHEMAS[act_type](speaker, hearer, content)
    return SpeechActInstance(act_type, speaker, hearer, content, **fields)


def _want(who: str, what: Term, positive: bool = True) -> Proposition:
    return Proposition("want", (("experiencer", who), ("action", what)), positive)


def _know(who: str, what: Proposition, predicate: str = "know") -> Proposition:
    return Proposition(predicate, (("experiencer", who), ("content", what)))


def _request_act(speaker, hearer, action: DomainAct) -> Mapping[str, Proposition]:
    # constraint: agent(action, hearer)
    if action.agent != hearer:
        raise SpeechActError(
            f"request-act constraint violated: agent of {action.name!r} is {action.agent!r}, hearer is {hearer!r}"
        )
    return dict(
        want_precondition=_want(speaker, action),
        cando_precondition=Proposition("cando", (("agent", hearer), ("action", action))),
        want_effect=_want(hearer, action),
        know_effect=_know(hearer, _want(speaker, action)),
    )


def _offer(speaker, hearer, action: DomainAct):
    if action.agent != speaker:
        raise SpeechActError(
            f"offer constraint violated: agent of {action.name!r} is {action.agent!r}, speaker is {speaker!r}"
        )
    return dict(
        want_precondition=_want(speaker, action),
        cando_precondition=Proposition("cando", (("agent", speaker), ("action", action))),
        want_effect=_want(hearer, action),
        know_effect=_know(hearer, _want(speaker, action)),
    )


def _inform(speaker, hearer, p: Proposition):
    return dict(know_precondition=_know(speaker, p), know_effect=_know(hearer, p))


def _request_info(speaker, hearer, p: Proposition):
    want = _want(speaker, _know(speaker, p, "knowif"))
    return dict(want_precondition=want, know_effect=_know(hearer, want))


def _accept_plan(speaker, hearer, action: DomainAct):
    want = _want(speaker, action)
    return dict(want_effect=want, know_effect=_know(hearer, want))


def _reject_plan(speaker, hearer, action: DomainAct):
    want = _want(speaker, action, positive=False)
    return dict(want_effect=want, know_effect=_know(hearer, want))


def _accept_inform(speaker, hearer, p: Proposition):
    return dict(know_effect=_know(hearer, _know(speaker, p)))


def _reject_inform(speaker, hearer, p: Proposition):
    return dict(know_effect=_know(hearer, negate(_know(speaker, p))))


_SCHEMAS = {
    SpeechActType.REQUEST_ACT: _request_act,
    SpeechActType.OFFER: _offer,
    SpeechActType.INFORM: _inform,
    SpeechActType.REQUEST_INFO: _request_info,
    SpeechActType.ACCEPT_REQUEST: _accept_plan,
    SpeechActType.ACCEPT_OFFER: _accept_plan,
    SpeechActType.REJECT_REQUEST: _reject_plan,
    SpeechActType.REJECT_OFFER: _reject_plan,
    SpeechActType.ACCEPT_INFORM: _accept_inform,
    SpeechActType.REJECT_INFORM: _reject_inform,
}
