"""Politeness sub-strategies: pick one for a band, then extract content.

Each strategy belongs to exactly one band and applies to a fixed set of act
types.  Candidate lists are ordered lower-end-first so that a low position
inside the band favours the earlier entries.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .semantics import (
    ADDRESS_FORM,
    APOLOGY,
    GLADNESS,
    HEDGE_PRE,
    HEDGE_VERBAL,
    OBLIGATION,
    POLITENESS,
    RELUCTANCE,
    RESPONSE,
    TAG_QUESTION,
    TEMPORAL,
    URGENCY,
    Decoration,
    Perspective,
    SemanticSpec,
    SyntacticForm,
)
from .social import StrategyBand
from .speechact import SpeechActInstance, SpeechActType, abstract_agent, negate

A = SpeechActType

PRE_SENTENTIAL_HEDGES = ("I feel", "I believe", "It seems", "As you may know,", "I think", "I heard")
VERBAL_HEDGES = ("somehow", "sort of", "kind of")
ADDRESS_FORMS = ("buddy", "mate", "honey", "doll", "my man")
DEFAULT_ADDRESS_FORM = "my man"

RESPONSE_FORMULAS = {"accept": ("Okay", "Yes"), "reject": ("No",)}
RELUCTANCE_FORMULAS = ("Yes, if I must", "Yes, if you insist")
GLADNESS_FORMULAS = {
    A.ACCEPT_REQUEST: ("I'd be glad to", "With pleasure", "It's a pleasure"),
    A.ACCEPT_OFFER: ("I'd be glad to", "With pleasure", "It's a pleasure"),
    A.ACCEPT_INFORM: ("I'm glad to hear it", "Good to know"),
}
APOLOGY_FORMULAS = {
    A.REJECT_REQUEST: ("I'm sorry, I can't. Normally I'd love to",),
    A.REJECT_OFFER: ("I'm sorry, not this time. Normally I'd love to",),
    A.REJECT_INFORM: ("I'm sorry, I don't think so",),
}

# band position at or below which accepts turn reluctant
RELUCTANCE_CEILING = 0.2
DEFAULT_SUBSTITUTION_PROBABILITY = 0.5
# width of each candidate's weight triangle, in candidate spacings
WEIGHT_SPREAD = 1.5

CONTENT_SOURCES = frozenset(
    {
        "decomposition",
        "want_precondition",
        "cando_precondition",
        "want_effect",
        "know_effect",
        "domain_precondition",
        "domain_decomposition",
        "domain_effect",
        "formula",
    }
)


class StrategyError(ValueError):
    pass


def _always(act: SpeechActInstance) -> bool:
    return True


def _has_domain_precondition(act: SpeechActInstance) -> bool:
    return act.domain_act is not None and bool(act.domain_act.preconditions)


def _has_decomposition_agent(act: SpeechActInstance) -> bool:
    return act.domain_act is not None and act.domain_act.decomposition[0].role("agent") is not None


@dataclass(frozen=True)
class StrategyInfo:
    id: str
    band: StrategyBand
    acts: frozenset[SpeechActType]
    canonical_name: str
    summary: str
    needs: Callable[[SpeechActInstance], bool] = _always

    def applies_to(self, act: SpeechActInstance) -> bool:
        return act.act_type in self.acts and self.needs(act)


_ALL = frozenset(SpeechActType)
_ACCEPTS = frozenset(a for a in A if a.is_accept)
_REJECTS = frozenset(a for a in A if a.is_reject)
_PLANS = frozenset({A.REQUEST_ACT, A.OFFER})

D, AP, AU, OR = (StrategyBand.DIRECT, StrategyBand.APPROVAL, StrategyBand.AUTONOMY, StrategyBand.OFF_RECORD)

STRATEGIES: tuple[StrategyInfo, ...] = (
    StrategyInfo("reluctant-direct-accept", D, frozenset({A.ACCEPT_REQUEST, A.ACCEPT_OFFER}),
                 "lower end of direct strategies", "grudging yes: 'Yes, if you insist.'"),
    StrategyInfo("realize-direct", D, _ALL, "realize-direct-strategy",
                 "decomposition content in the act's default form"),
    StrategyInfo("power-direct-urgency", D, frozenset({A.REQUEST_ACT}), "power-direct-strategy",
                 "direct form + 'right away'"),
    StrategyInfo("power-direct-obligation", D, frozenset({A.REQUEST_ACT}), "power-direct-strategy",
                 "direct form with modal 'you must'"),
    StrategyInfo("optimism-approval", AP, frozenset({A.REQUEST_ACT, A.OFFER, A.INFORM}),
                 "optimism-approval-strategy", "assert the hearer's want effect + tag question"),
    StrategyInfo("group-approval", AP, frozenset({A.REQUEST_ACT, A.OFFER, A.INFORM, A.REQUEST_INFO}),
                 "group-approval-strategy", "in-group address form + direct form"),
    StrategyInfo("glad-accept-approval", AP, _ACCEPTS, "approval oriented accept",
                 "gladness formula: 'I'd be glad to.'"),
    StrategyInfo("sorry-reject-approval", AP, _REJECTS, "approval oriented reject",
                 "apology that affirms the relationship"),
    StrategyInfo("negate-effect-autonomy", AU, _PLANS, "negate-effect-autonomy-strategy",
                 "negated want effect + tag question"),
    StrategyInfo("query-ability-autonomy", AU, _PLANS, "query-ability-autonomy-strategy",
                 "yes/no question on the ability precondition"),
    StrategyInfo("assert-want-precondition-autonomy", AU, frozenset({A.REQUEST_ACT, A.OFFER, A.REQUEST_INFO}),
                 "assert-want-precondition-autonomy-strategy", "state that the want precondition holds"),
    StrategyInfo("impersonalize-actor-autonomy", AU, frozenset({A.REQUEST_ACT}),
                 "impersonalize-actor-autonomy-strategy", "'let' form over the domain effect, no actor"),
    StrategyInfo("hedge-inform", AU, frozenset({A.INFORM}), "hedge-inform-strategy",
                 "pre-sentential or verbal hedge on an inform"),
    StrategyInfo("assert-negation-domain-effect", OR, _PLANS, "assert-negation-domain-effect-strategy",
                 "the domain effect does not hold yet"),
    StrategyInfo("assert-domain-precondition-holds", OR, _PLANS, "assert-domain-precondition-holds-strategy",
                 "the domain precondition holds", _has_domain_precondition),
    StrategyInfo("abstract-agent-and-negate-effect", OR, _PLANS, "abstract-agent-and-negate-effect-strategy",
                 "someone has not done the decomposition", _has_decomposition_agent),
)
REGISTRY = {s.id: s for s in STRATEGIES}


def strategy_info(strategy: str) -> StrategyInfo:
    try:
        return REGISTRY[strategy]
    except KeyError:
        raise StrategyError(f"unknown strategy {strategy!r}") from None


def _native(act: SpeechActInstance, band: StrategyBand) -> list[str]:
    return [s.id for s in STRATEGIES if s.band is band and s.applies_to(act)]


def applicable_strategies(act: SpeechActInstance, band: StrategyBand) -> list[str]:
    """Ordered candidates for ``act`` in ``band``.

    Off-record candidates are followed by the autonomy ones that may stand in
    for them.  A band with nothing of its own borrows from the band below.
    """
    if band is StrategyBand.OFF_RECORD:
        native = _native(act, band)
        return native + [s for s in applicable_strategies(act, StrategyBand.AUTONOMY) if s not in native]
    candidates = _native(act, band)
    if not candidates and band > StrategyBand.DIRECT:
        return applicable_strategies(act, StrategyBand(band - 1))
    return candidates


def choose_strategy(candidates: Sequence[str], position: float, rng: random.Random) -> str:
    """Weighted draw: candidate i peaks at position i/(n-1) with a triangular weight."""
    if not candidates:
        raise StrategyError("no candidate strategies")
    n = len(candidates)
    if n == 1:
        return candidates[0]
    step = 1.0 / (n - 1)
    width = WEIGHT_SPREAD * step
    weights = [max(0.0, 1.0 - abs(position - i * step) / width) for i in range(n)]
    total = sum(weights)
    draw = rng.random() * total
    for candidate, weight in zip(candidates, weights):
        if draw < weight:
            return candidate
        draw -= weight
    return next(c for c, w in zip(reversed(candidates), reversed(weights)) if w > 0)


def select_strategy(
    act: SpeechActInstance,
    band: StrategyBand,
    position: float,
    rng: random.Random,
    substitution_probability: float = DEFAULT_SUBSTITUTION_PROBABILITY,
) -> str:
    candidates = applicable_strategies(act, band)
    if "reluctant-direct-accept" in candidates:
        if position <= RELUCTANCE_CEILING:
            candidates = ["reluctant-direct-accept"]
        else:
            candidates = [c for c in candidates if c != "reluctant-direct-accept"]
    if band is StrategyBand.OFF_RECORD:
        native = [c for c in candidates if REGISTRY[c].band is StrategyBand.OFF_RECORD]
        substitutes = [c for c in candidates if c not in native]
        if native and substitutes:
            candidates = substitutes if rng.random() < substitution_probability else native
        else:
            candidates = native or substitutes
    return choose_strategy(candidates, position, rng)


# -- content extraction -------------------------------------------------------


def _spec(content, form, perspective, strategy, source, *decorations, **kw) -> SemanticSpec:
    return SemanticSpec(
        content=content,
        form=form,
        perspective=perspective,
        decorations=tuple(d for d in decorations if d is not None),
        strategy=strategy,
        source=source,
        **kw,
    )


def _formula(kind, text, perspective, strategy) -> SemanticSpec:
    return _spec(None, SyntacticForm.FRAGMENT, perspective, strategy, "formula", Decoration(kind, text))


def _check(act: SpeechActInstance, strategy: str, band: StrategyBand) -> StrategyInfo:
    info = strategy_info(strategy)
    if info.band is not band:
        raise StrategyError(f"{strategy} belongs to {info.band.label}, not {band.label}")
    if not info.applies_to(act):
        raise StrategyError(f"{strategy} does not apply to {act.act_type.value}")
    return info


def _direct_content(act: SpeechActInstance, perspective, strategy, *decorations, politeness=False, rng=None):
    t = act.act_type
    polite = Decoration(POLITENESS, "please") if politeness else None
    if t is A.REQUEST_ACT:
        return _spec(act.content.decomposition[0], SyntacticForm.IMPERATIVE, perspective, strategy,
                     "decomposition", *decorations, polite)
    if t is A.OFFER:
        return _spec(act.content.decomposition[0], SyntacticForm.DECLARATIVE, perspective, strategy,
                     "decomposition", *decorations, polite, tense="future")
    if t is A.INFORM:
        return _spec(act.content, SyntacticForm.DECLARATIVE, perspective, strategy, "decomposition",
                     *decorations, polite)
    if t is A.REQUEST_INFO:
        return _spec(act.content, SyntacticForm.YESNO, perspective, strategy, "decomposition",
                     *decorations, polite)
    options = RESPONSE_FORMULAS["accept" if t.is_accept else "reject"]
    text = options[0] if rng is None else rng.choice(options)
    return _formula(RESPONSE, text, perspective, strategy)


def apply_direct(act, strategy, perspective: Perspective, rng: random.Random | None = None,
                 politeness: bool = False) -> SemanticSpec:
    _check(act, strategy, StrategyBand.DIRECT)
    if strategy == "realize-direct":
        return _direct_content(act, perspective, strategy, politeness=politeness, rng=rng)
    if strategy == "power-direct-urgency":
        return _direct_content(act, perspective, strategy, Decoration(URGENCY, "right away"))
    if strategy == "power-direct-obligation":
        return _spec(act.content.decomposition[0], SyntacticForm.DECLARATIVE, perspective, strategy,
                     "decomposition", Decoration(OBLIGATION, "you must"), modal="must")
    if strategy == "reluctant-direct-accept":
        text = RELUCTANCE_FORMULAS[0] if rng is None else rng.choice(RELUCTANCE_FORMULAS)
        return _formula(RELUCTANCE, text, perspective, strategy)
    raise StrategyError(f"no direct realization for {strategy}")


def apply_approval(act, strategy, perspective: Perspective, rng: random.Random | None = None,
                   address_form: str = DEFAULT_ADDRESS_FORM) -> SemanticSpec:
    _check(act, strategy, StrategyBand.APPROVAL)
    pick = (lambda seq: seq[0]) if rng is None else rng.choice
    if strategy == "optimism-approval":
        if act.act_type is A.INFORM:
            return _spec(act.know_effect, SyntacticForm.DECLARATIVE, perspective, strategy, "know_effect",
                         Decoration(TAG_QUESTION))
        return _spec(act.want_effect, SyntacticForm.DECLARATIVE, perspective, strategy, "want_effect",
                     Decoration(TAG_QUESTION))
    if strategy == "group-approval":
        return _direct_content(act, perspective, strategy, Decoration(ADDRESS_FORM, address_form))
    if strategy == "glad-accept-approval":
        return _formula(GLADNESS, pick(GLADNESS_FORMULAS[act.act_type]), perspective, strategy)
    if strategy == "sorry-reject-approval":
        return _formula(APOLOGY, pick(APOLOGY_FORMULAS[act.act_type]), perspective, strategy)
    raise StrategyError(f"no approval realization for {strategy}")


def apply_autonomy(act, strategy, perspective: Perspective, rng: random.Random | None = None) -> SemanticSpec:
    _check(act, strategy, StrategyBand.AUTONOMY)
    if strategy == "negate-effect-autonomy":
        return _spec(negate(act.want_effect), SyntacticForm.DECLARATIVE, perspective, strategy, "want_effect",
                     Decoration(TAG_QUESTION))
    if strategy == "query-ability-autonomy":
        # offers ask with the deferential past modal: "Could I help you?"
        modal = "could" if act.act_type is A.OFFER else "can"
        return _spec(act.cando_precondition, SyntacticForm.YESNO, perspective, strategy, "cando_precondition",
                     modal=modal)
    if strategy == "assert-want-precondition-autonomy":
        return _spec(act.want_precondition, SyntacticForm.DECLARATIVE, perspective, strategy, "want_precondition")
    if strategy == "impersonalize-actor-autonomy":
        return _spec(act.content.effects[0], SyntacticForm.IMPERATIVE, perspective, strategy, "domain_effect",
                     construction="let")
    if strategy == "hedge-inform":
        hedges = [(HEDGE_PRE, h) for h in PRE_SENTENTIAL_HEDGES] + [(HEDGE_VERBAL, h) for h in VERBAL_HEDGES]
        kind, text = hedges[0] if rng is None else rng.choice(hedges)
        return _spec(act.content, SyntacticForm.DECLARATIVE, perspective, strategy, "decomposition",
                     Decoration(kind, text))
    raise StrategyError(f"no autonomy realization for {strategy}")


def apply_offrecord(act, strategy, perspective: Perspective, rng: random.Random | None = None) -> SemanticSpec:
    _check(act, strategy, StrategyBand.OFF_RECORD)
    plan = act.domain_act
    if plan is None:
        raise StrategyError(f"{act.act_type.value} has no domain plan to hint at")
    if strategy == "assert-negation-domain-effect":
        return _spec(negate(plan.effects[0]), SyntacticForm.DECLARATIVE, perspective, strategy, "domain_effect",
                     Decoration(TEMPORAL, "yet"))
    if strategy == "assert-domain-precondition-holds":
        return _spec(plan.preconditions[0], SyntacticForm.DECLARATIVE, perspective, strategy,
                     "domain_precondition")
    if strategy == "abstract-agent-and-negate-effect":
        return _spec(negate(abstract_agent(plan.decomposition[0])), SyntacticForm.DECLARATIVE, perspective,
                     strategy, "domain_decomposition", tense="perfect")
    raise StrategyError(f"no off-record realization for {strategy}")


def apply_strategy(
    act: SpeechActInstance,
    strategy: str,
    perspective: Perspective,
    rng: random.Random | None = None,
    address_form: str = DEFAULT_ADDRESS_FORM,
    politeness: bool = False,
) -> SemanticSpec:
    band = strategy_info(strategy).band
    if band is StrategyBand.DIRECT:
        return apply_direct(act, strategy, perspective, rng, politeness=politeness)
    if band is StrategyBand.APPROVAL:
        return apply_approval(act, strategy, perspective, rng, address_form=address_form)
    if band is StrategyBand.AUTONOMY:
        return apply_autonomy(act, strategy, perspective, rng)
    return apply_offrecord(act, strategy, perspective, rng)
