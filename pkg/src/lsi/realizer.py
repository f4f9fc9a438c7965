"""Template realizer: semantic spec -> one English sentence.

Clauses are assembled from lexicon verb frames.  Agreement covers subject
person/number only; negation and tag questions go through the auxiliary,
with do-support when the clause has none.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, replace

from .lexicon import Lexicon, LexiconError
from .semantics import (
    ADDRESS_FORM,
    HEDGE_PRE,
    HEDGE_VERBAL,
    POLITENESS,
    TAG_QUESTION,
    TEMPORAL,
    URGENCY,
    Perspective,
    SemanticSpec,
    SpecError,
    SyntacticForm,
)
from .speechact import SOMEONE, DomainAct, Proposition


class RealizationError(ValueError):
    pass


_PERSONAL = {
    ("1sg", "subject"): "I",
    ("1sg", "object"): "me",
    ("1pl", "subject"): "we",
    ("1pl", "object"): "us",
    ("2", "subject"): "you",
    ("2", "object"): "you",
}
_TAG_PRONOUN = {"1sg": "I", "1pl": "we", "2": "you"}
_SUBJECT_PRONOUNS = frozenset({"I", "we", "you", "he", "she", "it", "they"})

_NEGATIVE = {
    "will": "won't",
    "can": "can't",
    "do": "don't",
    "does": "doesn't",
    "did": "didn't",
    "would": "wouldn't",
    "could": "couldn't",
    "must": "mustn't",
    "should": "shouldn't",
    "has": "hasn't",
    "have": "haven't",
    "is": "isn't",
    "are": "aren't",
    "was": "wasn't",
    "were": "weren't",
}

_EXPANSIONS = [
    (re.compile(r"\bI'd\b"), "I would"),
    (re.compile(r"\bI'm\b"), "I am"),
    (re.compile(r"\bIt's\b"), "It is"),
    (re.compile(r"\bcan't\b"), "cannot"),
    (re.compile(r"\bdon't\b"), "do not"),
    (re.compile(r"\bwon't\b"), "will not"),
]


@dataclass(frozen=True)
class NounPhrase:
    text: str
    person: str = "3sg"
    tag: str = "it"


@dataclass(frozen=True)
class Clause:
    subject: str | None
    auxiliary: str | None
    verb: str
    complements: tuple[str, ...] = ()
    negated: bool = False
    person: str = "3sg"
    tense: str = "present"
    verb_base: str = ""
    tag_pronoun: str | None = None
    pre_verb: tuple[str, ...] = ()

    def __post_init__(self):
        if self.negated and not self.auxiliary:
            raise RealizationError("negated clause needs an auxiliary")


def _resolve(term: str, perspective: Perspective) -> NounPhrase | None:
    if term == SOMEONE:
        return NounPhrase("someone", "3sg", "they")
    roster = perspective.roster
    if term not in (perspective.speaker, perspective.hearer) and not roster.knows(term):
        return None
    members = roster.members(term)
    if term == perspective.speaker:
        return NounPhrase("", "1sg")
    if perspective.speaker in members:
        return NounPhrase("", "1pl")
    if term == perspective.hearer or perspective.hearer in members:
        return NounPhrase("", "2")
    if term in roster.groups:
        return NounPhrase(roster.names.get(term, term), "3pl", "they")
    return NounPhrase(roster.names.get(term, term), "3sg", roster.pronouns.get(term, "they"))


def pronominalize(referent: str, perspective: Perspective, case: str = "subject") -> str:
    """Surface string for an agent or group seen from the speaker's side."""
    np = _resolve(referent, perspective)
    if np is None:
        raise RealizationError(f"cannot resolve referent {referent!r}")
    return _PERSONAL.get((np.person, case), np.text)


def noun_phrase(term: str, perspective: Perspective, lexicon: Lexicon, case: str = "subject") -> NounPhrase:
    np = _resolve(term, perspective)
    if np is not None:
        text = _PERSONAL.get((np.person, case), np.text)
        return NounPhrase(text, np.person, _TAG_PRONOUN.get(np.person, np.tag))
    if term not in lexicon:
        raise LexiconError(f"no lexicon entry or agent for {term!r}")
    entry = lexicon.phrase(term)
    if entry.plural:
        return NounPhrase(entry.text, "3pl", "they")
    return NounPhrase(entry.text, "3sg", "it")


def _dummy_aux(tense: str, person: str) -> str:
    if tense == "past":
        return "did"
    return "does" if person == "3sg" else "do"


def _negative(aux: str, contractions: bool) -> str:
    if aux == "am":
        return "am not"
    if not contractions:
        return "cannot" if aux == "can" else f"{aux} not"
    return _NEGATIVE.get(aux, f"{aux} not")


class _Builder:
    def __init__(self, lexicon: Lexicon, perspective: Perspective):
        self.lex = lexicon
        self.persp = perspective

    def np(self, term, case="subject") -> NounPhrase:
        if not isinstance(term, str):
            raise RealizationError(f"expected a referent, got {term!r}")
        return noun_phrase(term, self.persp, self.lex, case)

    # -- arguments ---------------------------------------------------------
    def argument(self, term) -> str:
        if isinstance(term, Proposition):
            return self.declarative(self.clause(term))
        if isinstance(term, DomainAct):
            return "to " + self.vp_base(term.decomposition[0])
        return self.np(term, "object").text

    def complements(self, prop: Proposition) -> list[str]:
        entry = self.lex.verb(prop.predicate)
        out = []
        for slot in entry.frame:
            term = prop.role(slot.role)
            if term is None:
                continue
            text = self.argument(term)
            out.append(f"{slot.marker} {text}" if slot.marker else text)
        return out

    def vp_base(self, prop: Proposition) -> str:
        if prop.predicate == "want":
            return " ".join(["want"] + self._want_complements(prop)[1])
        entry = self.lex.verb(prop.predicate)
        return " ".join([entry.form("base")] + self.complements(prop))

    def subject_of(self, prop: Proposition):
        if prop.predicate in ("want",):
            return prop.role("experiencer")
        if prop.predicate == "cando":
            return prop.role("agent")
        return prop.role(self.lex.verb(prop.predicate).subject)

    # -- clauses -----------------------------------------------------------
    def clause(self, prop: Proposition, tense: str | None = None, modal: str | None = None) -> Clause:
        tense = tense or prop.tense
        negated = not prop.positive
        if prop.predicate == "want":
            return self._want_clause(prop, negated)
        if prop.predicate == "cando":
            return self._cando_clause(prop, negated, modal)

        entry = self.lex.verb(prop.predicate)
        subj_term = prop.role(entry.subject)
        subj = self.np(subj_term) if subj_term is not None else NounPhrase("", "2", "you")
        base = entry.form("base")
        aux, verb = self._inflect(entry, tense, subj.person, modal)
        if negated and aux is None:
            aux, verb = _dummy_aux(tense, subj.person), base
        return Clause(
            subject=subj.text or None,
            auxiliary=aux,
            verb=verb,
            complements=tuple(self.complements(prop)),
            negated=negated,
            person=subj.person,
            tense=tense,
            verb_base=base,
            tag_pronoun=subj.tag,
        )

    @staticmethod
    def _inflect(entry, tense, person, modal):
        base = entry.form("base")
        if modal:
            return modal, base
        if tense == "future":
            return "will", base
        if tense == "perfect":
            return ("has" if person == "3sg" else "have"), entry.form("past_participle")
        if entry.lemma == "be":
            if tense == "past":
                return ("was" if person in ("1sg", "3sg") else "were"), ""
            return {"1sg": "am", "3sg": "is"}.get(person, "are"), ""
        if tense == "past":
            return None, entry.form("past")
        return None, entry.form("third_singular") if person == "3sg" else base

    def _inner(self, action):
        if isinstance(action, DomainAct):
            inner = action.decomposition[0]
            return inner, action.agent, action.role("recipient"), action.role("theme")
        if isinstance(action, Proposition):
            return action, self.subject_of(action), action.role("recipient"), action.role("theme")
        raise RealizationError(f"want/cando needs an action, got {action!r}")

    def _want_complements(self, prop: Proposition):
        """Subject term and complement words for want(experiencer, action)."""
        who = prop.role("experiencer")
        inner, agent, recipient, theme = self._inner(prop.role("action"))
        roster = self.persp.roster
        who_members = roster.members(who)
        if (
            recipient is not None
            and theme is not None
            and who_members <= roster.members(recipient)
            and not who_members & roster.members(agent)
        ):
            # the wanter benefits: "we'd like two cointreaux"
            return recipient, [self.np(theme, "object").text]
        if who_members & roster.members(agent):
            return who, ["to " + self.vp_base(inner)]
        return who, [self.np(agent, "object").text, "to " + self.vp_base(inner)]

    def _want_clause(self, prop, negated) -> Clause:
        subj_term, comps = self._want_complements(prop)
        subj = self.np(subj_term)
        return Clause(
            subject=subj.text,
            auxiliary="would",
            verb="want" if negated else "like",
            complements=tuple(comps),
            negated=negated,
            person=subj.person,
            verb_base="want" if negated else "like",
            tag_pronoun=subj.tag,
        )

    def _cando_clause(self, prop, negated, modal) -> Clause:
        subj = self.np(prop.role("agent"))
        inner, *_ = self._inner(prop.role("action"))
        words = self.vp_base(inner).split(" ", 1)
        return Clause(
            subject=subj.text,
            auxiliary=modal or "can",
            verb=words[0],
            complements=tuple(words[1:]),
            negated=negated,
            person=subj.person,
            verb_base=words[0],
            tag_pronoun=subj.tag,
        )

    # -- surface -----------------------------------------------------------
    contractions = True

    def declarative(self, c: Clause) -> str:
        words: list[str] = []
        subject = c.subject
        aux = c.auxiliary
        if c.negated:
            aux = _negative(aux, self.contractions)
            if aux == "am not" and subject == "I" and self.contractions:
                subject, aux = "I'm", "not"
        elif aux == "would" and self.contractions and subject in _SUBJECT_PRONOUNS:
            subject, aux = subject + "'d", None
        words += [subject] if subject else []
        words += [aux] if aux else []
        words += list(c.pre_verb)
        words += [c.verb] if c.verb else []
        words += list(c.complements)
        return " ".join(words)

    def imperative(self, c: Clause) -> str:
        words = []
        if c.negated:
            words.append(_negative("do", self.contractions))
        words += list(c.pre_verb) + [c.verb_base] + list(c.complements)
        return " ".join(words)


def tag_question(clause: Clause, contractions: bool = True) -> str:
    """Reversed-polarity tag, e.g. ``", wouldn't you"`` (no final mark)."""
    aux = clause.auxiliary or _dummy_aux(clause.tense, clause.person)
    pronoun = clause.tag_pronoun or "it"
    if clause.negated:
        return f", {aux} {pronoun}"
    if aux == "am":
        return f", aren't {pronoun}" if contractions else f", am {pronoun} not"
    if contractions:
        return f", {_negative(aux, True)} {pronoun}"
    return f", {aux} {pronoun} not"


def invert_question(clause: Clause, contractions: bool = True) -> str:
    """Subject-auxiliary inversion, with do-support when there is no auxiliary."""
    if clause.subject is None:
        raise RealizationError("cannot invert a subjectless clause")
    if clause.auxiliary:
        aux, verb = clause.auxiliary, clause.verb
    else:
        aux, verb = _dummy_aux(clause.tense, clause.person), clause.verb_base
    if clause.negated:
        aux = _negative(aux, contractions) if contractions else aux
    words = [aux, clause.subject]
    if clause.negated and not contractions:
        words.append("not")
    words += list(clause.pre_verb) + ([verb] if verb else []) + list(clause.complements)
    return _capitalize(" ".join(words)) + "?"


def _capitalize(text: str) -> str:
    return text[:1].upper() + text[1:]


def _decapitalize(text: str) -> str:
    first = text.split(" ", 1)[0]
    if first == "I" or first.startswith("I'"):
        return text
    return text[:1].lower() + text[1:]


def _expand(text: str) -> str:
    for pattern, full in _EXPANSIONS:
        text = pattern.sub(full, text)
    return text


def render(
    spec: SemanticSpec,
    lexicon: Lexicon,
    perspective: Perspective | None = None,
    contractions: bool = True,
) -> str:
    perspective = perspective or spec.perspective
    builder = _Builder(lexicon, perspective)
    builder.contractions = contractions
    kinds = spec.kinds
    tagged = TAG_QUESTION in kinds

    clause = None
    if spec.form is SyntacticForm.FRAGMENT:
        body = spec.formula.rstrip(".")
        if not contractions:
            body = _expand(body)
    else:
        try:
            clause = builder.clause(spec.content, spec.tense, spec.modal)
        except KeyError as exc:
            raise SpecError(f"malformed content {spec.content}: missing role {exc}") from None
        hedge = spec.decoration(HEDGE_VERBAL)
        if hedge is not None:
            clause = replace(clause, pre_verb=clause.pre_verb + (hedge.text,))
        if spec.construction == "let":
            subj = builder.subject_of(spec.content)
            body = f"let {builder.np(subj, 'object').text} {builder.vp_base(spec.content)}"
        elif spec.construction is not None:
            raise SpecError(f"unknown construction {spec.construction!r}")
        elif spec.form is SyntacticForm.IMPERATIVE:
            body = builder.imperative(clause)
        elif spec.form is SyntacticForm.YESNO:
            body = invert_question(clause, contractions).rstrip("?")
        else:
            body = builder.declarative(clause)

    prefix = []
    address = spec.decoration(ADDRESS_FORM)
    if address is not None:
        name = perspective.roster.names.get(perspective.hearer, perspective.hearer)
        prefix.append(f"hey {name}, {address.text},")
    hedge = spec.decoration(HEDGE_PRE)
    if hedge is not None:
        prefix.append(hedge.text)

    if prefix:
        prefix = [prefix[0]] + [_decapitalize(p) for p in prefix[1:]]
        sentence = " ".join(prefix + [_decapitalize(body)])
    else:
        sentence = body

    temporal = spec.decoration(TEMPORAL)
    if temporal is not None:
        sentence += " " + temporal.text
    urgency = spec.decoration(URGENCY)
    if urgency is not None:
        sentence += ", " + urgency.text
    if tagged:
        sentence += tag_question(clause, contractions)
    polite = spec.decoration(POLITENESS)
    if polite is not None:
        sentence += ", " + polite.text

    question = tagged or spec.form is SyntacticForm.YESNO
    return _capitalize(sentence) + ("?" if question else ".")
