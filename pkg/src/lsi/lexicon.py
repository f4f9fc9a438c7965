"""Lexical entries used by the realizer and the prosody annotator."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

FORMAT_VERSION = 1

VERB_FORMS = ("base", "third_singular", "past", "past_participle", "progressive")
CATEGORIES = ("verb", "noun-phrase", "proper-noun", "pronoun", "modifier", "function")

DEFAULT_ACCENT = {
    "verb": 0.8,
    "noun": 0.9,
    "proper-noun": 0.9,
    "modifier": 0.7,
    "pronoun": 0.2,
    "function": 0.1,
    "unknown": 0.5,
    "punct": 0.0,
}


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class FrameSlot:
    role: str
    marker: str | None = None  # preposition or complementizer ("to", "whether")

    @classmethod
    def parse(cls, text: str) -> "FrameSlot":
        parts = text.split()
        if len(parts) == 1:
            return cls(parts[0])
        if len(parts) == 2:
            return cls(parts[1], parts[0])
        raise LexiconError(f"bad frame slot {text!r}")


@dataclass(frozen=True)
class LexEntry:
    """One lexeme.

    Verbs carry the five inflected forms plus an argument frame; noun
    phrases carry their surface text and number.
    """

    key: str
    lemma: str
    category: str
    forms: Mapping[str, str] = field(default_factory=dict)
    subject: str = "agent"
    frame: tuple[FrameSlot, ...] = ()
    text: str = ""
    plural: bool = False

    def __post_init__(self):
        if self.category not in CATEGORIES:
            raise LexiconError(f"{self.key}: unknown category {self.category!r}")
        if self.category == "verb":
            missing = [f for f in VERB_FORMS if not self.forms.get(f)]
            if missing:
                raise LexiconError(f"verb {self.key!r} lacks forms: {', '.join(missing)}")

    def form(self, name: str) -> str:
        return self.forms[name]


class Lexicon:
    def __init__(
        self,
        entries: Mapping[str, LexEntry],
        words: Mapping[str, str] | None = None,
        accent: Mapping[str, float] | None = None,
    ):
        self.entries = MappingProxyType(dict(entries))
        self.accent = MappingProxyType({**DEFAULT_ACCENT, **(accent or {})})
        self._words = self._index_words(words or {})

    def __contains__(self, key: str) -> bool:
        return key in self.entries

    def get(self, key: str) -> LexEntry:
        try:
            return self.entries[key]
        except KeyError:
            raise LexiconError(f"no lexicon entry for {key!r}") from None

    def verb(self, predicate: str) -> LexEntry:
        entry = self.get(predicate)
        if entry.category != "verb":
            raise LexiconError(f"{predicate!r} is a {entry.category}, not a verb")
        return entry

    def phrase(self, key: str) -> LexEntry:
        entry = self.get(key)
        if entry.category == "verb":
            raise LexiconError(f"{key!r} is a verb, not a phrase")
        return entry

    def word(self, token: str) -> tuple[str, str]:
        """Return ``(category, lemma)`` for a surface token; unknown if absent."""
        return self._words.get(token.lower(), ("unknown", token.lower()))

    def _index_words(self, words: Mapping[str, str]) -> dict[str, tuple[str, str]]:
        index: dict[str, tuple[str, str]] = {}
        for entry in self.entries.values():
            if entry.category == "verb":
                for form in entry.forms.values():
                    for w in form.lower().split():
                        index.setdefault(w, ("verb", entry.lemma))
            elif entry.text:
                tokens = entry.text.split()
                for i, tok in enumerate(tokens):
                    w = tok.lower()
                    if entry.category == "proper-noun":
                        cat = "proper-noun"
                    elif entry.category == "modifier":
                        cat = "modifier"
                    elif entry.category in ("pronoun", "function"):
                        cat = entry.category
                    else:
                        cat = "noun" if i == len(tokens) - 1 else "modifier"
                    index.setdefault(w, (cat, w))
        # the closed-class table wins over guesses made from phrase texts
        for w, cat in words.items():
            cat, _, lemma = cat.partition(":")
            index[w.lower()] = (cat, lemma or w.lower())
        return index

    @classmethod
    def from_dict(cls, doc: Mapping) -> "Lexicon":
        version = doc.get("format_version")
        if version != FORMAT_VERSION:
            raise LexiconError(f"unsupported lexicon format_version {version!r}")
        entries: dict[str, LexEntry] = {}
        for key, raw in doc.get("verbs", {}).items():
            entries[key] = LexEntry(
                key=key,
                lemma=raw.get("lemma", key),
                category="verb",
                forms=MappingProxyType(dict(raw.get("forms", {}))),
                subject=raw.get("subject", "agent"),
                frame=tuple(FrameSlot.parse(s) for s in raw.get("frame", ())),
            )
        for key, raw in doc.get("phrases", {}).items():
            if key in entries:
                raise LexiconError(f"duplicate lexicon key {key!r}")
            entries[key] = LexEntry(
                key=key,
                lemma=raw.get("lemma", key),
                category=raw.get("category", "noun-phrase"),
                text=raw["text"],
                plural=bool(raw.get("plural", False)),
            )
        return cls(entries, doc.get("words", {}), doc.get("accent"))

    @classmethod
    def load(cls, path: str | Path) -> "Lexicon":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


def bundled_path(name: str) -> Path:
    return Path(str(resources.files("lsi") / "data" / name))


def default_lexicon() -> Lexicon:
    return Lexicon.load(bundled_path("lexicon.json"))
