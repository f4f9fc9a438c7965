"""Emotional disposition vectors and prosodic text annotation."""
from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .lexicon import FORMAT_VERSION, Lexicon, bundled_path
from .social import Disposition, SocialError, SocialStructure

PITCH = ("accent_shape", "average_pitch", "contour_slope", "final_lowering", "pitch_range", "reference_line")
TIMING = ("speech_rate", "stress_frequency", "fluent_pauses", "hesitation_pauses", "pause_discontinuity")
VOICE_QUALITY = ("breathiness", "brilliance", "laryngealization", "loudness", "pitch_discontinuity")
ARTICULATION = ("precision",)
PARAMETERS = PITCH + TIMING + VOICE_QUALITY + ARTICULATION
PARAMETER_GROUPS = MappingProxyType(
    {"pitch": PITCH, "timing": TIMING, "voice_quality": VOICE_QUALITY, "articulation": ARTICULATION}
)
VALUE_RANGE = (-10.0, 10.0)

GIVENNESS_DECAY = 0.5
CLAUSE_FINAL_ADJUNCTS = (("right", "away"), ("yet",), ("please",))

_TOKEN_RE = re.compile(r"[A-Za-z][A-Za-z']*|[.,?!;:]")


class AffectError(ValueError):
    pass


@dataclass(frozen=True)
class AffectVector:
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != len(PARAMETERS):
            raise AffectError(f"affect vector needs {len(PARAMETERS)} entries, got {len(self.values)}")
        lo, hi = VALUE_RANGE
        for name, value in zip(PARAMETERS, self.values):
            if not lo <= value <= hi:
                raise AffectError(f"{name}={value} outside [{lo:g}, {hi:g}]")

    @classmethod
    def zero(cls) -> "AffectVector":
        return cls((0.0,) * len(PARAMETERS))

    @classmethod
    def from_mapping(cls, values: Mapping[str, float]) -> "AffectVector":
        unknown = set(values) - set(PARAMETERS)
        missing = [p for p in PARAMETERS if p not in values]
        if unknown or missing:
            raise AffectError(
                f"affect vector has {len(values)} named entries; "
                f"missing={missing or '-'} unknown={sorted(unknown) or '-'}"
            )
        return cls(tuple(float(values[p]) for p in PARAMETERS))

    def as_dict(self) -> dict[str, float]:
        return dict(zip(PARAMETERS, self.values))

    @property
    def is_neutral(self) -> bool:
        return not any(self.values)


class Palette:
    """Disposition -> affect vector table; must cover all eight dispositions."""

    def __init__(self, vectors: Mapping[Disposition, AffectVector]):
        missing = [d.value for d in Disposition if d not in vectors]
        if missing:
            raise AffectError(f"palette lacks dispositions: {', '.join(missing)}")
        self.vectors = MappingProxyType(dict(vectors))

    @classmethod
    def from_dict(cls, doc: Mapping) -> "Palette":
        if doc.get("format_version") != FORMAT_VERSION:
            raise AffectError(f"unsupported palette format_version {doc.get('format_version')!r}")
        vectors = {}
        for name, values in doc.get("dispositions", {}).items():
            try:
                disposition = Disposition.parse(name)
            except SocialError as exc:
                raise AffectError(str(exc)) from None
            try:
                vectors[disposition] = AffectVector.from_mapping(values)
            except AffectError as exc:
                raise AffectError(f"{name}: {exc}") from None
        return cls(vectors)

    @classmethod
    def load(cls, path: str | Path) -> "Palette":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


def default_palette() -> Palette:
    return Palette.load(bundled_path("palette.json"))


def disposition_vector(disposition: Disposition | str, palette: Palette) -> AffectVector:
    disposition = Disposition.parse(disposition) if isinstance(disposition, str) else disposition
    if disposition is Disposition.NEUTRAL:
        return AffectVector.zero()
    return palette.vectors[disposition]


@dataclass(frozen=True)
class Token:
    surface: str
    pos: str
    accent: float
    lemma: str = ""


@dataclass(frozen=True)
class AnnotatedUtterance:
    tokens: tuple[Token, ...]
    boundaries: tuple[int, ...]
    """Gap indices: boundary ``k`` sits between token ``k-1`` and token ``k``."""

    def __post_init__(self):
        for tok in self.tokens:
            if not tok.pos:
                raise AffectError(f"token {tok.surface!r} has no part of speech")
            if not 0.0 <= tok.accent <= 1.0:
                raise AffectError(f"accent likelihood {tok.accent} out of range for {tok.surface!r}")
        gaps = self.boundaries
        if any(b <= a for a, b in zip(gaps, gaps[1:])):
            raise AffectError("phrase boundaries must be strictly increasing")
        if gaps and not (1 <= gaps[0] and gaps[-1] <= len(self.tokens) - 1):
            raise AffectError("phrase boundary outside the token gaps")

    @property
    def text(self) -> str:
        out = ""
        for tok in self.tokens:
            out += tok.surface if tok.pos == "punct" or not out else " " + tok.surface
        return out

    def to_dict(self) -> dict:
        return {
            "tokens": [
                {"text": t.surface, "pos": t.pos, "accent": round(t.accent, 4)} for t in self.tokens
            ],
            "boundaries": list(self.boundaries),
        }


class Annotator:
    """Tags tokens and tracks givenness over one dialogue.

    Each earlier mention of a lemma halves its accent likelihood.  Use one
    annotator per dialogue run.
    """

    def __init__(self, lexicon: Lexicon, decay: float = GIVENNESS_DECAY, names: Iterable[str] = ()):
        self.lexicon = lexicon
        self.decay = decay
        # agent names come from the script roster rather than the lexicon
        self.names = {w.lower() for name in names for w in name.split()}
        self.mentions: Counter[str] = Counter()

    def annotate(self, text: str) -> AnnotatedUtterance:
        surfaces = _TOKEN_RE.findall(text)
        if not surfaces:
            raise AffectError("cannot annotate empty text")
        tokens = []
        for surface in surfaces:
            if not surface[0].isalpha():
                tokens.append(Token(surface, "punct", self.lexicon.accent["punct"], surface))
                continue
            pos, lemma = self.lexicon.word(surface)
            if pos == "unknown" and surface.lower() in self.names:
                pos = "proper-noun"
            base = self.lexicon.accent.get(pos, self.lexicon.accent["unknown"])
            accent = base * self.decay ** self.mentions[lemma]
            self.mentions[lemma] += 1
            tokens.append(Token(surface, pos, accent, lemma))
        return AnnotatedUtterance(tuple(tokens), _boundaries(tokens))


def _boundaries(tokens: list[Token]) -> tuple[int, ...]:
    gaps = set()
    words = [t.surface.lower() for t in tokens]
    for i, tok in enumerate(tokens):
        if i == 0:
            continue
        if tok.pos == "punct":
            gaps.add(i)
            continue
        for adjunct in CLAUSE_FINAL_ADJUNCTS:
            end = i + len(adjunct)
            final = end >= len(tokens) or tokens[end].pos == "punct"
            # right after a comma the punctuation boundary already separates it
            if tuple(words[i:end]) == adjunct and final and tokens[i - 1].pos != "punct":
                gaps.add(i)
    return tuple(sorted(gaps))


def annotate(text: str, lexicon: Lexicon, annotator: Annotator | None = None) -> AnnotatedUtterance:
    return (annotator or Annotator(lexicon)).annotate(text)


@dataclass(frozen=True)
class ProsodyRecord:
    utterance: AnnotatedUtterance
    affect: AffectVector
    speaker: str
    disposition: Disposition

    def to_dict(self) -> dict:
        return {
            "speaker": self.speaker,
            "disposition": self.disposition.value,
            "affect": self.affect.as_dict(),
            **self.utterance.to_dict(),
        }


def emit_record(
    utterance: AnnotatedUtterance, speaker: str, social: SocialStructure, palette: Palette
) -> ProsodyRecord:
    try:
        disposition = social.disposition(speaker)
    except SocialError as exc:
        raise AffectError(str(exc)) from None
    return ProsodyRecord(utterance, disposition_vector(disposition, palette), speaker, disposition)
