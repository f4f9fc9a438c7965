"""Social structure, imposition ranking and face-threat band selection."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .speechact import SpeechActType

SCALE_MAX = 50
THETA_MAX = 3 * SCALE_MAX


class SocialError(ValueError):
    pass


class StrategyBand(enum.IntEnum):
    DIRECT = 0
    APPROVAL = 1
    AUTONOMY = 2
    OFF_RECORD = 3

    @property
    def label(self) -> str:
        return _BAND_LABELS[self]

    @classmethod
    def parse(cls, text: str) -> "StrategyBand":
        for band, label in _BAND_LABELS.items():
            if text.lower() in (label.lower(), band.name.lower()):
                return band
        raise SocialError(f"unknown strategy band {text!r}")


_BAND_LABELS = {
    StrategyBand.DIRECT: "Direct",
    StrategyBand.APPROVAL: "Approval",
    StrategyBand.AUTONOMY: "Autonomy",
    StrategyBand.OFF_RECORD: "OffRecord",
}

# inclusive (floor, ceiling) per band
BAND_RANGES = {
    StrategyBand.DIRECT: (0, 50),
    StrategyBand.APPROVAL: (51, 80),
    StrategyBand.AUTONOMY: (81, 120),
    StrategyBand.OFF_RECORD: (121, 150),
}

DEFAULT_IMPOSITION = MappingProxyType(
    {
        SpeechActType.ACCEPT_REQUEST: 5,
        SpeechActType.ACCEPT_INFORM: 5,
        SpeechActType.ACCEPT_OFFER: 10,
        SpeechActType.INFORM: 15,
        SpeechActType.REQUEST_INFO: 20,
        SpeechActType.OFFER: 25,
        SpeechActType.REJECT_OFFER: 30,
        SpeechActType.REJECT_INFORM: 35,
        SpeechActType.REJECT_REQUEST: 40,
        SpeechActType.REQUEST_ACT: 45,
    }
)


def _check_scale(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SocialError(f"{name} must be an integer, got {value!r}")
    if not 0 <= value <= SCALE_MAX:
        raise SocialError(f"{name}={value} outside [0, {SCALE_MAX}]")
    return value


class ImpositionTable:
    """Ranking of imposition per speech act type.

    Defaults to the illustrative values; any subset may be overridden.
    """

    def __init__(self, overrides: Mapping[SpeechActType | str, int] | None = None):
        values = dict(DEFAULT_IMPOSITION)
        for key, value in (overrides or {}).items():
            try:
                act = SpeechActType(key)
            except ValueError:
                raise SocialError(f"unknown speech act type in imposition table: {key!r}") from None
            values[act] = _check_scale(f"R[{act.value}]", value)
        self._values = MappingProxyType(values)

    def __getitem__(self, act: SpeechActType | str) -> int:
        return self._values[SpeechActType(act)]

    def as_dict(self) -> dict[str, int]:
        return {act.value: r for act, r in self._values.items()}

    def __eq__(self, other):
        return isinstance(other, ImpositionTable) and dict(self._values) == dict(other._values)


@dataclass(frozen=True)
class ThreatValue:
    distance: int
    power: int
    imposition: int

    @property
    def theta(self) -> int:
        return self.distance + self.power + self.imposition

    def __int__(self):
        return self.theta


def threat(d: int, p: int, r: int) -> ThreatValue:
    """Face threat of an act: social distance + hearer power + imposition."""
    return ThreatValue(_check_scale("D", d), _check_scale("P", p), _check_scale("R", r))


def _theta(theta: ThreatValue | int) -> int:
    value = theta.theta if isinstance(theta, ThreatValue) else theta
    if not 0 <= value <= THETA_MAX:
        raise SocialError(f"theta={value} outside [0, {THETA_MAX}]")
    return value


def select_band(theta: ThreatValue | int) -> StrategyBand:
    value = _theta(theta)
    for band, (_, ceiling) in BAND_RANGES.items():
        if value <= ceiling:
            return band
    raise AssertionError("unreachable")


def band_position(theta: ThreatValue | int) -> float:
    """Where theta sits inside its band: 0.0 at the floor, 1.0 at the ceiling."""
    value = _theta(theta)
    floor, ceiling = BAND_RANGES[select_band(value)]
    return (value - floor) / (ceiling - floor)


class Disposition(str, enum.Enum):
    ANGRY = "angry"
    ANNOYED = "annoyed"
    DISGUSTED = "disgusted"
    DISTRAUGHT = "distraught"
    GRUFF = "gruff"
    PLEASANT = "pleasant"
    SAD = "sad"
    NEUTRAL = "neutral"

    @classmethod
    def parse(cls, text: str) -> "Disposition":
        try:
            return cls(text.lower())
        except ValueError:
            raise SocialError(f"unknown disposition {text!r}") from None


@dataclass(frozen=True)
class SocialStructure:
    """Ordered-pair distance/power values plus per-agent dispositions.

    ``pairs[(s, h)]`` holds ``(D(s,h), P(h,s))``: the distance from speaker
    to hearer and the power the hearer has over the speaker.  Values need not
    be symmetric.
    """

    pairs: Mapping[tuple[str, str], tuple[int, int]]
    dispositions: Mapping[str, Disposition] = field(default_factory=dict)
    imposition: ImpositionTable = field(default_factory=ImpositionTable)

    def __post_init__(self):
        object.__setattr__(self, "pairs", MappingProxyType(dict(self.pairs)))
        object.__setattr__(self, "dispositions", MappingProxyType(dict(self.dispositions)))

    def range_problems(self) -> list[tuple[tuple[str, str], str]]:
        """Out-of-range D/P entries as ``((speaker, hearer), message)`` pairs."""
        problems = []
        for (s, h), (d, p) in self.pairs.items():
            for name, value in ((f"D({s},{h})", d), (f"P({h},{s})", p)):
                try:
                    _check_scale(name, value)
                except SocialError as exc:
                    problems.append(((s, h), str(exc)))
        return problems

    @classmethod
    def from_dict(cls, doc: Mapping) -> "SocialStructure":
        """Build from the JSON document; D/P ranges are left to :meth:`range_problems`."""
        if doc.get("format_version") != 1:
            raise SocialError(f"unsupported social format_version {doc.get('format_version')!r}")
        pairs = {}
        for entry in doc.get("pairs", ()):
            try:
                key = (entry["speaker"], entry["hearer"])
                value = (entry["distance"], entry["power"])
            except KeyError as exc:
                raise SocialError(f"social pair entry missing {exc}: {entry!r}") from None
            if key in pairs:
                raise SocialError(f"duplicate social pair {key}")
            pairs[key] = value
        dispositions = {a: Disposition.parse(d) for a, d in doc.get("dispositions", {}).items()}
        return cls(pairs, dispositions, ImpositionTable(doc.get("imposition")))

    def distance(self, speaker: str, hearer: str) -> int:
        return self._pair(speaker, hearer)[0]

    def power(self, hearer: str, speaker: str) -> int:
        """Power of ``hearer`` over ``speaker``."""
        return self._pair(speaker, hearer)[1]

    def _pair(self, speaker, hearer):
        try:
            return self.pairs[(speaker, hearer)]
        except KeyError:
            raise SocialError(f"no social entry for pair ({speaker}, {hearer})") from None

    def has_pair(self, speaker: str, hearer: str) -> bool:
        return (speaker, hearer) in self.pairs

    def disposition(self, agent: str) -> Disposition:
        try:
            return self.dispositions[agent]
        except KeyError:
            raise SocialError(f"agent {agent!r} has no disposition in the social structure") from None

    def threat_for(self, speaker: str, hearer: str, act: SpeechActType | str) -> ThreatValue:
        return threat(self.distance(speaker, hearer), self.power(hearer, speaker), self.imposition[act])

    @property
    def agents(self) -> set[str]:
        names = set(self.dispositions)
        for s, h in self.pairs:
            names.update((s, h))
        return names
