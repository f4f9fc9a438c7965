"""Politeness-driven linguistic style improvisation for scripted dialogue."""
from .affect import AffectVector, Annotator, Palette, default_palette, disposition_vector
from .engine import DEFAULT_SEED, RunConfig, ValidationError, format_lines, run_dialogue
from .lexicon import Lexicon, default_lexicon
from .realizer import render
from .script import Script, load_social, validate
from .social import Disposition, ImpositionTable, SocialStructure, StrategyBand, select_band, threat
from .speechact import DomainAct, Proposition, SpeechActType, instantiate_act
from .strategies import STRATEGIES, apply_strategy, select_strategy

__version__ = "0.1.0"

__all__ = [
    "AffectVector",
    "Annotator",
    "DEFAULT_SEED",
    "Disposition",
    "DomainAct",
    "ImpositionTable",
    "Lexicon",
    "Palette",
    "Proposition",
    "RunConfig",
    "STRATEGIES",
    "Script",
    "SocialStructure",
    "SpeechActType",
    "StrategyBand",
    "ValidationError",
    "apply_strategy",
    "default_lexicon",
    "default_palette",
    "disposition_vector",
    "format_lines",
    "instantiate_act",
    "load_social",
    "render",
    "run_dialogue",
    "select_band",
    "select_strategy",
    "threat",
    "validate",
]
