"""Command line entry point: ``lsi render | validate | strategies``."""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .affect import AffectError, Palette
from .engine import DEFAULT_SEED, PROSODY, TEXT, TRACE, RunConfig, ValidationError, format_lines, run_dialogue
from .lexicon import Lexicon, LexiconError, bundled_path
from .script import Script, ScriptError, load_social, validate
from .social import SocialError
from .strategies import DEFAULT_SUBSTITUTION_PROBABILITY, STRATEGIES

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


def _data_path(arg: str) -> Path:
    """A real path, or the name of one of the bundled data files."""
    path = Path(arg)
    if path.exists():
        return path
    bundled = bundled_path(arg)
    if bundled.exists():
        return bundled
    return path


def _load_inputs(args):
    script = Script.load(_data_path(args.script))
    social = load_social(_data_path(args.social))
    lexicon = Lexicon.load(_data_path(args.lexicon))
    return script, social, lexicon


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("LSI_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(f"error: LSI_SEED must be an integer, got {env!r}") from None
    return DEFAULT_SEED


def _report(diagnostics) -> int:
    for d in diagnostics:
        print(d, file=sys.stderr)
    return EXIT_INVALID if any(d.severity == "error" for d in diagnostics) else EXIT_OK


def cmd_render(args) -> int:
    script, social, lexicon = _load_inputs(args)
    diagnostics = validate(script, social, lexicon)
    if _report(diagnostics):
        return EXIT_INVALID
    palette = Palette.load(_data_path(args.palette)) if args.palette else None
    mode = TRACE if args.trace else PROSODY if args.prosody else TEXT
    config = RunConfig(
        seed=_seed(args),
        palette=palette,
        substitution_probability=args.substitution_probability,
        mode=mode,
        contractions=not args.no_contractions,
    )
    try:
        lines = run_dialogue(script, social, config, lexicon)
    except ValidationError as exc:
        return _report(exc.diagnostics)
    sys.stdout.write(format_lines(lines, mode))
    return EXIT_OK


def cmd_validate(args) -> int:
    script, social, lexicon = _load_inputs(args)
    diagnostics = validate(script, social, lexicon)
    for d in diagnostics:
        print(d)
    return EXIT_INVALID if any(d.severity == "error" for d in diagnostics) else EXIT_OK


def cmd_strategies(args) -> int:
    for s in STRATEGIES:
        acts = ",".join(sorted(a.value for a in s.acts))
        print(f"{s.id}\t{s.band.label}\t{s.canonical_name}\t{acts}\t{s.summary}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lsi", description="Improvise the linguistic style of a dialogue script.")
    sub = parser.add_subparsers(dest="command", required=True)

    def inputs(p):
        p.add_argument("--script", required=True, help="script JSON (path or bundled name)")
        p.add_argument("--social", required=True, help="social structure JSON")
        p.add_argument("--lexicon", default="lexicon.json", help="lexicon JSON (default: bundled)")

    render = sub.add_parser("render", help="realize every scripted act")
    inputs(render)
    render.add_argument("--palette", help="disposition palette JSON (default: bundled)")
    render.add_argument("--seed", type=int, help=f"random seed (fallback: $LSI_SEED, then {DEFAULT_SEED})")
    render.add_argument("--prosody", action="store_true", help="emit JSON records with prosody annotation")
    render.add_argument("--trace", action="store_true", help="emit JSON records with D/P/R/theta/band/strategy")
    render.add_argument("--no-contractions", action="store_true")
    render.add_argument("--substitution-probability", type=float, default=DEFAULT_SUBSTITUTION_PROBABILITY,
                        help="chance that an off-record act is realized by an autonomy strategy")
    render.set_defaults(func=cmd_render)

    check = sub.add_parser("validate", help="report problems without rendering")
    inputs(check)
    check.set_defaults(func=cmd_validate)

    strategies = sub.add_parser("strategies", help="list the strategy registry")
    strategies.set_defaults(func=cmd_strategies)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ScriptError, SocialError, LexiconError, AffectError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
