"""Command-line entry point: ``textcorr <subcommand> ...``.

Exit codes: 0 success, 2 configuration or parse error, 3 I/O error,
4 token alignment error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import injector
from .corrector import MAEC, PAEC
from .errors import AlignmentError, ConfigError, ParseError, TextcorrError
from .evaluator import consistency_check, count_outcomes
from .language_model import LINE_START, TAG, WORD, build_ngram_model, save_model
from .lexicon import GENERAL, LEXICON_TAGS, PosTag, build_lexicon, lexicon_path, parse_label, save_lexicon
from .normalizer import load_abbrev_table, normalize
from .pipeline import Pipeline, PipelineConfig, corrections_tsv, detections_tsv, read_detections
from .pos_tagger import parse_annotated_line, read_annotated, save_tagger, train

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_ALIGN = 4

log = logging.getLogger("textcorr")


def _read(path) -> str:
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"invalid UTF-8 at byte offset {exc.start}", source=path) from None


def _write(path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _read_tag_lines(path) -> list[list[PosTag]]:
    """Tags from a ``word/TAG`` file, one list per line, blank lines kept."""
    out = []
    for lineno, line in enumerate(_read(path).split("\n"), 1):
        out.append([t for _, t in parse_annotated_line(line, lineno, path)])
    return out


def cmd_build_lexicon(args) -> int:
    outdir = Path(args.lexicon_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    if args.label:
        label = parse_label(args.label)
        words = [w for w in _read(args.input).split("\n") if w.strip()]
        lex = build_lexicon(words, label)
        save_lexicon(lex, lexicon_path(outdir, label))
        print(f"{lexicon_path(outdir, label)}: {len(lex)} words")
        return EXIT_OK
    corpus = read_annotated(args.input)
    by_tag = {t: set() for t in LEXICON_TAGS}
    general = set()
    for sentence in corpus:
        for word, t in sentence:
            general.add(word)
            if t in by_tag:
                by_tag[t].add(word)
    for label, words in [(GENERAL, general), *by_tag.items()]:
        lex = build_lexicon(sorted(words), label)
        save_lexicon(lex, lexicon_path(outdir, label))
        print(f"{lexicon_path(outdir, label)}: {len(lex)} words")
    return EXIT_OK


def cmd_build_lm(args) -> int:
    if args.order not in (2, 3):
        raise ConfigError(f"unsupported order {args.order}; use 2 or 3")
    if args.unit == TAG or args.annotated:
        corpus = [
            parse_annotated_line(line, lineno, args.corpus)
            for lineno, line in enumerate(_read(args.corpus).split("\n"), 1)
            if line.strip()
        ]
        if args.unit == TAG:
            lines = [[t.value for _, t in s] for s in corpus]
        else:
            lines = [[w for w, _ in s] for s in corpus]
    else:
        abbrev = load_abbrev_table(args.abbrev) if args.abbrev else {}
        lines = [line for line in normalize(_read(args.corpus), abbrev).words() if line]
    if args.line_start:
        lines = [[LINE_START, *line] for line in lines]
    model = build_ngram_model(lines, args.order, args.unit)
    save_model(model, args.output)
    print(f"{args.output}: {len(model)} {args.order}-grams")
    return EXIT_OK


def cmd_train_tagger(args) -> int:
    corpus = read_annotated(args.annotated)
    if not corpus:
        raise ConfigError(f"{args.annotated}: empty training corpus")
    model, trajectory = train(corpus, args.max_rules, args.min_gain)
    save_tagger(model, args.output)
    total = sum(len(s) for s in corpus)
    print(f"initial errors: {trajectory[0]}/{total}")
    for k, (rule, errors) in enumerate(zip(model.rules, trajectory[1:]), 1):
        print(
            f"rule {k}: {rule.from_tag.value}->{rule.to_tag.value} "
            f"{rule.template} {rule.trigger}  errors: {errors}/{total}"
        )
    return EXIT_OK


def cmd_inject(args) -> int:
    text = _read(args.input)
    formatted = text if args.preformatted else injector.format_ten_per_line(text)
    ops = injector.ALL_OPS if args.all_ops else injector.SIMULATION_OPS
    corrupted, entries = injector.inject(formatted, args.seed, ops)
    _write(args.output, corrupted)
    if args.gold:
        _write(args.gold, formatted)
    if args.log:
        _write(args.log, entries.to_tsv())
    print(f"{len(entries)} errors injected")
    return EXIT_OK


def _config_from_args(args) -> PipelineConfig:
    return PipelineConfig(
        mode=args.mode,
        lexicon_dir=args.lexicon_dir,
        word_lm_paths=(args.lm_bigram, args.lm_trigram),
        tag_lm_paths=(args.tag_lm_bigram, None) if args.tag_lm_bigram else None,
        tagger_model=args.tagger,
        abbrev_table=args.abbrev,
        max_ed=args.max_ed,
        seed=args.seed,
        use_tag_lm=args.use_tag_lm,
        oracle_tags=args.oracle_tags,
    )


def cmd_correct(args) -> int:
    config = _config_from_args(args)
    pipeline = Pipeline.from_config(config)
    text = _read(args.input)
    tags = _read_tag_lines(args.oracle_tags) if args.oracle_tags else None
    if tags is not None:
        expected = len(normalize(text, pipeline.abbrev_table).lines)
        tags = tags[:expected] + [[] for _ in range(expected - len(tags))]
    result = pipeline.run(text, tags)
    _write(args.output, result.text)
    if args.dump_detections:
        _write(args.dump_detections, detections_tsv(result.detections))
    if args.dump_corrections:
        _write(args.dump_corrections, corrections_tsv(result.corrections))
    changed = sum(c.replacement is not None for c in result.corrections)
    print(f"{len(result.detections)} detections, {changed} corrections")
    return EXIT_OK


def cmd_evaluate(args) -> int:
    abbrev = load_abbrev_table(args.abbrev) if args.abbrev else {}

    def tokens(path):
        return normalize(_read(path), abbrev).words()

    detections = read_detections(args.detections)
    counts = count_outcomes(
        tokens(args.gold),
        tokens(args.corrupted),
        tokens(args.corrected),
        [(li, ti) for li, ti, _ in detections],
    )
    report = counts.to_json() if args.json else counts.report()
    if args.output:
        _write(args.output, report)
    sys.stdout.write(report)
    for problem in consistency_check(counts):
        log.warning("bookkeeping identity violated: %s", problem)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="textcorr", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-lexicon", help="write lex.<label>.txt files")
    p.add_argument("input", help="word/TAG corpus, or a word list with --label")
    p.add_argument("--lexicon-dir", required=True)
    p.add_argument("--label", help="treat input as a word list for this label")
    p.set_defaults(func=cmd_build_lexicon)

    p = sub.add_parser("build-lm", help="count word or tag n-grams")
    p.add_argument("corpus")
    p.add_argument("output")
    p.add_argument("--order", type=int, default=2)
    p.add_argument("--unit", choices=(WORD, TAG), default=WORD)
    p.add_argument("--annotated", action="store_true", help="corpus is word/TAG (implied for --unit tag)")
    p.add_argument("--line-start", action="store_true", help=f"prefix every line with {LINE_START}")
    p.add_argument("--abbrev")
    p.set_defaults(func=cmd_build_lm)

    p = sub.add_parser("train-tagger", help="train the TBL tagger")
    p.add_argument("annotated")
    p.add_argument("output")
    p.add_argument("--max-rules", type=int, default=100)
    p.add_argument("--min-gain", type=int, default=1)
    p.set_defaults(func=cmd_train_tagger)

    p = sub.add_parser("inject", help="corrupt one word per ten-word line")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--log")
    p.add_argument("--gold", help="also write the reformatted clean text here")
    p.add_argument("--preformatted", action="store_true", help="input is already ten words per line")
    p.add_argument("--all-ops", action="store_true", help="use all seven edit operations")
    p.set_defaults(func=cmd_inject)

    p = sub.add_parser("correct", help="detect and correct errors")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--mode", choices=(PAEC, MAEC), default=MAEC)
    p.add_argument("--lexicon-dir")
    p.add_argument("--lm-bigram")
    p.add_argument("--lm-trigram")
    p.add_argument("--tagger")
    p.add_argument("--tag-lm-bigram")
    p.add_argument("--use-tag-lm", action="store_true")
    p.add_argument("--oracle-tags", help="word/TAG file with gold tags (PAEC, replaces --tagger)")
    p.add_argument("--abbrev")
    p.add_argument("--max-ed", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--dump-detections")
    p.add_argument("--dump-corrections")
    p.set_defaults(func=cmd_correct)

    p = sub.add_parser("evaluate", help="count outcomes and the correction rate")
    p.add_argument("gold")
    p.add_argument("corrupted")
    p.add_argument("corrected")
    p.add_argument("detections", help="TSV written by correct --dump-detections")
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.add_argument("--abbrev")
    p.set_defaults(func=cmd_evaluate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except AlignmentError as exc:
        print(f"textcorr: alignment error: {exc}", file=sys.stderr)
        return EXIT_ALIGN
    except (ConfigError, ParseError, ValueError) as exc:
        print(f"textcorr: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except TextcorrError as exc:
        print(f"textcorr: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"textcorr: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
