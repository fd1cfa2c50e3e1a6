"""Transformation-based (Brill-style) part-of-speech tagger.

Training starts from a most-frequent-tag lexical table and greedily learns
an ordered list of rewrite rules.  Each rule says "change tag A to tag B
when <one context condition> holds" and is kept only if it lowers the
number of tagging errors on the training corpus.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import ParseError
from .lexicon import PosTag

log = logging.getLogger(__name__)

PREV_TAG = "PREV_TAG"
NEXT_TAG = "NEXT_TAG"
PREV_WORD = "PREV_WORD"
NEXT_WORD = "NEXT_WORD"
PREV2_TAG = "PREV2_TAG"
NEXT2_TAG = "NEXT2_TAG"
TEMPLATES = (PREV_TAG, NEXT_TAG, PREV_WORD, NEXT_WORD, PREV2_TAG, NEXT2_TAG)
_TEMPLATE_ORDER = {t: i for i, t in enumerate(TEMPLATES)}

# template -> (offset, reads a tag rather than a word)
_CONTEXT = {
    PREV_TAG: (-1, True),
    NEXT_TAG: (1, True),
    PREV_WORD: (-1, False),
    NEXT_WORD: (1, False),
    PREV2_TAG: (-2, True),
    NEXT2_TAG: (2, True),
}

DEFAULT_TAG = PosTag.NOUN

Sentence = Sequence[tuple[str, PosTag]]


@dataclass(frozen=True)
class TransformRule:
    from_tag: PosTag
    to_tag: PosTag
    template: str
    trigger: str

    def __post_init__(self):
        if self.from_tag == self.to_tag:
            raise ValueError("a rule must change the tag")
        if self.template not in _CONTEXT:
            raise ValueError(f"unknown rule template {self.template!r}")

    def matches(self, words: Sequence[str], tags: Sequence[PosTag], i: int) -> bool:
        if tags[i] != self.from_tag:
            return False
        offset, on_tag = _CONTEXT[self.template]
        j = i + offset
        if not 0 <= j < len(words):
            return False
        return (tags[j].value if on_tag else words[j]) == self.trigger

    def apply(self, words: Sequence[str], tags: list[PosTag]) -> int:
        """One left-to-right pass; earlier changes are visible to later positions."""
        changed = 0
        for i in range(len(words)):
            if self.matches(words, tags, i):
                tags[i] = self.to_tag
                changed += 1
        return changed

    def sort_key(self):
        return (_TEMPLATE_ORDER[self.template], self.trigger, self.from_tag.order, self.to_tag.order)


@dataclass
class TaggerModel:
    lexical_table: dict[str, PosTag] = field(default_factory=dict)
    default_tag: PosTag = DEFAULT_TAG
    rules: list[TransformRule] = field(default_factory=list)

    def initial_tags(self, words: Sequence[str]) -> list[PosTag]:
        out = []
        for w in words:
            tag = self.lexical_table.get(w)
            if tag is None:
                tag = PosTag.MISC if w.isdigit() else self.default_tag
            out.append(tag)
        return out


def train_initial(annotated: Iterable[Sentence]) -> tuple[dict[str, PosTag], PosTag]:
    counts: dict[str, Counter] = defaultdict(Counter)
    for sentence in annotated:
        for word, tag in sentence:
            if not isinstance(tag, PosTag):
                raise ValueError(f"not a PosTag: {tag!r}")
            counts[word][tag] += 1
    table = {
        w: min(c, key=lambda t: (-c[t], t.order)) for w, c in counts.items()
    }
    return table, DEFAULT_TAG


def tag(tokens: Sequence[str], model: TaggerModel) -> list[tuple[str, PosTag]]:
    tags = model.initial_tags(tokens)
    for rule in model.rules:
        rule.apply(tokens, tags)
    return list(zip(tokens, tags))


def count_errors(corpus: Sequence[Sentence], model: TaggerModel) -> int:
    errors = 0
    for sentence in corpus:
        words = [w for w, _ in sentence]
        for (_, guess), (_, gold) in zip(tag(words, model), sentence):
            errors += guess != gold
    return errors


def _propose(words, tags, gold, i):
    """Every rule instance that would turn position ``i`` into its gold tag."""
    for template, (offset, on_tag) in _CONTEXT.items():
        j = i + offset
        if 0 <= j < len(words):
            trigger = tags[j].value if on_tag else words[j]
            yield TransformRule(tags[i], gold[i], template, trigger)


def learn_rules(
    annotated: Sequence[Sentence],
    max_rules: int = 100,
    min_gain: int = 1,
    initial: tuple[dict[str, PosTag], PosTag] | None = None,
) -> tuple[list[TransformRule], list[int]]:
    """Greedy TBL rule acquisition.

    Returns the accepted rules in order and the training-error trajectory
    (errors before any rule, then after each accepted rule).
    """
    if not annotated:
        raise ValueError("cannot learn rules from an empty corpus")
    if min_gain < 1:
        raise ValueError("min_gain must be >= 1")
    table, default = initial if initial is not None else train_initial(annotated)
    words = [[w for w, _ in s] for s in annotated]
    gold = [[t for _, t in s] for s in annotated]
    base = TaggerModel(table, default)
    current = [base.initial_tags(ws) for ws in words]
    errors = sum(g != c for gs, cs in zip(gold, current) for g, c in zip(gs, cs))
    trajectory = [errors]
    rules: list[TransformRule] = []

    while len(rules) < max_rules and errors:
        candidates = set()
        for ws, ts, gs in zip(words, current, gold):
            for i in range(len(ws)):
                if ts[i] != gs[i]:
                    candidates.update(_propose(ws, ts, gs, i))
        best = None
        best_gain = 0
        for rule in sorted(candidates, key=TransformRule.sort_key):
            gain = 0
            for ws, ts, gs in zip(words, current, gold):
                trial = list(ts)
                if rule.apply(ws, trial):
                    gain += sum((a == g) - (b == g) for a, b, g in zip(trial, ts, gs))
            if gain > best_gain:
                best, best_gain = rule, gain
        if best is None or best_gain < min_gain:
            break
        for ws, ts in zip(words, current):
            best.apply(ws, ts)
        errors -= best_gain
        rules.append(best)
        trajectory.append(errors)
        log.info("rule %d: %s gain=%d errors=%d", len(rules), best, best_gain, errors)
    return rules, trajectory


def train(annotated: Sequence[Sentence], max_rules: int = 100, min_gain: int = 1):
    """Train a full model; returns (model, error trajectory)."""
    initial = train_initial(annotated)
    rules, trajectory = learn_rules(annotated, max_rules, min_gain, initial)
    return TaggerModel(initial[0], initial[1], rules), trajectory


def parse_annotated_line(line: str, lineno: int | None = None, source=None) -> list[tuple[str, PosTag]]:
    sentence = []
    for col, item in enumerate(line.split(), 1):
        word, sep, name = item.rpartition("/")
        if not sep or not word or not name:
            raise ParseError(f"token {col} {item!r} is not word/TAG", lineno, source)
        try:
            sentence.append((word.lower(), PosTag.parse(name)))
        except ValueError:
            raise ParseError(f"token {col}: unknown tag {name!r}", lineno, source) from None
    return sentence


def read_annotated(path: str | Path) -> list[list[tuple[str, PosTag]]]:
    """Read a ``word/TAG`` corpus, one sentence per line (blank lines skipped)."""
    corpus = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if line.strip():
                corpus.append(parse_annotated_line(line, lineno, path))
    return corpus


def save_tagger(model: TaggerModel, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"#default={model.default_tag.value}\n")
        for w in sorted(model.lexical_table):
            fh.write(f"{w}\t{model.lexical_table[w].value}\n")
        for r in model.rules:
            fh.write(f"RULE\t{r.from_tag.value}\t{r.to_tag.value}\t{r.template}\t{r.trigger}\n")


def load_tagger(path: str | Path) -> TaggerModel:
    model = TaggerModel()
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\r\n")
            if not line:
                continue
            try:
                if lineno == 1 and line.startswith("#default="):
                    model.default_tag = PosTag.parse(line.partition("=")[2])
                    continue
                parts = line.split("\t")
                if parts[0] == "RULE" and len(parts) == 5:
                    _, a, b, template, trigger = parts
                    model.rules.append(
                        TransformRule(PosTag.parse(a), PosTag.parse(b), template, trigger)
                    )
                elif len(parts) == 2:
                    model.lexical_table[parts[0]] = PosTag.parse(parts[1])
                else:
                    raise ValueError("expected 'word<TAB>TAG' or a RULE line")
            except ValueError as exc:
                raise ParseError(str(exc), lineno, path) from None
    return model
