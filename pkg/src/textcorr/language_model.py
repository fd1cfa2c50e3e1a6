"""Word and POS-tag n-gram models (orders 2 and 3), unsmoothed.

N-grams never cross line boundaries.  The line-start pseudo-word ``<I>``
is counted like any other token when it appears in the input lines.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import ConfigError, ParseError
from .lexicon import PosTag

LINE_START = "<I>"
WORD = "word"
TAG = "tag"
ORDERS = (2, 3)


@dataclass
class NGramModel:
    order: int
    unit: str = WORD
    counts: Counter = field(default_factory=Counter)
    context_totals: Counter = field(default_factory=Counter)
    vocabulary: set = field(default_factory=set)

    def __post_init__(self):
        if self.order not in ORDERS:
            raise ConfigError(f"unsupported n-gram order {self.order}; use 2 or 3")
        if self.unit not in (WORD, TAG):
            raise ConfigError(f"unknown n-gram unit {self.unit!r}")

    def add(self, ngram: tuple[str, ...], count: int = 1) -> None:
        self.counts[ngram] += count
        self.context_totals[ngram[:-1]] += count
        self.vocabulary.update(ngram)

    def count(self, *ngram: str) -> int:
        return self.counts.get(tuple(ngram), 0)

    def __contains__(self, ngram) -> bool:
        return contains_ngram(self, ngram)

    def __len__(self) -> int:
        return len(self.counts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NGramModel):
            return NotImplemented
        return (self.order, self.unit, dict(self.counts)) == (
            other.order,
            other.unit,
            dict(other.counts),
        )


def _check_tag(tok: str) -> None:
    if tok != LINE_START and tok not in PosTag.__members__:
        raise ValueError(f"not a POS tag: {tok!r}")


def build_ngram_model(
    corpus_lines: Iterable[Sequence[str]], order: int, unit: str = WORD
) -> NGramModel:
    model = NGramModel(order, unit)
    for line in corpus_lines:
        if unit == TAG:
            for tok in line:
                _check_tag(tok)
        model.vocabulary.update(line)
        for i in range(len(line) - order + 1):
            model.add(tuple(line[i : i + order]))
    return model


def contains_ngram(model: NGramModel, ngram: Sequence[str]) -> bool:
    if len(ngram) != model.order:
        raise ValueError(f"expected a {model.order}-gram, got {len(ngram)} tokens")
    return tuple(ngram) in model.counts


def transition_probability(model: NGramModel, context: Sequence[str], next_token: str) -> float:
    """Maximum-likelihood P(next | context); 0.0 for unseen contexts."""
    context = tuple(context)
    total = model.context_totals.get(context, 0)
    if not total:
        return 0.0
    return model.counts.get(context + (next_token,), 0) / total


def save_model(model: NGramModel, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"#order={model.order} unit={model.unit}\n")
        for ngram in sorted(model.counts):
            fh.write("\t".join(ngram) + f"\t{model.counts[ngram]}\n")


def _parse_header(line: str, path) -> tuple[int, str]:
    fields = {}
    for part in line[1:].split():
        key, sep, value = part.partition("=")
        if not sep:
            raise ParseError(f"bad header field {part!r}", 1, path)
        fields[key] = value
    try:
        order = int(fields["order"])
        unit = fields["unit"]
    except (KeyError, ValueError):
        raise ParseError("header must be '#order=<n> unit=<word|tag>'", 1, path) from None
    return order, unit


def load_model(path: str | Path) -> NGramModel:
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or not lines[0].startswith("#"):
        raise ParseError("missing '#order=<n> unit=<word|tag>' header", 1, path)
    order, unit = _parse_header(lines[0], path)
    try:
        model = NGramModel(order, unit)
    except ConfigError as exc:
        raise ParseError(str(exc), 1, path) from None
    for lineno, line in enumerate(lines[1:], 2):
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != order + 1:
            raise ParseError(f"expected {order} tokens and a count", lineno, path)
        *ngram, raw_count = parts
        if not raw_count.isdigit() or int(raw_count) < 1:
            raise ParseError(f"count must be a positive integer, got {raw_count!r}", lineno, path)
        if any(not tok for tok in ngram):
            raise ParseError("empty token", lineno, path)
        if unit == TAG:
            try:
                for tok in ngram:
                    _check_tag(tok)
            except ValueError as exc:
                raise ParseError(str(exc), lineno, path) from None
        ngram = tuple(ngram)
        if ngram in model.counts:
            raise ParseError(f"duplicate n-gram {ngram}", lineno, path)
        model.add(ngram, int(raw_count))
    return model
