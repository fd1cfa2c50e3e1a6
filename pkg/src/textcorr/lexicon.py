"""Word lexicons with letter n-gram and skeleton indices.

There is one lexicon per part of speech (nine of them; MISC has none) plus
a GENERAL lexicon holding every word.  Words are indexed by length:

* 1-2 letters: monograms
* 3 letters: bigrams
* 4+ letters: bigrams and trigrams

and every word is also indexed under its skeleton key.
"""

from __future__ import annotations

import enum
import unicodedata
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Union

from .errors import ParseError
from .strings import skeleton


class PosTag(enum.Enum):
    VERB = "VERB"
    NOUN = "NOUN"
    CONJ = "CONJ"
    PREP = "PREP"
    ART = "ART"
    ADJ = "ADJ"
    ADV = "ADV"
    PRON = "PRON"
    INTJ = "INTJ"
    MISC = "MISC"

    @classmethod
    def parse(cls, name: str) -> "PosTag":
        try:
            return cls[name]
        except KeyError:
            raise ValueError(f"unknown POS tag {name!r}") from None

    @property
    def order(self) -> int:
        return _TAG_ORDER[self]


_TAG_ORDER = {t: i for i, t in enumerate(PosTag)}

GENERAL = "GENERAL"
Label = Union[PosTag, str]

# Tags that own a dedicated lexicon.
LEXICON_TAGS = tuple(t for t in PosTag if t is not PosTag.MISC)


def label_name(label: Label) -> str:
    """File-name form of a lexicon label (``noun``, ``general``, ...)."""
    if isinstance(label, PosTag):
        return label.value.lower()
    if label != GENERAL:
        raise ValueError(f"bad lexicon label {label!r}")
    return "general"


def parse_label(name: str) -> Label:
    up = name.upper()
    if up == GENERAL:
        return GENERAL
    tag = PosTag.parse(up)
    if tag is PosTag.MISC:
        raise ValueError("MISC has no dedicated lexicon")
    return tag


def letter_ngrams(word: str, n: int) -> list[str]:
    """Contiguous character n-grams of ``word`` in order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [word[i : i + n] for i in range(len(word) - n + 1)]


def index_orders(word: str) -> tuple[int, ...]:
    """Which n-gram orders a word of this length is indexed under."""
    if len(word) <= 2:
        return (1,)
    if len(word) == 3:
        return (2,)
    return (2, 3)


def index_keys(word: str) -> set[str]:
    return {g for n in index_orders(word) for g in letter_ngrams(word, n)}


@dataclass(frozen=True)
class Lexicon:
    label: Label
    words: frozenset[str]
    ngram_index: Mapping[str, frozenset[str]] = field(repr=False)
    skeleton_index: Mapping[str, frozenset[str]] = field(repr=False)

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)


def clean_word(word: str) -> str:
    return unicodedata.normalize("NFC", word.strip()).lower()


def build_lexicon(word_list: Iterable[str], label: Label) -> Lexicon:
    words = set()
    for lineno, raw in enumerate(word_list, 1):
        w = clean_word(raw)
        if not w:
            raise ParseError("empty word", lineno)
        words.add(w)
    ngrams = defaultdict(set)
    skels = defaultdict(set)
    for w in words:
        for g in index_keys(w):
            ngrams[g].add(w)
        skels[skeleton(w)].add(w)
    return Lexicon(
        label=label,
        words=frozenset(words),
        ngram_index={g: frozenset(ws) for g, ws in ngrams.items()},
        skeleton_index={k: frozenset(ws) for k, ws in skels.items()},
    )


def contains(lex: Lexicon, word: str) -> bool:
    return word in lex.words


def candidates_by_overlap(lex: Lexicon, word: str) -> set[str]:
    """Lexicon words sharing an indexed letter n-gram or the skeleton key."""
    if not word:
        raise ValueError("empty query word")
    found: set[str] = set()
    for g in index_keys(word):
        found.update(lex.ngram_index.get(g, ()))
    found.update(lex.skeleton_index.get(skeleton(word), ()))
    return found


def lexicon_path(directory: str | Path, label: Label) -> Path:
    return Path(directory) / f"lex.{label_name(label)}.txt"


def load_lexicon(path: str | Path, label: Label | None = None) -> Lexicon:
    path = Path(path)
    if label is None:
        parts = path.name.split(".")
        if len(parts) != 3 or parts[0] != "lex" or parts[2] != "txt":
            raise ValueError(f"cannot infer lexicon label from {path.name!r}")
        label = parse_label(parts[1])
    with open(path, encoding="utf-8") as fh:
        lines = [ln.rstrip("\r\n") for ln in fh]
    # tolerate a trailing blank line, nothing else
    while lines and not lines[-1].strip():
        lines.pop()
    try:
        return build_lexicon(lines, label)
    except ParseError as exc:
        raise ParseError("empty word", exc.line, path) from None


def save_lexicon(lex: Lexicon, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for w in sorted(lex.words):
            fh.write(w + "\n")


def load_lexicon_dir(directory: str | Path, labels: Iterable[Label]) -> dict[Label, Lexicon]:
    """Load ``lex.<label>.txt`` for each requested label.

    Raises FileNotFoundError naming the first missing file.
    """
    out = {}
    for label in labels:
        path = lexicon_path(directory, label)
        if not path.is_file():
            raise FileNotFoundError(f"missing lexicon file {path}")
        out[label] = load_lexicon(path, label)
    return out
