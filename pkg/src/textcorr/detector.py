"""Contextual error detection.

Each line is scanned word by word with the line-start pseudo-word ``<I>``
in front.  A word missing from its lexicon is always flagged.  A word that
is in the lexicon is examined through its neighbouring word bigrams: when
the bigram with its left neighbour is unknown to the language model, the
right bigram is checked too, and blame goes to whichever word in the
neighbourhood is most plausibly wrong:

* a neighbour that is not in its lexicon is flagged itself;
* otherwise the current word is flagged, unless the only evidence against
  it is a left neighbour that has already been flagged.

Bigrams that touch ``<I>`` or the end of a line are always considered
known.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Optional

from .language_model import LINE_START, NGramModel
from .lexicon import GENERAL, PosTag

LINE_END = "</I>"
_SENTINELS = (LINE_START, LINE_END)

Lookup = Callable[[str, Optional[PosTag]], bool]


@dataclass
class DetectionInput:
    """Word lines each starting with ``<I>``; optional parallel tags.

    ``tags[i][0]`` belongs to ``<I>`` and is always ``None``.
    """

    P: list[list[str]]
    tags: Optional[list[list[Optional[PosTag]]]] = None

    def __post_init__(self):
        for li, line in enumerate(self.P):
            if not line or line[0] != LINE_START:
                raise ValueError(f"line {li} does not start with {LINE_START}")
        if self.tags is not None:
            if len(self.tags) != len(self.P):
                raise ValueError("tag lines do not match word lines")
            for li, (ws, ts) in enumerate(zip(self.P, self.tags)):
                if len(ws) != len(ts):
                    raise ValueError(
                        f"line {li}: {len(ws)} words but {len(ts)} tags"
                    )

    @classmethod
    def from_words(cls, lines, tags=None) -> "DetectionInput":
        """Build from plain word lines (and tag lines) without ``<I>``."""
        P = [[LINE_START, *line] for line in lines]
        T = None
        if tags is not None:
            if len(tags) != len(lines):
                raise ValueError("tag lines do not match word lines")
            T = [[None, *line] for line in tags]
        return cls(P, T)


@dataclass
class DetectionResult:
    # (line_index, token_index, word); token_index excludes <I>
    PE: list[tuple[int, int, str]]

    def positions(self) -> set[tuple[int, int]]:
        return {(li, ti) for li, ti, _ in self.PE}

    def __len__(self) -> int:
        return len(self.PE)


def lookup_for(word: str, tag: Optional[PosTag], lexicons: Mapping) -> bool:
    """Lexicon membership: the tag's lexicon when tagged, else GENERAL."""
    if tag is None or tag is PosTag.MISC:
        lex = lexicons[GENERAL]
    else:
        lex = lexicons.get(tag)
        if lex is None:
            return False
    return word in lex.words


def make_lookup(lexicons: Mapping) -> Lookup:
    return lambda word, tag: lookup_for(word, tag, lexicons)


def detect(
    inp: DetectionInput,
    word_lookup: Lookup,
    LN: NGramModel,
    tag_lm: Optional[NGramModel] = None,
) -> DetectionResult:
    """Flag suspect words line by line.

    ``tag_lm`` (a tag bigram model) only adds evidence: a word bigram counts
    as missing if either the words or their tags were never seen together.
    """
    if LN.order != 2:
        raise ValueError("detection needs a bigram word model")
    if tag_lm is not None and (tag_lm.order != 2 or inp.tags is None):
        raise ValueError("tag bigram evidence needs a tag bigram model and tags")

    found: set[tuple[int, int]] = set()
    for li, words in enumerate(inp.P):
        tags = inp.tags[li] if inp.tags is not None else [None] * len(words)
        n = len(words)

        def word_at(k):
            return words[k] if k < n else LINE_END

        def in_lp(k):
            return word_lookup(words[k], tags[k])

        def bigram_known(a, b):
            wa, wb = word_at(a), word_at(b)
            if wa in _SENTINELS or wb in _SENTINELS:
                return True
            if (wa, wb) not in LN.counts:
                return False
            if tag_lm is not None and tags[a] is not None and tags[b] is not None:
                return (tags[a].value, tags[b].value) in tag_lm.counts
            return True

        def flagged(k):
            return (li, k) in found

        for k in range(1, n):
            if not in_lp(k):
                found.add((li, k))
                continue
            flag = 0
            ant, post = k - 1, k + 1
            if bigram_known(ant, k):
                continue
            if not in_lp(ant):
                found.add((li, ant))
            else:
                flag = 1
            if not bigram_known(k, post):
                if not in_lp(post):
                    found.add((li, post))
                elif not flagged(post):
                    flag = 2
            if flag == 2:
                found.add((li, k))
            if flag == 1 and not flagged(ant):
                found.add((li, k))

    PE = [(li, k - 1, inp.P[li][k]) for li, k in sorted(found)]
    return DetectionResult(PE)
