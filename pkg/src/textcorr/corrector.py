"""Candidate generation and selection for flagged words."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .detector import DetectionResult
from .language_model import LINE_START, NGramModel
from .lexicon import GENERAL, Label, Lexicon, PosTag, candidates_by_overlap
from .normalizer import Document
from .strings import edit_distance, skeleton  # noqa: F401  (re-exported)

PAEC = "paec"
MAEC = "maec"


@dataclass(frozen=True)
class Candidate:
    word: str
    source_tag: Label
    edit_dist: int
    skeleton_dist: int
    len_diff: int
    context_score: int = 0


@dataclass(frozen=True)
class Correction:
    position: tuple[int, int]
    original: str
    replacement: Optional[str] = None

    def __post_init__(self):
        if self.replacement is not None and self.replacement == self.original:
            raise ValueError("a correction must change the word")


@dataclass
class Resources:
    lexicons: Mapping[Label, Lexicon]
    lm2: NGramModel
    lm3: Optional[NGramModel] = None
    # Tags aligned with the document lines; required for PAEC.
    tags: Optional[Sequence[Sequence[PosTag]]] = None
    max_ed: Optional[int] = None


def default_max_ed(word: str) -> int:
    return 2 if len(word) >= 4 else 1


def lexicon_for(tag: Optional[PosTag], lexicons: Mapping[Label, Lexicon]) -> Lexicon:
    if tag is None or tag is PosTag.MISC or tag not in lexicons:
        return lexicons[GENERAL]
    return lexicons[tag]


def generate_candidates(
    err: str,
    tag: Optional[PosTag],
    lexicons: Mapping[Label, Lexicon],
    max_ed: Optional[int] = None,
) -> list[Candidate]:
    if not err:
        raise ValueError("empty error word")
    if max_ed is None:
        max_ed = default_max_ed(err)
    lex = lexicon_for(tag, lexicons)
    err_skel = skeleton(err)
    out = []
    for word in sorted(candidates_by_overlap(lex, err)):
        if word == err:
            continue
        d = edit_distance(err, word)
        if d > max_ed:
            continue
        out.append(
            Candidate(
                word=word,
                source_tag=lex.label,
                edit_dist=d,
                skeleton_dist=edit_distance(err_skel, skeleton(word)),
                len_diff=abs(len(err) - len(word)),
            )
        )
    return out


def context_score(
    word: str,
    left: Optional[str],
    right: Optional[str],
    lm2: NGramModel,
    lm3: Optional[NGramModel] = None,
) -> int:
    score = 0
    if left is not None:
        score += lm2.count(left, word)
    if right is not None:
        score += lm2.count(word, right)
    if lm3 is not None and left is not None and right is not None:
        score += lm3.count(left, word, right)
    return score


def _rank(c: Candidate):
    return (-c.context_score, c.edit_dist, c.skeleton_dist, c.len_diff, c.word)


def select(
    candidates: Iterable[Candidate],
    left_context: Optional[str],
    right_context: Optional[str],
    lm2: NGramModel,
    lm3: Optional[NGramModel] = None,
) -> Optional[Candidate]:
    """Best candidate by context counts, then edit distance, skeleton distance,
    length difference and finally spelling.  ``None`` if there are none."""
    scored = [
        Candidate(
            c.word,
            c.source_tag,
            c.edit_dist,
            c.skeleton_dist,
            c.len_diff,
            context_score(c.word, left_context, right_context, lm2, lm3),
        )
        for c in candidates
    ]
    return min(scored, key=_rank, default=None)


def correct_document(
    doc: Document,
    detections: DetectionResult,
    mode: str,
    resources: Resources,
) -> tuple[Document, list[Correction]]:
    """Replace every detected word with its best candidate.

    Neighbours are always taken from the uncorrected document, so the
    result does not depend on the order detections are processed in.
    """
    if mode not in (PAEC, MAEC):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == PAEC and resources.tags is None:
        raise ValueError("PAEC correction needs tags aligned with the document")
    words = doc.words()
    corrections = []
    out = doc
    for li, ti, word in detections.PE:
        if not (0 <= li < len(words) and 0 <= ti < len(words[li])):
            raise ValueError(f"detection ({li}, {ti}) is outside the document")
        if words[li][ti] != word:
            raise ValueError(
                f"detection ({li}, {ti}) names {word!r} but the document has {words[li][ti]!r}"
            )
        tag = resources.tags[li][ti] if mode == PAEC else None
        line = words[li]
        left = line[ti - 1] if ti > 0 else LINE_START
        right = line[ti + 1] if ti + 1 < len(line) else None
        cands = generate_candidates(word, tag, resources.lexicons, resources.max_ed)
        best = select(cands, left, right, resources.lm2, resources.lm3)
        if best is None:
            corrections.append(Correction((li, ti), word, None))
            continue
        out = out.replace_word(li, ti, best.word)
        corrections.append(Correction((li, ti), word, best.word))
    return out, corrections
