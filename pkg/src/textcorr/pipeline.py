"""End-to-end correction: normalize, tag, detect, correct, denormalize."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Optional, Sequence

from .corrector import MAEC, PAEC, Correction, Resources, correct_document
from .detector import DetectionInput, DetectionResult, detect, make_lookup
from .errors import AlignmentError, ConfigError, ParseError
from .language_model import NGramModel, TAG, WORD, load_model
from .lexicon import GENERAL, LEXICON_TAGS, Label, Lexicon, PosTag, load_lexicon_dir
from .normalizer import Document, denormalize, load_abbrev_table, normalize
from .pos_tagger import TaggerModel, load_tagger, tag


@dataclass
class PipelineConfig:
    mode: str = MAEC
    lexicon_dir: Optional[Path] = None
    word_lm_paths: tuple = (None, None)  # (bigram, trigram)
    tag_lm_paths: Optional[tuple] = None  # (bigram, trigram)
    tagger_model: Optional[Path] = None
    abbrev_table: Optional[Path] = None
    max_ed: Optional[int] = None
    seed: Optional[int] = None
    use_tag_lm: bool = False
    # word/TAG file supplying gold tags in place of the tagger (PAEC only)
    oracle_tags: Optional[Path] = None

    def validate(self) -> None:
        if self.mode not in (PAEC, MAEC):
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.lexicon_dir is None:
            raise ConfigError("--lexicon-dir is required")
        if self.word_lm_paths[0] is None:
            raise ConfigError("--lm-bigram is required")
        if self.mode == PAEC and self.tagger_model is None and self.oracle_tags is None:
            raise ConfigError("PAEC mode needs --tagger")
        if self.use_tag_lm and (self.mode != PAEC or not self.tag_lm_paths or not self.tag_lm_paths[0]):
            raise ConfigError("--use-tag-lm needs PAEC mode and --tag-lm-bigram")
        if self.max_ed is not None and self.max_ed < 1:
            raise ConfigError("--max-ed must be >= 1")


@dataclass
class PipelineResult:
    document: Document
    tags: Optional[list[list[PosTag]]]
    detections: DetectionResult
    corrected: Document
    corrections: list[Correction]
    text: str


@dataclass
class Pipeline:
    mode: str
    lexicons: Mapping[Label, Lexicon]
    lm2: NGramModel
    lm3: Optional[NGramModel] = None
    tagger: Optional[TaggerModel] = None
    tag_lm2: Optional[NGramModel] = None
    abbrev_table: Mapping[str, str] = field(default_factory=dict)
    max_ed: Optional[int] = None

    def __post_init__(self):
        if self.mode not in (PAEC, MAEC):
            raise ConfigError(f"unknown mode {self.mode!r}")
        if GENERAL not in self.lexicons:
            raise ConfigError("the GENERAL lexicon is required")
        if self.lm2.order != 2 or self.lm2.unit != WORD:
            raise ConfigError("the detection model must be a word bigram model")
        if self.lm3 is not None and (self.lm3.order != 3 or self.lm3.unit != WORD):
            raise ConfigError("the trigram model must be a word trigram model")
        if self.tag_lm2 is not None and (self.tag_lm2.order != 2 or self.tag_lm2.unit != TAG):
            raise ConfigError("the tag model must be a tag bigram model")

    @classmethod
    def from_config(cls, config: PipelineConfig) -> "Pipeline":
        """Load every resource named in ``config``.

        Missing files raise ConfigError; unreadable ones propagate OSError.
        """
        config.validate()
        labels = [GENERAL] + (list(LEXICON_TAGS) if config.mode == PAEC else [])
        try:
            lexicons = load_lexicon_dir(config.lexicon_dir, labels)
        except FileNotFoundError as exc:
            raise ConfigError(str(exc)) from None

        def need(path):
            if path is not None and not Path(path).is_file():
                raise ConfigError(f"missing resource {path}")
            return path

        lm2 = load_model(need(config.word_lm_paths[0]))
        lm3_path = need(config.word_lm_paths[1]) if len(config.word_lm_paths) > 1 else None
        lm3 = load_model(lm3_path) if lm3_path else None
        tagger = None
        if config.mode == PAEC and config.tagger_model is not None:
            tagger = load_tagger(need(config.tagger_model))
        tag_lm2 = None
        if config.use_tag_lm:
            tag_lm2 = load_model(need(config.tag_lm_paths[0]))
        abbrev = load_abbrev_table(need(config.abbrev_table)) if config.abbrev_table else {}
        return cls(config.mode, lexicons, lm2, lm3, tagger, tag_lm2, abbrev, config.max_ed)

    def tag_document(self, doc: Document) -> list[list[PosTag]]:
        if self.tagger is None:
            raise ConfigError("PAEC mode needs a tagger model")
        return [[t for _, t in tag(line, self.tagger)] for line in doc.words()]

    def run(self, text: str, tags: Optional[Sequence[Sequence[PosTag]]] = None) -> PipelineResult:
        """Correct ``text``.

        In PAEC mode ``tags`` overrides the tagger (e.g. with gold tags); it
        must match the normalized token structure.
        """
        doc = normalize(text, self.abbrev_table)
        words = doc.words()
        if self.mode == PAEC:
            if tags is None:
                tags = self.tag_document(doc)
            elif [len(t) for t in tags] != [len(w) for w in words]:
                raise AlignmentError("supplied tags are not aligned with the text")
            tags = [list(t) for t in tags]
        else:
            tags = None
        detections = detect(
            DetectionInput.from_words(words, tags),
            make_lookup(self.lexicons),
            self.lm2,
            self.tag_lm2 if tags is not None else None,
        )
        resources = Resources(self.lexicons, self.lm2, self.lm3, tags, self.max_ed)
        corrected, corrections = correct_document(doc, detections, self.mode, resources)
        return PipelineResult(doc, tags, detections, corrected, corrections, denormalize(corrected))


def detections_tsv(result: DetectionResult) -> str:
    return "".join(f"{li}\t{ti}\t{w}\n" for li, ti, w in result.PE)


def corrections_tsv(corrections: Sequence[Correction]) -> str:
    return "".join(
        f"{c.position[0]}\t{c.position[1]}\t{c.original}\t{c.replacement or '-'}\n"
        for c in corrections
    )


def read_detections(path) -> list[tuple[int, int, str]]:
    """Parse a ``line<TAB>token<TAB>word`` dump."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\r\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 3 or not parts[0].isdigit() or not parts[1].isdigit():
                raise ParseError("expected 'line<TAB>token<TAB>word'", lineno, path)
            out.append((int(parts[0]), int(parts[1]), parts[2]))
    return out
