"""Reversible text preprocessing.

``normalize`` turns raw text into lowercase word tokens and keeps everything
it removed (case, punctuation, abbreviations, spacing) in a
:class:`NormalizationRecord`.  ``denormalize`` puts it all back, so a
document whose tokens were never replaced comes out byte-identical.

Tokens are maximal runs of characters that are neither whitespace nor
Unicode punctuation/symbols (categories ``P*`` and ``S*``).  Digits stay
inside tokens.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterator, Mapping

from .errors import InconsistencyError, ParseError

LEADING = "leading"
TRAILING = "trailing"

SENTENCE_END = frozenset(".?!")

_WS_SPLIT = re.compile(r"(\s+)")


def is_punct(ch: str) -> bool:
    return unicodedata.category(ch)[0] in "PS"


def fold(text: str) -> str:
    """Lowercase ``text`` one character at a time and NFC-compose it.

    Characters whose lowercase form is not a single character are kept
    unchanged so that character positions stay meaningful.
    """
    out = []
    for ch in text:
        low = ch.lower()
        out.append(low if len(low) == 1 else ch)
    return unicodedata.normalize("NFC", "".join(out))


@dataclass(frozen=True)
class Token:
    surface: str
    normalized: str
    line_index: int
    token_index: int

    @property
    def substituted(self) -> bool:
        return fold(self.surface) != self.normalized


@dataclass
class NormalizationRecord:
    # (line, token, uppercase char positions)
    case_marks: list[tuple[int, int, tuple[int, ...]]] = field(default_factory=list)
    # (line, token, LEADING|TRAILING, symbol run)
    punct_marks: list[tuple[int, int, str, str]] = field(default_factory=list)
    # (line, first token, original abbreviation surface, expansion)
    abbrev_expansions: list[tuple[int, int, str, str]] = field(default_factory=list)
    # Per line: the non-token text between tokens, len(tokens) + 1 entries.
    layout: list[list[str]] = field(default_factory=list)


@dataclass
class Document:
    lines: list[list[Token]]
    record: NormalizationRecord

    def words(self) -> list[list[str]]:
        return [[t.normalized for t in line] for line in self.lines]

    def replace_word(self, line_index: int, token_index: int, word: str) -> "Document":
        """Return a copy with one token's normalized form swapped for ``word``."""
        try:
            old = self.lines[line_index][token_index]
        except IndexError:
            raise IndexError(f"no token at ({line_index}, {token_index})") from None
        if not word or any(c.isspace() for c in word):
            raise ValueError(f"replacement must be a single non-empty word: {word!r}")
        lines = list(self.lines)
        lines[line_index] = list(lines[line_index])
        lines[line_index][token_index] = replace(old, normalized=word)
        return Document(lines, self.record)

    def sentences(self) -> Iterator[list[Token]]:
        """Yield tokens grouped into sentences.

        A sentence ends at a token whose trailing punctuation ends in
        ``.``, ``?`` or ``!`` and is followed by whitespace or the end of
        the line.  Line ends always close a sentence.
        """
        trailing = {
            (li, ti): sym
            for li, ti, kind, sym in self.record.punct_marks
            if kind == TRAILING
        }
        for li, line in enumerate(self.lines):
            current: list[Token] = []
            layout = self.record.layout[li] if li < len(self.record.layout) else None
            for ti, tok in enumerate(line):
                current.append(tok)
                sym = trailing.get((li, ti), "")
                if sym and sym[-1] in SENTENCE_END:
                    gap = layout[ti + 1] if layout else " "
                    if gap == "" and ti + 1 == len(line) or gap[:1].isspace():
                        yield current
                        current = []
            if current:
                yield current


def load_abbrev_table(path: str | Path) -> dict[str, str]:
    """Read a ``abbrev<TAB>expansion`` file."""
    table = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\r\n")
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[1].strip():
                raise ParseError("expected 'abbrev<TAB>expansion'", lineno, path)
            abbrev, expansion = parts[0].strip(), parts[1].strip()
            if not abbrev.endswith("."):
                raise ParseError(f"abbreviation {abbrev!r} must end in '.'", lineno, path)
            table[fold(abbrev)] = expansion
    return table


def _decode(raw: bytes) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"invalid UTF-8 at byte offset {exc.start}") from exc


def _split_runs(chunk: str) -> list[tuple[bool, str]]:
    """Split a whitespace-free chunk into (is_word, text) runs."""
    runs: list[tuple[bool, str]] = []
    for ch in chunk:
        word = not is_punct(ch)
        if runs and runs[-1][0] == word:
            runs[-1] = (word, runs[-1][1] + ch)
        else:
            runs.append((word, ch))
    return runs


def _match_abbrev(chunk: str, keys: list[str]) -> tuple[str, str, str, str] | None:
    """Return (leading punct, abbrev surface, key, trailing punct) or None."""
    i = 0
    while i < len(chunk) and is_punct(chunk[i]):
        i += 1
    lead, rest = chunk[:i], chunk[i:]
    if not rest:
        return None
    low = fold(rest)
    if len(low) != len(rest):
        return None
    for key in keys:
        if low.startswith(key) and all(is_punct(c) for c in rest[len(key):]):
            return lead, rest[: len(key)], key, rest[len(key):]
    return None


def normalize(raw_text: str | bytes, abbrev_table: Mapping[str, str] | None = None) -> Document:
    if isinstance(raw_text, bytes):
        raw_text = _decode(raw_text)
    table = {fold(k): v for k, v in (abbrev_table or {}).items()}
    keys = sorted(table, key=len, reverse=True)
    record = NormalizationRecord()
    lines: list[list[Token]] = []
    if raw_text == "":
        return Document(lines, record)

    for li, raw_line in enumerate(raw_text.split("\n")):
        tokens: list[Token] = []
        gaps: list[str] = [""]

        def add_token(surface: str, normalized: str) -> int:
            ti = len(tokens)
            tokens.append(Token(surface, normalized, li, ti))
            upper = tuple(i for i, c in enumerate(surface) if c != c.lower())
            if upper:
                record.case_marks.append((li, ti, upper))
            gaps.append("")
            return ti

        for piece in _WS_SPLIT.split(raw_line):
            if not piece:
                continue
            if piece[0].isspace():
                gaps[-1] += piece
                continue
            hit = _match_abbrev(piece, keys) if keys else None
            if hit is not None:
                lead, surface, key, trail = hit
                words = table[key].split()
                first = len(tokens)
                for w in words:
                    add_token(w, fold(w))
                record.abbrev_expansions.append((li, first, surface, table[key]))
                if lead:
                    record.punct_marks.append((li, first, LEADING, lead))
                if trail:
                    record.punct_marks.append((li, len(tokens) - 1, TRAILING, trail))
                continue
            runs = _split_runs(piece)
            if not any(is_word for is_word, _ in runs):
                gaps[-1] += piece
                continue
            pending_lead = ""
            last = None
            for is_word, text in runs:
                if not is_word:
                    if last is None:
                        pending_lead = text
                    else:
                        record.punct_marks.append((li, last, TRAILING, text))
                    continue
                last = add_token(text, fold(text))
                if pending_lead:
                    record.punct_marks.append((li, last, LEADING, pending_lead))
                    pending_lead = ""
        lines.append(tokens)
        record.layout.append(gaps)
    return Document(lines, record)


def _recase(word: str, positions: tuple[int, ...], surface_len: int) -> str:
    if surface_len > 1 and len(positions) == surface_len:
        return word.upper()
    chars = list(word)
    for pos in positions:
        if pos < len(chars):
            up = chars[pos].upper()
            if len(up) == 1:
                chars[pos] = up
    return "".join(chars)


def denormalize(doc: Document) -> str:
    rec = doc.record
    if len(rec.layout) != len(doc.lines):
        raise InconsistencyError(
            f"record describes {len(rec.layout)} lines, document has {len(doc.lines)}"
        )

    def check(li: int, ti: int, what: str) -> None:
        if not (0 <= li < len(doc.lines) and 0 <= ti < len(doc.lines[li])):
            raise InconsistencyError(f"{what} refers to missing token ({li}, {ti})")

    case = {}
    for li, ti, positions in rec.case_marks:
        check(li, ti, "case mark")
        case[li, ti] = positions
    lead: dict[tuple[int, int], str] = {}
    trail: dict[tuple[int, int], str] = {}
    for li, ti, kind, sym in rec.punct_marks:
        check(li, ti, "punctuation mark")
        target = lead if kind == LEADING else trail
        target[li, ti] = target.get((li, ti), "") + sym
    abbrevs = {}
    for li, ti, surface, expansion in rec.abbrev_expansions:
        n = len(expansion.split())
        check(li, ti + n - 1, "abbreviation")
        abbrevs[li, ti] = (surface, n)

    out_lines = []
    for li, line in enumerate(doc.lines):
        gaps = rec.layout[li]
        if len(gaps) != len(line) + 1:
            raise InconsistencyError(f"layout of line {li} does not match its token count")
        parts = [gaps[0]]
        ti = 0
        while ti < len(line):
            tok = line[ti]
            if (li, ti) in abbrevs:
                surface, n = abbrevs[li, ti]
                end = ti + n - 1
            else:
                end = ti
                if tok.substituted:
                    surface = _recase(tok.normalized, case.get((li, ti), ()), len(tok.surface))
                else:
                    surface = tok.surface
            parts.append(lead.get((li, ti), ""))
            parts.append(surface)
            parts.append(trail.get((li, end), ""))
            parts.append(gaps[end + 1])
            ti = end + 1
        out_lines.append("".join(parts))
    return "\n".join(out_lines)
