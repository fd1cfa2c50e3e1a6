"""Synthetic typing-error injection.

The default protocol reflows text to ten words per line and then corrupts
exactly one letter-level position in one word of every line with an
insertion, deletion or substitution.  The other word-level operations
(duplication, transposition, segmentation, union) are available through
``ops=ALL_OPS``.
"""

from __future__ import annotations

import enum
import logging
import random
import re
from dataclasses import dataclass, field
from typing import Sequence

log = logging.getLogger(__name__)

WORDS_PER_LINE = 10
ALPHABET = "abcdefghijklmnopqrstuvwxyzáéíóúüñ"


class EditOp(enum.Enum):
    INSERTION = "INSERTION"
    DUPLICATION = "DUPLICATION"
    DELETION = "DELETION"
    SUBSTITUTION = "SUBSTITUTION"
    TRANSPOSITION = "TRANSPOSITION"
    SEGMENTATION = "SEGMENTATION"
    UNION = "UNION"


SIMULATION_OPS = (EditOp.INSERTION, EditOp.DELETION, EditOp.SUBSTITUTION)
ALL_OPS = tuple(EditOp)


@dataclass(frozen=True)
class LogEntry:
    line_index: int
    token_index: int
    op: EditOp
    char_pos: int
    original: str
    mutated: str
    char: str = ""


@dataclass
class InjectionLog:
    entries: list[LogEntry] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def to_tsv(self) -> str:
        rows = ["line\ttoken\top\tchar_pos\toriginal\tmutated\tchar"]
        for e in self.entries:
            rows.append(
                f"{e.line_index}\t{e.token_index}\t{e.op.value}\t{e.char_pos}\t{e.original}\t{e.mutated}\t{e.char}"
            )
        return "\n".join(rows) + "\n"


def format_ten_per_line(text: str, per_line: int = WORDS_PER_LINE) -> str:
    words = text.split()
    lines = [" ".join(words[i : i + per_line]) for i in range(0, len(words), per_line)]
    return "\n".join(lines) + "\n" if lines else ""


def apply_edit(word: str, op: EditOp, char_pos: int, replacement_char: str = "") -> str:
    n = len(word)
    if op is EditOp.INSERTION:
        if not 0 <= char_pos <= n or len(replacement_char) != 1:
            raise ValueError(f"bad insertion at {char_pos} in {word!r}")
        return word[:char_pos] + replacement_char + word[char_pos:]
    if op is EditOp.SEGMENTATION:
        if not 1 <= char_pos <= n - 1:
            raise ValueError(f"cannot split {word!r} at {char_pos}")
        return word[:char_pos] + " " + word[char_pos:]
    if op is EditOp.UNION:
        raise ValueError("UNION joins two tokens; use apply_union")
    if op is EditOp.TRANSPOSITION:
        if not 0 <= char_pos < n - 1:
            raise ValueError(f"cannot transpose at {char_pos} in {word!r}")
        return word[:char_pos] + word[char_pos + 1] + word[char_pos] + word[char_pos + 2 :]
    if not 0 <= char_pos < n:
        raise ValueError(f"position {char_pos} outside {word!r}")
    if op is EditOp.DUPLICATION:
        return word[: char_pos + 1] + word[char_pos:]
    if op is EditOp.DELETION:
        return word[:char_pos] + word[char_pos + 1 :]
    if op is EditOp.SUBSTITUTION:
        if len(replacement_char) != 1 or replacement_char == word[char_pos]:
            raise ValueError("substitution must use a different single character")
        return word[:char_pos] + replacement_char + word[char_pos + 1 :]
    raise ValueError(f"unknown op {op!r}")


def apply_union(words: Sequence[str], index: int) -> list[str]:
    """Join ``words[index]`` with its right neighbour."""
    if not 0 <= index < len(words) - 1:
        raise ValueError("union needs a right neighbour")
    return [*words[:index], words[index] + words[index + 1], *words[index + 2 :]]


def _letters(word: str) -> list[int]:
    return [i for i, c in enumerate(word) if c.isalpha()]


def _applicable(word: str, op: EditOp, pos: int, n_words: int, index: int) -> bool:
    letters = _letters(word)
    if op is EditOp.DELETION:
        return len(letters) > 1
    if op is EditOp.TRANSPOSITION:
        return pos + 1 < len(word) and word[pos + 1].isalpha() and word[pos] != word[pos + 1]
    if op is EditOp.SEGMENTATION:
        return 1 <= pos <= len(word) - 1
    if op is EditOp.UNION:
        return index < n_words - 1
    return True


def inject(
    formatted: str, seed: int, ops: Sequence[EditOp] = SIMULATION_OPS
) -> tuple[str, InjectionLog]:
    """Corrupt one word per line.

    For each line a word is drawn uniformly, then one of its letters, then
    an operation.  Draws that would make the operation impossible (for
    example deleting the only letter of a word) are repeated.  Same input
    and seed give the same output.
    """
    rng = random.Random(seed)
    log_ = InjectionLog()
    out_lines = []
    lines = formatted.split("\n")
    for li, line in enumerate(lines):
        pieces = re.split(r"(\s+)", line)
        word_slots = [i for i, p in enumerate(pieces) if p and not p[0].isspace()]
        eligible = [i for i in word_slots if _letters(pieces[i])]
        if not eligible:
            if line.strip() or li < len(lines) - 1:
                log.warning("line %d has no words to corrupt; left unchanged", li)
            out_lines.append(line)
            continue
        for _ in range(10_000):
            slot = rng.choice(eligible)
            word = pieces[slot]
            pos = rng.choice(_letters(word))
            op = rng.choice(ops)
            ti = word_slots.index(slot)
            if _applicable(word, op, pos, len(word_slots), ti):
                break
        else:
            log.warning("line %d: no applicable edit found", li)
            out_lines.append(line)
            continue
        char = ""
        if op is EditOp.UNION:
            nxt = word_slots[ti + 1]
            mutated = word + pieces[nxt]
            original = word + " " + pieces[nxt]
            pieces[slot] = mutated
            del pieces[slot + 1 : nxt + 1]
        else:
            if op is EditOp.INSERTION:
                char = rng.choice(ALPHABET)
            elif op is EditOp.SUBSTITUTION:
                char = rng.choice([c for c in ALPHABET if c != word[pos].lower()])
            original = word
            mutated = apply_edit(word, op, pos, char)
            pieces[slot] = mutated
        log_.entries.append(LogEntry(li, ti, op, pos, original, mutated, char))
        out_lines.append("".join(pieces))
    return "\n".join(out_lines), log_
