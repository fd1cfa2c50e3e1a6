"""Outcome counts and correction rate for one corrected text.

Counts per token position, comparing the gold text, the corrupted text fed
to the corrector, and the corrector's output:

=====  ===============================================================
p      tokens in the text
o      corrupted positions (corrupted != gold)
C      corrupted, detected, and restored to gold
F      corrupted, detected, but not restored
e      corrupted and not detected
I      not corrupted, but changed by the corrector
E      number of detections
i      residual wrong tokens, e + F + I
c      (p - i) / p
=====  ===============================================================
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AlignmentError

KEYS = ("p", "o", "i", "C", "E", "e", "I", "F")


@dataclass(frozen=True)
class EvalCounts:
    p: int = 0
    o: int = 0
    C: int = 0
    E: int = 0
    e: int = 0
    I: int = 0  # noqa: E741
    F: int = 0
    i: int = 0

    @property
    def c(self) -> Fraction:
        return correction_rate(self.p, self.i) if self.p else Fraction(1)

    def as_dict(self) -> dict:
        d = {k: getattr(self, k) for k in KEYS}
        d["c"] = round(float(self.c), 3)
        return d

    def report(self) -> str:
        lines = [f"{k}={getattr(self, k)}" for k in KEYS]
        lines.append(f"c={float(self.c):.3f}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"


def correction_rate(p: int, i: int) -> Fraction:
    """Fraction of tokens that are right after correction: (p - i) / p."""
    if p <= 0:
        raise ValueError("p must be positive")
    if not 0 <= i <= p:
        raise ValueError(f"i={i} outside [0, p={p}]")
    return Fraction(p - i, p)


def _check_alignment(gold, corrupted, corrected) -> None:
    if not len(gold) == len(corrupted) == len(corrected):
        raise AlignmentError(
            f"line counts differ: gold {len(gold)}, corrupted {len(corrupted)}, "
            f"corrected {len(corrected)}"
        )
    for li, (g, x, y) in enumerate(zip(gold, corrupted, corrected)):
        if not len(g) == len(x) == len(y):
            raise AlignmentError(
                f"line {li + 1}: token counts differ (gold {len(g)}, corrupted {len(x)}, "
                f"corrected {len(y)})",
                line=li + 1,
            )


def count_outcomes(
    gold: Sequence[Sequence[str]],
    corrupted: Sequence[Sequence[str]],
    corrected: Sequence[Sequence[str]],
    detections: Iterable[tuple[int, int]],
) -> EvalCounts:
    """``detections`` holds (line, token) positions; extra fields are ignored."""
    _check_alignment(gold, corrupted, corrected)
    flagged = {(d[0], d[1]) for d in detections}
    p = o = C = F = e = I = 0  # noqa: E741
    for li, (g_line, x_line, y_line) in enumerate(zip(gold, corrupted, corrected)):
        for ti, (g, x, y) in enumerate(zip(g_line, x_line, y_line)):
            p += 1
            if x != g:
                o += 1
                if (li, ti) in flagged:
                    if y == g:
                        C += 1
                    else:
                        F += 1
                else:
                    e += 1
            elif y != g:
                I += 1
    return EvalCounts(p=p, o=o, C=C, E=len(flagged), e=e, I=I, F=F, i=e + F + I)


def consistency_check(counts) -> list[str]:
    """Bookkeeping identities that ``counts`` violates.

    ``counts`` may be an :class:`EvalCounts` or a mapping; identities whose
    terms are not all present are skipped.
    """
    if isinstance(counts, EvalCounts):
        counts = asdict(counts)
    identities = (
        ("E", ("C", "F", "I")),
        ("o", ("C", "F", "e")),
        ("i", ("e", "F", "I")),
    )
    violated = []
    for lhs, terms in identities:
        if lhs not in counts or any(t not in counts for t in terms):
            continue
        total = sum(counts[t] for t in terms)
        if counts[lhs] != total:
            violated.append(f"{lhs}!={'+'.join(terms)} ({counts[lhs]} vs {total})")
    return violated
