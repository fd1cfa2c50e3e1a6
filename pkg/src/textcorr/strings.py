"""Word-level string primitives: Levenshtein distance and skeleton keys."""

from __future__ import annotations

import unicodedata

VOWELS = frozenset("aeiou")


def edit_distance(a: str, b: str) -> int:
    """Levenshtein distance (unit-cost insert, delete, substitute)."""
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def strip_diacritics(word: str) -> str:
    decomposed = unicodedata.normalize("NFD", word)
    return "".join(c for c in decomposed if not unicodedata.combining(c))


def skeleton(word: str) -> str:
    """Skeleton key: first letter, then unique consonants, then unique vowels.

    Letters are compared after stripping diacritics, so ``"camión"`` and
    ``"camion"`` share a key.  Anything that is not one of ``aeiou`` counts
    as a consonant.

    >>> skeleton("informatics")
    'infrmtcsoa'
    """
    if not word:
        raise ValueError("skeleton of an empty word")
    base = strip_diacritics(word)
    if not base:
        raise ValueError(f"word {word!r} has no base characters")
    first = base[0]
    seen = {first}
    consonants = []
    vowels = []
    for ch in base[1:]:
        if ch in seen:
            continue
        seen.add(ch)
        (vowels if ch in VOWELS else consonants).append(ch)
    return first + "".join(consonants) + "".join(vowels)
