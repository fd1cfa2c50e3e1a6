"""Seeded generator for a small Spanish-like POS-annotated corpus."""

import random

from textcorr.lexicon import PosTag

VOCAB = {
    PosTag.ART: ["el", "la", "los", "las", "un", "una"],
    PosTag.NOUN: [
        "gato", "perro", "casa", "mesa", "libro", "ciudad", "camino", "mujer",
        "hombre", "niño", "ventana", "puerta", "jardín", "escuela", "mercado",
        "árbol", "río", "montaña", "pueblo", "carta",
    ],
    PosTag.VERB: [
        "corre", "come", "mira", "escribe", "abre", "cierra", "busca",
        "encuentra", "camina", "vive", "lee", "canta",
    ],
    PosTag.ADJ: ["grande", "pequeño", "rojo", "viejo", "nuevo", "bonito", "oscuro", "alto"],
    PosTag.ADV: ["rápidamente", "siempre", "nunca", "hoy", "lentamente", "bien"],
    PosTag.PREP: ["en", "con", "sin", "sobre", "hacia", "desde", "por"],
    PosTag.CONJ: ["y", "pero", "aunque"],
    PosTag.PRON: ["ella", "nosotros", "ellos", "alguien"],
    PosTag.INTJ: ["ay", "oh"],
}

T = PosTag
TEMPLATES = [
    [T.ART, T.NOUN, T.VERB, T.ADV],
    [T.ART, T.NOUN, T.ADJ, T.VERB, T.PREP, T.ART, T.NOUN],
    [T.PRON, T.VERB, T.ART, T.NOUN],
    [T.ART, T.NOUN, T.VERB, T.PREP, T.ART, T.NOUN, T.CONJ, T.PRON, T.VERB, T.ADV],
    [T.INTJ, T.PRON, T.ADV, T.VERB],
]


def tagged_corpus(n_words: int = 500, seed: int = 0) -> list[tuple[str, PosTag]]:
    """A flat (word, tag) sequence of exactly ``n_words`` tokens."""
    rng = random.Random(seed)
    out: list[tuple[str, PosTag]] = []
    while len(out) < n_words:
        for tag in rng.choice(TEMPLATES):
            out.append((rng.choice(VOCAB[tag]), tag))
    return out[:n_words]


def vocabulary() -> dict[PosTag, list[str]]:
    return {t: list(ws) for t, ws in VOCAB.items()}


def chunk(seq, size=10):
    return [seq[i : i + size] for i in range(0, len(seq), size)]
