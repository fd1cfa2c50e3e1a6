import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from textcorr.errors import InconsistencyError, ParseError
from textcorr.normalizer import (
    LEADING,
    TRAILING,
    Document,
    NormalizationRecord,
    denormalize,
    fold,
    load_abbrev_table,
    normalize,
)


def test_simple_sentence():
    doc = normalize("El gato corre.", {})
    assert doc.words() == [["el", "gato", "corre"]]
    assert (0, 2, TRAILING, ".") in doc.record.punct_marks
    assert doc.record.case_marks == [(0, 0, (0,))]


def test_empty_text():
    doc = normalize("", {})
    assert doc.lines == []
    assert denormalize(doc) == ""


def test_abbreviation_expanded_and_restored():
    doc = normalize("Dr. Pérez", {"dr.": "doctor"})
    assert doc.words() == [["doctor", "pérez"]]
    assert doc.record.abbrev_expansions == [(0, 0, "Dr.", "doctor")]
    assert denormalize(doc) == "Dr. Pérez"


def test_multiword_abbreviation_with_trailing_punct():
    doc = normalize("Vino, p.ej., ayer.", {"p.ej.": "por ejemplo"})
    assert doc.words() == [["vino", "por", "ejemplo", "ayer"]]
    assert denormalize(doc) == "Vino, p.ej., ayer."


def test_round_trip_simple():
    assert denormalize(normalize("El gato corre.")) == "El gato corre."


def test_substitution_keeps_case_and_punct():
    doc = normalize("La cassa.")
    fixed = doc.replace_word(0, 1, "casa")
    assert denormalize(fixed) == "La casa."


def test_substitution_recases_initial_capital():
    doc = normalize("Cassa grande")
    assert denormalize(doc.replace_word(0, 0, "casa")) == "Casa grande"


def test_all_caps_word_stays_all_caps():
    doc = normalize("la CASSA")
    assert denormalize(doc.replace_word(0, 1, "casas")) == "la CASAS"


def test_excess_case_positions_are_dropped():
    doc = normalize("xY")
    assert denormalize(doc.replace_word(0, 0, "a")) == "a"


def test_punctuation_inside_chunk_splits_tokens():
    doc = normalize("«sí-no»")
    assert doc.words() == [["sí", "no"]]
    assert (0, 0, LEADING, "«") in doc.record.punct_marks
    assert (0, 0, TRAILING, "-") in doc.record.punct_marks
    assert (0, 1, TRAILING, "»") in doc.record.punct_marks


def test_one_line_per_input_line():
    doc = normalize("uno\n\n\u2014 dos")
    assert doc.words() == [["uno"], [], ["dos"]]


def test_sentences():
    doc = normalize("Hola. Qué tal? Bien\notra línea")
    got = [[t.normalized for t in s] for s in doc.sentences()]
    assert got == [["hola"], ["qué", "tal"], ["bien"], ["otra", "línea"]]


def test_abbreviation_period_is_not_a_sentence_end():
    doc = normalize("El Dr. Pérez llega.", {"dr.": "doctor"})
    assert len(list(doc.sentences())) == 1


def test_malformed_utf8_reports_offset():
    with pytest.raises(ParseError, match="byte offset 3"):
        normalize(b"abc\xff")


def test_missing_token_position_is_inconsistent():
    doc = normalize("a b")
    bad = Document(doc.lines, NormalizationRecord(
        case_marks=[(0, 5, (0,))], layout=doc.record.layout))
    with pytest.raises(InconsistencyError):
        denormalize(bad)


def test_load_abbrev_table(tmp_path):
    path = tmp_path / "abbrev.tsv"
    path.write_text("dr.\tdoctor\nsra.\tseñora\n", encoding="utf-8")
    assert load_abbrev_table(path) == {"dr.": "doctor", "sra.": "señora"}
    path.write_text("dr\tdoctor\n", encoding="utf-8")
    with pytest.raises(ParseError):
        load_abbrev_table(path)


def test_normalize_is_idempotent_on_normalized_text():
    doc = normalize("¡Hola, Mundo! ¿Qué TAL?")
    flat = "\n".join(" ".join(line) for line in doc.words())
    assert normalize(flat).words() == doc.words()


text_chars = st.characters(
    blacklist_categories=("Cs",),
    whitelist_categories=("Lu", "Ll", "Nd", "Po", "Ps", "Pe", "Pd", "Sm", "Zs"),
) | st.sampled_from(list("\n\t .,;¿?¡!áÉñÜ"))


@settings(max_examples=300)
@given(st.text(text_chars, max_size=60))
def test_round_trip_property(text):
    assert denormalize(normalize(text)) == text


@settings(max_examples=200)
@given(st.text(text_chars, max_size=60))
def test_tokens_are_clean(text):
    doc = normalize(text)
    for line in doc.lines:
        for ti, tok in enumerate(line):
            assert tok.token_index == ti
            assert tok.normalized
            assert not any(c.isspace() for c in tok.normalized)
            assert fold(tok.normalized) == tok.normalized
            assert fold(tok.surface) == tok.normalized
