import pytest
from hypothesis import given
from hypothesis import strategies as st

from textcorr.errors import ConfigError, ParseError
from textcorr.language_model import (
    TAG,
    WORD,
    build_ngram_model,
    contains_ngram,
    load_model,
    save_model,
    transition_probability,
)

PHRASE = [["computing", "is", "not", "easy"]]

corpora = st.lists(st.lists(st.sampled_from("abcde"), max_size=8), max_size=6)


def test_phrase_bigrams():
    m = build_ngram_model(PHRASE, 2)
    assert dict(m.counts) == {
        ("computing", "is"): 1, ("is", "not"): 1, ("not", "easy"): 1}


def test_phrase_trigrams():
    m = build_ngram_model(PHRASE, 3)
    assert set(m.counts) == {("computing", "is", "not"), ("is", "not", "easy")}


def test_repeated_bigrams():
    m = build_ngram_model([["a", "b", "a", "b"]], 2)
    assert dict(m.counts) == {("a", "b"): 2, ("b", "a"): 1}


def test_no_cross_line_ngrams():
    m = build_ngram_model([["a", "b"], ["c", "d"]], 2)
    assert not contains_ngram(m, ("b", "c"))


def test_bad_order():
    with pytest.raises(ConfigError):
        build_ngram_model(PHRASE, 4)


def test_contains():
    m = build_ngram_model(PHRASE, 2)
    assert contains_ngram(m, ("is", "not"))
    assert not contains_ngram(m, ("easy", "computing"))
    assert not contains_ngram(build_ngram_model([], 2), ("a", "b"))
    with pytest.raises(ValueError):
        contains_ngram(m, ("is",))


def test_transition_probability():
    m = build_ngram_model([["a", "b", "a", "b"]], 2)
    assert transition_probability(m, ("a",), "b") == 1.0
    assert transition_probability(m, ("b",), "a") == 1.0
    assert transition_probability(m, ("z",), "a") == 0.0


def test_tag_model_rejects_words():
    build_ngram_model([["ART", "NOUN"]], 2, TAG)
    with pytest.raises(ValueError):
        build_ngram_model([["el", "NOUN"]], 2, TAG)


def test_save_load_round_trip(tmp_path):
    path = tmp_path / "lm.tsv"
    m = build_ngram_model(PHRASE, 2)
    save_model(m, path)
    assert path.read_text(encoding="utf-8").splitlines()[0] == "#order=2 unit=word"
    assert load_model(path) == m


def test_load_empty_model(tmp_path):
    path = tmp_path / "lm.tsv"
    path.write_text("#order=3 unit=word\n", encoding="utf-8")
    m = load_model(path)
    assert m.order == 3 and m.unit == WORD and len(m) == 0


def test_load_zero_count_fails_with_line(tmp_path):
    path = tmp_path / "lm.tsv"
    path.write_text("#order=2 unit=word\na\tb\t3\nb\tc\t0\n", encoding="utf-8")
    with pytest.raises(ParseError) as err:
        load_model(path)
    assert err.value.line == 3


def test_load_wrong_arity(tmp_path):
    path = tmp_path / "lm.tsv"
    path.write_text("#order=2 unit=word\na\tb\tc\t3\n", encoding="utf-8")
    with pytest.raises(ParseError):
        load_model(path)


@given(corpora, st.sampled_from([2, 3]))
def test_count_sum(lines, n):
    m = build_ngram_model(lines, n)
    assert sum(m.counts.values()) == sum(max(0, len(l) - n + 1) for l in lines)
    for ctx, total in m.context_totals.items():
        assert total == sum(c for g, c in m.counts.items() if g[:-1] == ctx)


@given(corpora, st.sampled_from([2, 3]))
def test_probabilities_normalize(lines, n):
    m = build_ngram_model(lines, n)
    for ctx in m.context_totals:
        total = sum(transition_probability(m, ctx, w) for w in m.vocabulary)
        assert abs(total - 1.0) <= 1e-12


@given(corpora, st.lists(st.sampled_from("abcdez"), min_size=2, max_size=2))
def test_contains_iff_positive_probability(lines, pair):
    m = build_ngram_model(lines, 2)
    assert contains_ngram(m, pair) == (transition_probability(m, pair[:1], pair[1]) > 0)
