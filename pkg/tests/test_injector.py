from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from synthetic import tagged_corpus
from textcorr.injector import (
    ALL_OPS,
    SIMULATION_OPS,
    EditOp,
    apply_edit,
    apply_union,
    format_ten_per_line,
    inject,
)
from textcorr.strings import edit_distance


def corpus_text(n_words=300, seed=0):
    return " ".join(w for w, _ in tagged_corpus(n_words, seed))


def test_format_twenty_words():
    out = format_ten_per_line(" ".join(f"w{i}" for i in range(20)))
    assert [len(l.split()) for l in out.splitlines()] == [10, 10]


def test_format_thirteen_words():
    out = format_ten_per_line("\n".join(f"w{i}" for i in range(13)))
    assert [len(l.split()) for l in out.splitlines()] == [10, 3]


def test_format_empty():
    assert format_ten_per_line("") == ""
    assert format_ten_per_line("  \n ") == ""


@pytest.mark.parametrize("op, pos, char, out", [
    (EditOp.DELETION, 1, "", "gto"),
    (EditOp.TRANSPOSITION, 0, "", "agto"),
    (EditOp.SEGMENTATION, 2, "", "ga to"),
    (EditOp.INSERTION, 4, "s", "gatos"),
    (EditOp.SUBSTITUTION, 0, "p", "pato"),
    (EditOp.DUPLICATION, 1, "", "gaato"),
])
def test_apply_edit(op, pos, char, out):
    assert apply_edit("gato", op, pos, char) == out


@pytest.mark.parametrize("op, pos, char", [
    (EditOp.SUBSTITUTION, 0, "g"),
    (EditOp.DELETION, 4, ""),
    (EditOp.INSERTION, 5, "x"),
    (EditOp.TRANSPOSITION, 3, ""),
    (EditOp.SEGMENTATION, 0, ""),
    (EditOp.UNION, 0, ""),
])
def test_apply_edit_contract(op, pos, char):
    with pytest.raises(ValueError):
        apply_edit("gato", op, pos, char)


def test_apply_union():
    assert apply_union(["el", "gato", "come"], 1) == ["el", "gatocome"]
    with pytest.raises(ValueError):
        apply_union(["el"], 0)


def test_one_token_changes_per_line():
    formatted = format_ten_per_line(corpus_text())
    out, log = inject(formatted, seed=3)
    before, after = formatted.splitlines(), out.splitlines()
    assert len(log) == len(before)
    for entry, a, b in zip(log, before, after):
        wa, wb = a.split(), b.split()
        assert len(wa) == len(wb)
        diff = [i for i, (x, y) in enumerate(zip(wa, wb)) if x != y]
        assert diff == [entry.token_index]
        assert wa[entry.token_index] == entry.original
        assert wb[entry.token_index] == entry.mutated


def test_same_seed_same_output():
    formatted = format_ten_per_line(corpus_text())
    assert inject(formatted, 7) == inject(formatted, 7)
    assert inject(formatted, 7)[0] != inject(formatted, 8)[0]


def test_lines_without_words_are_skipped(caplog):
    out, log = inject("el gato\n...\n", seed=1)
    assert len(log) == 1
    assert out.split("\n")[1] == "..."
    assert "no words" in caplog.text


@settings(max_examples=50)
@given(st.integers(0, 2**32), st.sampled_from([SIMULATION_OPS, ALL_OPS]))
def test_log_entries_replay(seed, ops):
    formatted = format_ten_per_line(corpus_text(60, seed % 7))
    _, log = inject(formatted, seed, ops)
    for e in log:
        assert e.original != e.mutated
        if e.op is EditOp.UNION:
            assert e.mutated == e.original.replace(" ", "")
            continue
        assert apply_edit(e.original, e.op, e.char_pos, e.char) == e.mutated
        if e.op in SIMULATION_OPS:
            assert edit_distance(e.original, e.mutated) == 1


def test_simulation_ops_only_by_default():
    _, log = inject(format_ten_per_line(corpus_text(1000)), seed=0)
    assert set(Counter(e.op for e in log)) <= set(SIMULATION_OPS)


def test_single_letter_words_never_deleted_to_nothing():
    formatted = format_ten_per_line(" ".join(["y"] * 100))
    out, log = inject(formatted, seed=2)
    assert all(e.mutated for e in log)
    assert all(len(l.split()) == 10 for l in out.splitlines())


def test_log_tsv():
    _, log = inject("el gato come\n", seed=0)
    rows = log.to_tsv().splitlines()
    assert rows[0].split("\t")[:3] == ["line", "token", "op"]
    assert len(rows) == 2
