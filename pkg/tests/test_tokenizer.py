import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thaitext.chars import is_thai
from thaitext.lexicon import build_lexicon
from thaitext.tcc import tcc_boundaries
from thaitext.tokenizer import (
    SAFE_CHUNK_LIMIT,
    TokenKind,
    chunk_for_safety,
    longest_match_tokenize,
    newmm_tokenize,
)

import oracles


def strings(seg):
    return seg.strings()


class TestNewmmFixtures:
    def test_empty(self):
        assert strings(newmm_tokenize("", build_lexicon([]))) == []

    def test_fewest_tokens_beats_greedy_pair(self):
        lex = build_lexicon(["AB", "ABC", "C"])
        seg = newmm_tokenize("ABC", lex)
        assert strings(seg) == ["ABC"]
        assert seg.tokens[0].kind is TokenKind.KNOWN

    def test_tie_break_prefers_longer_first_token(self):
        lex = build_lexicon(["ตา", "ตาก", "กลม", "ลม"])
        assert strings(newmm_tokenize("ตากลม", lex)) == ["ตาก", "ลม"]

    def test_whitespace_pattern_token(self):
        lex = build_lexicon(["ตา"])
        seg = newmm_tokenize("ตา ตา", lex)
        assert strings(seg) == ["ตา", " ", "ตา"]
        assert [t.kind for t in seg] == [TokenKind.KNOWN, TokenKind.PATTERN, TokenKind.KNOWN]

    def test_unknown_run_single_token(self):
        lex = build_lexicon(["ลม"])
        seg = newmm_tokenize("ตากลม", lex)
        assert strings(seg) == ["ตาก", "ลม"]
        assert [t.kind for t in seg] == [TokenKind.UNKNOWN, TokenKind.KNOWN]

    def test_whole_text_in_lexicon_is_one_token(self):
        text = "ฉันกินข้าวเช้า"
        lex = build_lexicon(["ฉัน", "กิน", text])
        seg = newmm_tokenize(text, lex)
        assert strings(seg) == [text]
        assert seg.tokens[0].kind is TokenKind.KNOWN

    def test_digit_runs_group_thai_and_arabic(self):
        seg = newmm_tokenize("1๒3", build_lexicon([]))
        assert strings(seg) == ["1๒3"]
        assert seg.tokens[0].kind is TokenKind.PATTERN

    def test_lexicon_match_must_end_on_cluster_edge(self):
        # the stored word ends inside the cluster เกิ, so it cannot match
        lex = build_lexicon(["เก"])
        seg = newmm_tokenize("เกิด", lex)
        assert strings(seg) == ["เกิด"]
        assert seg.tokens[0].kind is TokenKind.UNKNOWN


class TestLongestMatchFixtures:
    def test_empty(self):
        assert strings(longest_match_tokenize("", build_lexicon([]))) == []

    def test_greedy_takes_longest_prefix(self):
        lex = build_lexicon(["AB", "ABC", "C"])
        assert strings(longest_match_tokenize("ABC", lex)) == ["ABC"]

    def test_greedy_hand_trace(self):
        lex = build_lexicon(["ตา", "กลม"])
        assert strings(longest_match_tokenize("ตากลม", lex)) == ["ตา", "กลม"]

    def test_greedy_can_strand_itself(self):
        # greedy eats ตาก and leaves ลX unknown; fewest-tokens does the same
        # here but the two engines disagree on kinds elsewhere
        lex = build_lexicon(["ตาก", "ตา", "กลม"])
        seg = longest_match_tokenize("ตากลม", lex)
        assert strings(seg)[0] == "ตาก"

    def test_unknown_is_one_cluster_at_a_time(self):
        lex = build_lexicon([])
        seg = longest_match_tokenize("เกิด", lex)
        assert strings(seg) == ["เกิ", "ด"]
        assert all(t.kind is TokenKind.UNKNOWN for t in seg)


class TestChunking:
    def test_short_text_single_cut(self):
        assert chunk_for_safety("ab", 6) == [2]
        assert chunk_for_safety("", 6) == [0]

    def test_cut_after_trailing_half_whitespace(self):
        assert chunk_for_safety("aaaa bbbb", 6) == [5, 9]

    def test_cut_on_cluster_edges_without_whitespace(self):
        text = "กขคงจฉชซญด"
        assert chunk_for_safety(text, 4) == [4, 8, 10]

    def test_leading_half_whitespace_ignored(self):
        # space sits in the leading half, so the cut falls on a cluster edge
        assert chunk_for_safety("ab cdefgh", 6) == [6, 9]

    def test_limit_validation(self):
        with pytest.raises(ValueError):
            chunk_for_safety("abc", 1)

    def test_chunks_respect_limit_and_cover(self):
        rng = random.Random(5)
        for _ in range(200):
            n = rng.randrange(0, 120)
            text = "".join(
                rng.choice("กขาิ่ เแxy 01") for _ in range(n)
            )
            limit = rng.randrange(2, 20)
            cuts = chunk_for_safety(text, limit)
            assert cuts[-1] == len(text)
            prev = 0
            for cut in cuts:
                assert 0 <= cut - prev <= limit or (prev == 0 and cut == 0)
                prev = cut


def _coverage_and_alignment(text, seg):
    assert "".join(strings(seg)) == text
    bounds = set(tcc_boundaries(text))
    for a, b in zip(seg.tokens, seg.tokens[1:]):
        cut = a.end
        if is_thai(text[cut - 1]) and is_thai(text[cut]):
            assert cut in bounds, f"cut {cut} inside a cluster of {text!r}"


@settings(max_examples=300, deadline=None)
@given(
    st.text(
        alphabet=st.one_of(
            st.characters(min_codepoint=0x0E00, max_codepoint=0x0E7F),
            st.characters(min_codepoint=0x20, max_codepoint=0x7E),
        ),
        max_size=48,
    )
)
def test_coverage_and_alignment_property(text):
    lex = build_lexicon(["ตา", "ตาก", "ลม", "กลม", "ab", "ไป"])
    _coverage_and_alignment(text, newmm_tokenize(text, lex))
    _coverage_and_alignment(text, longest_match_tokenize(text, lex))


def test_safe_mode_equals_coverage():
    rng = random.Random(11)
    lex = build_lexicon(["ตาก", "ลม", "ไป", "มา"])
    for _ in range(50):
        text = "".join(
            rng.choice("ตากลมไปมาเ่ ็x7") for _ in range(rng.randrange(0, 900))
        )
        seg = newmm_tokenize(text, lex, safe=True)
        assert "".join(strings(seg)) == text


def test_safe_mode_identical_below_limit():
    lex = build_lexicon(["ตาก", "ลม"])
    text = "ตากลม" * 50
    assert len(text) <= SAFE_CHUNK_LIMIT
    assert newmm_tokenize(text, lex, safe=True) == newmm_tokenize(text, lex, safe=False)


def test_minimality_against_exhaustive_oracle():
    rng = random.Random(99)
    for _ in range(300):
        text, words = oracles.random_instance(rng)
        lex = build_lexicon(words)
        seg = newmm_tokenize(text, lex)
        expected = oracles.best_segmentation(text, words, tcc_boundaries(text))
        got = [(t.start, t.end, t.kind.value) for t in seg.tokens]
        assert got == expected, f"text={text!r} words={words!r}"
