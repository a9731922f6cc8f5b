import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thaitext.chars import CharClass, classify_char, is_combining
from thaitext.data import DataFileError
from thaitext.tcc import TccRuleTable, cluster_strings, tcc_boundaries, tcc_segment

from oracles import brute_force_tcc_check


# Frozen from hand-applying the rule table (lead vowels glue to the next
# consonant; follow vowels, stacked marks, and signs glue to the one before).
HAND_TRACED = [
    ("", []),
    ("abc", ["a", "b", "c"]),
    ("ประเทศไทย", ["ป", "ระ", "เท", "ศ", "ไท", "ย"]),
    ("เกิด", ["เกิ", "ด"]),
    ("เสือ", ["เสือ"]),
    ("เสื่อ", ["เสื่อ"]),
    ("เกาะ", ["เกาะ"]),
    ("เขา", ["เขา"]),
    ("แข็ง", ["แข็", "ง"]),
    ("แกะ", ["แกะ"]),
    ("น้ำตก", ["น้ำ", "ต", "ก"]),
    ("กรุงเทพฯ", ["ก", "รุ", "ง", "เท", "พฯ"]),
    ("สิทธิ์", ["สิ", "ท", "ธิ์"]),
    ("ก่อน", ["ก่", "อ", "น"]),
    ("เเมว", ["เ", "เม", "ว"]),  # doubled sara e stays two clusters
    ("ไทย123", ["ไท", "ย", "1", "2", "3"]),
]


@pytest.mark.parametrize("text, expected", HAND_TRACED)
def test_hand_traced_clusters(text, expected):
    assert cluster_strings(text) == expected


def test_boundaries_match_segment():
    for text, _ in HAND_TRACED:
        spans = tcc_segment(text)
        assert tcc_boundaries(text) == [e for _, e in spans]


def test_boundaries_fixtures():
    assert tcc_boundaries("") == []
    assert tcc_boundaries("ab") == [1, 2]
    # ends after ป, ระ, เท, ศ, ไท, ย
    assert tcc_boundaries("ประเทศไทย") == [1, 3, 5, 6, 8, 9]


def test_orphan_marks_become_degenerate_clusters():
    tone = "่"
    assert cluster_strings(tone + "ก") == [tone, "ก"]
    assert cluster_strings("a" + tone) == ["a", tone]
    # a run of orphan marks is one degenerate cluster
    assert cluster_strings("a" + tone + "้") == ["a", tone + "้"]


def _coverage(text, spans):
    assert "".join(text[s:e] for s, e in spans) == text


def _no_orphan_start(text, spans):
    for idx, (s, e) in enumerate(spans):
        if not is_combining(text[s]):
            continue
        if idx == 0:
            continue
        prev_start = spans[idx - 1].start
        assert classify_char(text[prev_start]) is CharClass.NON_THAI, (
            f"cluster {text[s:e]!r} at {s} starts with a mark after a Thai cluster"
        )


def _lead_vowel_attachment(text, spans):
    for s, e in spans:
        last = text[e - 1]
        if classify_char(last) is CharClass.LEAD_VOWEL and e < len(text):
            assert classify_char(text[e]) is not CharClass.CONSONANT, (
                f"cluster ending at {e} splits a lead vowel from its consonant"
            )


def _random_text(rng: random.Random, max_len: int = 64) -> str:
    pool = [chr(rng.randrange(0x0E00, 0x0E80)) if rng.random() < 0.7
            else chr(rng.randrange(0x20, 0x7F))
            for _ in range(rng.randrange(0, max_len))]
    return "".join(pool)


def test_invariants_random_corpus():
    rng = random.Random(42)
    for _ in range(2000):
        text = _random_text(rng)
        spans = tcc_segment(text)
        assert not brute_force_tcc_check(text, spans)
        _coverage(text, spans)
        _no_orphan_start(text, spans)
        _lead_vowel_attachment(text, spans)


@settings(max_examples=300)
@given(st.text(alphabet=st.characters(min_codepoint=0x0E00, max_codepoint=0x0E7F), max_size=40))
def test_coverage_property_thai_only(text):
    spans = tcc_segment(text)
    _coverage(text, spans)
    _no_orphan_start(text, spans)
    _lead_vowel_attachment(text, spans)


def test_determinism():
    text = "เด็กเล่นน้ำเเข็งใส ๆ 123 abc"
    assert tcc_segment(text) == tcc_segment(text)


def test_non_thai_scalars_are_singletons():
    for text in ["hello", "  ", "1,2;3", "ครับ ok"]:
        for s, e in tcc_segment(text):
            if classify_char(text[s]) is CharClass.NON_THAI:
                assert e - s == 1


def test_custom_rule_file(tmp_path):
    path = tmp_path / "rules.txt"
    path.write_text("# only bare consonant-vowel\nC FV\n", encoding="utf-8")
    table = TccRuleTable.from_file(path)
    assert [c for c in table.boundaries("ตาก")] == [2, 3]
    # fallback still applies to anything the single rule misses
    assert table.segment("เกิด") == [(0, 1), (1, 3), (3, 4)]


def test_rule_file_errors(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("# comment\nC QZ\n", encoding="utf-8")
    with pytest.raises(DataFileError) as excinfo:
        TccRuleTable.from_file(bad)
    assert excinfo.value.line == 2

    empty_optional = tmp_path / "opt.txt"
    empty_optional.write_text("C? T?\n", encoding="utf-8")
    with pytest.raises(DataFileError):
        TccRuleTable.from_file(empty_optional)

    with pytest.raises(DataFileError):
        TccRuleTable.from_file(tmp_path / "missing.txt")
