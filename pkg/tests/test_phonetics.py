import random

import pytest

from thaitext.data import DataFileError
from thaitext.normalize import remove_tonemarks
from thaitext.phonetics import (
    ConsonantClassTable,
    RomanizationTable,
    default_consonant_classes,
    metasound,
    romanize,
)


class TestMetasound:
    def test_empty_is_padding(self):
        assert metasound("") == "0000"

    def test_hand_applied_codes(self):
        assert metasound("สูง") == "ส500"
        assert metasound("นนท์") == "น500"  # ท silenced by thanthakhat
        assert metasound("ทราย") == "ท670"

    def test_code_shape(self):
        rng = random.Random(3)
        pool = [chr(c) for c in range(0x0E01, 0x0E4E)]
        for _ in range(500):
            word = "".join(rng.choice(pool) for _ in range(rng.randrange(0, 8)))
            code = metasound(word)
            assert len(code) == 4
            assert all(c in "1234567" + "0" for c in code[1:])

    def test_custom_length(self):
        assert metasound("ทราย", length=2) == "ท6"
        assert metasound("ส", length=6) == "ส00000"
        with pytest.raises(ValueError):
            metasound("ส", length=0)

    def test_tone_invariance(self):
        rng = random.Random(17)
        pool = [chr(c) for c in range(0x0E01, 0x0E4C)]
        for _ in range(1000):
            word = "".join(rng.choice(pool) for _ in range(rng.randrange(0, 10)))
            assert metasound(word) == metasound(remove_tonemarks(word))

    # Same-sounding pairs share the initial scalar, so their codes match;
    # verified by hand against the class table.
    @pytest.mark.parametrize(
        "a, b",
        [
            ("ใกล้", "ไกล"),
            ("ขาว", "ข่าว"),
            ("เสื่อ", "เสื้อ"),
            ("สุข", "สุก"),
            ("การ", "กาล"),
            ("พุทธ", "พุด"),
            ("มัน", "มันส์"),
            ("ทาน", "ท่าน"),
        ],
    )
    def test_homophone_pairs_share_codes(self, a, b):
        assert metasound(a) == metasound(b)

    @pytest.mark.parametrize(
        "a, b",
        [
            ("ตา", "มา"),
            ("สูง", "สุด"),
            ("กิน", "กบ"),
            ("ขาว", "ขาด"),
            ("เมือง", "เมฆ"),
            ("นก", "นม"),
            ("รัก", "รับ"),
            ("สอน", "สอบ"),
        ],
    )
    def test_contrast_pairs_differ(self, a, b):
        assert metasound(a) != metasound(b)


class TestClassTable:
    def test_default_total_and_disjoint(self):
        table = default_consonant_classes()
        for cp in range(0x0E01, 0x0E2F):
            assert table.digit(chr(cp)) in "1234567"

    def test_missing_consonant_rejected(self, tmp_path):
        path = tmp_path / "classes.tsv"
        path.write_text("ก\t1\n", encoding="utf-8")
        with pytest.raises(DataFileError):
            ConsonantClassTable.from_file(path)

    def test_bad_digit_rejected(self):
        classes = {chr(c): "1" for c in range(0x0E01, 0x0E2F)}
        classes["ก"] = "9"
        with pytest.raises(ValueError):
            ConsonantClassTable(classes)


class TestRomanize:
    def test_passthrough(self):
        assert romanize("abc") == "abc"
        assert romanize("") == ""

    def test_per_scalar_mapping(self):
        assert romanize("มาลี") == "mali"

    def test_lead_vowel_reorders_after_consonant(self):
        assert romanize("เมา") == "mao"  # digraph beats single mapping
        assert romanize("ไป") == "pai"
        assert romanize("แมว") == "maew"

    def test_digraphs_longest_first(self):
        assert romanize("เสีย") == "sia"
        assert romanize("เสือ") == "suea"
        assert romanize("เสื่อ") == "suea"  # tones transparent inside the shape

    def test_onset_clusters(self):
        assert romanize("โปรด") == "prod"
        assert romanize("เปลี่ยน") == "plian"

    def test_tones_and_signs_vanish(self):
        assert romanize("น้ำ") == "nam"
        assert romanize("สัตว์") == "satw"

    def test_thai_digits(self):
        assert romanize("๑๒๓") == "123"

    def test_output_ascii_and_bounded(self):
        rng = random.Random(23)
        pool = [chr(c) for c in range(0x0E00, 0x0E60)] + list("ab ?")
        for _ in range(800):
            word = "".join(rng.choice(pool) for _ in range(rng.randrange(0, 12)))
            out = romanize(word)
            assert len(out) <= 3 * len(word)
            for ch in out:
                assert ord(ch) < 128

    def test_table_validation(self, tmp_path):
        path = tmp_path / "rom.tsv"
        path.write_text("กข\tx\n", encoding="utf-8")
        with pytest.raises(DataFileError):
            RomanizationTable.from_file(path)
        with pytest.raises(ValueError):
            RomanizationTable({"ก": "K"})  # uppercase not allowed
