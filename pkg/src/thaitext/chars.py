"""Character classification for the Thai Unicode block.

Every Unicode scalar maps to exactly one :class:`CharClass`.  The classes
follow the roles characters play in Thai orthography: base consonants,
vowels grouped by where they sit relative to their consonant (before,
after, above, below), tone marks, and the small set of signs (thanthakhat,
nikhahit, maiyamok, paiyannoi).  Everything else inside U+0E00-U+0E7F is
``THAI_OTHER`` (digits, currency, section marks); everything outside the
block is ``NON_THAI``.
"""

from __future__ import annotations

from enum import IntEnum

__all__ = [
    "CharClass",
    "classify_char",
    "is_combining",
    "is_thai",
    "COMBINING_CHARS",
    "THAI_DIGITS",
    "TONE_CHARS",
]


class CharClass(IntEnum):
    CONSONANT = 0
    LEAD_VOWEL = 1
    FOLLOW_VOWEL = 2
    ABOVE_VOWEL = 3
    BELOW_VOWEL = 4
    TONE = 5
    SIGN = 6
    THAI_OTHER = 7
    NON_THAI = 8


_FOLLOW = {"ะ", "า", "ำ"}  # ะ า ำ
_ABOVE = {"ั", "ิ", "ี", "ึ", "ื", "็"}  # ั ิ ี ึ ื ็
_BELOW = {"ุ", "ู", "ฺ"}  # ุ ู ฺ
_SIGN = {"์", "ํ", "ๆ", "ฯ"}  # ์ ํ ๆ ฯ

TONE_CHARS = frozenset({"่", "้", "๊", "๋"})  # ่ ้ ๊ ๋
THAI_DIGITS = frozenset(chr(c) for c in range(0x0E50, 0x0E5A))  # ๐-๙

# Marks that may never begin a cluster mid-text: the stacking vowels, the
# tone marks, and thanthakhat.  Nikhahit (U+0E4D) is deliberately not here.
COMBINING_CHARS = frozenset(_ABOVE | _BELOW | TONE_CHARS | {"์"})


def _build_table() -> dict[str, CharClass]:
    table: dict[str, CharClass] = {}
    for cp in range(0x0E00, 0x0E80):
        table[chr(cp)] = CharClass.THAI_OTHER
    for cp in range(0x0E01, 0x0E2F):  # ก-ฮ
        table[chr(cp)] = CharClass.CONSONANT
    for cp in range(0x0E40, 0x0E45):  # เ แ โ ใ ไ
        table[chr(cp)] = CharClass.LEAD_VOWEL
    for ch in _FOLLOW:
        table[ch] = CharClass.FOLLOW_VOWEL
    for ch in _ABOVE:
        table[ch] = CharClass.ABOVE_VOWEL
    for ch in _BELOW:
        table[ch] = CharClass.BELOW_VOWEL
    for ch in TONE_CHARS:
        table[ch] = CharClass.TONE
    for ch in _SIGN:
        table[ch] = CharClass.SIGN
    return table


_CLASS_TABLE = _build_table()
_CLASS_GET = _CLASS_TABLE.get


def classify_char(ch: str) -> CharClass:
    """Classify a single Unicode scalar.  Total: never raises on any scalar."""
    return _CLASS_GET(ch, CharClass.NON_THAI)


def is_combining(ch: str) -> bool:
    """True for marks that must attach to the cluster before them."""
    return ch in COMBINING_CHARS


def is_thai(ch: str) -> bool:
    """True for any scalar inside the Thai block U+0E00-U+0E7F."""
    return "฀" <= ch <= "๿"
