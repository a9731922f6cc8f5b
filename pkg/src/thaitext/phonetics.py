"""Phonetic hashing and simplified romanization for search keys.

The MetaSound-style code keeps a word's first pronounced scalar and maps
the remaining consonants to one of seven place/manner classes, so words
that sound alike hash to the same fixed-length key.  Romanization is a
per-scalar transcription in the spirit of the Royal Thai General System:
a lead vowel is written after the onset consonants it precedes, a small
digraph list handles the vowel shapes spelled around their consonant, and
tones and signs disappear.  Both are table-driven from bundled data
files; neither attempts syllable analysis.
"""

from __future__ import annotations

from .chars import CharClass, classify_char
from .data import DataFileError, data_path, read_data_lines

__all__ = [
    "ConsonantClassTable",
    "RomanizationTable",
    "default_consonant_classes",
    "default_romanization_table",
    "metasound",
    "romanize",
]

_THANTHAKHAT = "์"

# Initial consonant pairs that form a true onset cluster; the second
# consonant of any other pair starts its own syllable.
_ONSET_PAIRS = {
    ("ก", "ร"), ("ข", "ร"), ("ค", "ร"), ("ต", "ร"), ("ป", "ร"), ("พ", "ร"),
    ("ก", "ล"), ("ข", "ล"), ("ค", "ล"), ("ป", "ล"), ("ผ", "ล"), ("พ", "ล"),
    ("ก", "ว"), ("ข", "ว"), ("ค", "ว"),
}

_VOWEL_CLASSES = (
    CharClass.LEAD_VOWEL,
    CharClass.FOLLOW_VOWEL,
    CharClass.ABOVE_VOWEL,
    CharClass.BELOW_VOWEL,
)


class ConsonantClassTable:
    """Consonant scalar -> class digit '1'-'7'; total over ก-ฮ."""

    def __init__(self, classes: dict[str, str], source: str = "<dict>"):
        for ch, digit in classes.items():
            if classify_char(ch) is not CharClass.CONSONANT:
                raise ValueError(f"{ch!r} is not a consonant")
            if digit not in "1234567":
                raise ValueError(f"class for {ch!r} must be '1'-'7', got {digit!r}")
        missing = [
            chr(c) for c in range(0x0E01, 0x0E2F) if chr(c) not in classes
        ]
        if missing:
            raise ValueError(f"consonants without a class: {''.join(missing)}")
        self._classes = dict(classes)
        self.source = source

    def digit(self, ch: str) -> str | None:
        return self._classes.get(ch)

    @classmethod
    def from_file(cls, path) -> "ConsonantClassTable":
        classes: dict[str, str] = {}
        for lineno, text in read_data_lines(path):
            key, sep, value = text.partition("\t")
            if not sep or len(key) != 1:
                raise DataFileError(path, "expected scalar<TAB>digit", line=lineno)
            classes[key] = value.strip()
        try:
            return cls(classes, source=str(path))
        except ValueError as exc:
            raise DataFileError(path, str(exc)) from None


class RomanizationTable:
    """Thai scalar -> lowercase Latin, plus lead-vowel digraph entries.

    A multi-scalar key must start with a lead vowel; its remainder is the
    written tail that completes the vowel after the onset consonants
    (e.g. the key for the sara ao shape pairs the lead vowel with the
    following sara aa).  Unlisted Thai scalars transcribe to nothing.
    """

    def __init__(self, entries: dict[str, str], source: str = "<dict>"):
        singles: dict[str, str] = {}
        digraphs: dict[str, list[tuple[str, str]]] = {}
        for key, value in entries.items():
            if not key:
                raise ValueError("empty key")
            if any(not ("a" <= c <= "z" or "0" <= c <= "9") for c in value):
                raise ValueError(f"value for {key!r} must be lowercase ASCII, got {value!r}")
            if len(key) == 1:
                singles[key] = value
            elif classify_char(key[0]) is CharClass.LEAD_VOWEL:
                digraphs.setdefault(key[0], []).append((key[1:], value))
            else:
                raise ValueError(f"multi-scalar key {key!r} must start with a lead vowel")
        for tails in digraphs.values():
            tails.sort(key=lambda item: -len(item[0]))  # longest tail first
        self._singles = singles
        self._digraphs = digraphs
        self.source = source

    def single(self, ch: str) -> str:
        out = self._singles.get(ch)
        if out is not None:
            return out
        return ch if classify_char(ch) is CharClass.NON_THAI else ""

    def digraph_tails(self, lead: str) -> list[tuple[str, str]]:
        return self._digraphs.get(lead, [])

    @classmethod
    def from_file(cls, path) -> "RomanizationTable":
        entries: dict[str, str] = {}
        for lineno, text in read_data_lines(path):
            key, sep, value = text.partition("\t")
            if not sep or not key:
                raise DataFileError(path, "expected scalar(s)<TAB>latin", line=lineno)
            value = value.strip()
            entries[key] = "" if value == "-" else value
        try:
            return cls(entries, source=str(path))
        except ValueError as exc:
            raise DataFileError(path, str(exc)) from None


_TABLES: dict[str, object] = {}


def default_consonant_classes() -> ConsonantClassTable:
    path = str(data_path("metasound"))
    table = _TABLES.get(path)
    if table is None:
        table = ConsonantClassTable.from_file(path)
        _TABLES[path] = table
    return table


def default_romanization_table() -> RomanizationTable:
    path = str(data_path("romanize"))
    table = _TABLES.get(path)
    if table is None:
        table = RomanizationTable.from_file(path)
        _TABLES[path] = table
    return table


def metasound(word: str, table: ConsonantClassTable | None = None, length: int = 4) -> str:
    """Fixed-length phonetic code for a Thai word.

    Tones and signs are dropped, a consonant silenced by thanthakhat is
    dropped with its mark, and vowels are dropped; the first surviving
    scalar is kept verbatim and later consonants become class digits, with
    adjacent repeats collapsed.  The code is padded with '0' to ``length``.
    """
    if length < 1:
        raise ValueError(f"code length must be positive, got {length}")
    if table is None:
        table = default_consonant_classes()
    kept: list[str] = []
    i = 0
    n = len(word)
    while i < n:
        ch = word[i]
        cls = classify_char(ch)
        if cls is CharClass.CONSONANT and i + 1 < n and word[i + 1] == _THANTHAKHAT:
            i += 2
            continue
        if cls is CharClass.TONE or cls is CharClass.SIGN or cls in _VOWEL_CLASSES:
            i += 1
            continue
        kept.append(ch)
        i += 1
    code: list[str] = []
    for index, ch in enumerate(kept):
        if index == 0:
            code.append(ch)
            continue
        digit = table.digit(ch)
        if digit is None:
            continue  # only consonants map to digits
        if not code or code[-1] != digit:
            code.append(digit)
    return "".join(code[:length]).ljust(length, "0")


def romanize(word: str, table: RomanizationTable | None = None) -> str:
    """Transcribe ``word`` to lowercase Latin; non-Thai scalars pass through."""
    if table is None:
        table = default_romanization_table()
    out: list[str] = []
    i = 0
    n = len(word)
    while i < n:
        ch = word[i]
        if classify_char(ch) is not CharClass.LEAD_VOWEL:
            out.append(table.single(ch))
            i += 1
            continue
        # Collect the onset consonants the lead vowel wraps around.
        j = i + 1
        onset: list[str] = []
        if j < n and classify_char(word[j]) is CharClass.CONSONANT:
            onset.append(word[j])
            j += 1
            if (
                j < n
                and classify_char(word[j]) is CharClass.CONSONANT
                and (onset[0], word[j]) in _ONSET_PAIRS
            ):
                onset.append(word[j])
                j += 1
        if not onset:
            out.append(table.single(ch))
            i += 1
            continue
        # Written tail completing the vowel, with tone marks transparent.
        vowel = table.single(ch)
        consumed = j
        for tail, latin in table.digraph_tails(ch):
            k = j
            matched = True
            for want in tail:
                while k < n and classify_char(word[k]) is CharClass.TONE:
                    k += 1
                if k < n and word[k] == want:
                    k += 1
                else:
                    matched = False
                    break
            if matched:
                vowel = latin
                consumed = k
                break
        out.extend(table.single(c) for c in onset)
        out.append(vowel)
        i = consumed
    return "".join(out)
