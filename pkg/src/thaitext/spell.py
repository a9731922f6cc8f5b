"""Corpus-frequency spell checking.

Candidate words are generated by single-character edits (delete, adjacent
transpose, substitute, insert) over a fixed alphabet, the approach
popularized by Norvig's corrector.  A known word is its own answer;
otherwise the first nonempty of edits-1 and edits-2 candidates wins, ranked
by corpus count with a codepoint tie-break so output is identical across
platforms.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .data import DataFileError, data_path, read_data_lines

__all__ = [
    "EditAlphabet",
    "FrequencyTable",
    "default_alphabet",
    "default_frequencies",
    "load_frequencies",
    "edits1",
    "candidates",
    "correct",
]


class EditAlphabet:
    """Ordered, duplicate-free scalars used for insertions and substitutions."""

    def __init__(self, scalars: Iterable[str]):
        seen: dict[str, None] = {}
        for ch in scalars:
            if len(ch) != 1:
                raise ValueError(f"alphabet entries must be single scalars, got {ch!r}")
            seen.setdefault(ch)
        if not seen:
            raise ValueError("alphabet must not be empty")
        self.scalars: tuple[str, ...] = tuple(seen)

    def __iter__(self):
        return iter(self.scalars)

    def __len__(self) -> int:
        return len(self.scalars)


def default_alphabet() -> EditAlphabet:
    """Thai consonants plus vowel, tone, and sign marks (U+0E01-U+0E4C)."""
    return EditAlphabet(chr(c) for c in range(0x0E01, 0x0E4D))


class FrequencyTable:
    """Immutable word -> occurrence-count map; absent words count 0."""

    def __init__(self, counts: Mapping[str, int]):
        clean: dict[str, int] = {}
        for word, count in counts.items():
            if not word:
                raise ValueError("frequency table words must be nonempty")
            if count <= 0:
                raise ValueError(f"count for {word!r} must be positive, got {count}")
            clean[word] = count
        self._counts = clean
        self.total = sum(clean.values())

    def count(self, word: str) -> int:
        return self._counts.get(word, 0)

    def __contains__(self, word: str) -> bool:
        return word in self._counts

    def __len__(self) -> int:
        return len(self._counts)

    def words(self):
        return self._counts.keys()


def load_frequencies(path) -> FrequencyTable:
    """Read ``word<TAB>count`` lines into a table; bad lines name their number."""
    counts: dict[str, int] = {}
    for lineno, text in read_data_lines(path):
        word, sep, raw = text.partition("\t")
        if not sep or not word:
            raise DataFileError(path, "expected word<TAB>count", line=lineno)
        try:
            count = int(raw.strip())
        except ValueError:
            raise DataFileError(path, f"bad count {raw.strip()!r}", line=lineno) from None
        if count <= 0:
            raise DataFileError(path, f"count must be positive, got {count}", line=lineno)
        counts[word] = counts.get(word, 0) + count
    return FrequencyTable(counts)


_DEFAULT_FREQ: dict[str, FrequencyTable] = {}


def default_frequencies() -> FrequencyTable:
    path = str(data_path("frequencies"))
    table = _DEFAULT_FREQ.get(path)
    if table is None:
        table = load_frequencies(path)
        _DEFAULT_FREQ[path] = table
    return table


def edits1(word: str, alphabet: EditAlphabet | None = None) -> set[str]:
    """Every string one edit away from ``word`` (the word itself excluded)."""
    letters = (alphabet or default_alphabet()).scalars
    splits = [(word[:i], word[i:]) for i in range(len(word) + 1)]
    deletes = [left + right[1:] for left, right in splits if right]
    transposes = [
        left + right[1] + right[0] + right[2:] for left, right in splits if len(right) > 1
    ]
    substitutions = [
        left + ch + right[1:] for left, right in splits if right for ch in letters if ch != right[0]
    ]
    inserts = [left + ch + right for left, right in splits for ch in letters]
    out = set(deletes + transposes + substitutions + inserts)
    out.discard(word)
    return out


def _known(words, freq: FrequencyTable) -> set[str]:
    return {w for w in words if w in freq}


def candidates(
    word: str,
    freq: FrequencyTable | None = None,
    alphabet: EditAlphabet | None = None,
) -> list[tuple[str, int]]:
    """Ranked corrections as ``(word, count)`` pairs.

    A known word short-circuits; edits-2 candidates are only generated when
    no edits-1 candidate is known; an unknown word with no candidates falls
    back to itself with count 0, as does the empty string (there is nothing
    to correct).  Ranking is count-descending with a codepoint tie-break,
    so the order is fully deterministic.
    """
    if freq is None:
        freq = default_frequencies()
    if alphabet is None:
        alphabet = default_alphabet()
    if not word:
        return [(word, 0)]
    if word in freq:
        return [(word, freq.count(word))]
    once = edits1(word, alphabet)
    found = _known(once, freq)
    if not found:
        twice: set[str] = set()
        for e1 in once:
            twice.update(edits1(e1, alphabet))
        found = _known(twice, freq)
    if not found:
        return [(word, 0)]
    ranked = sorted(found, key=lambda w: (-freq.count(w), w))
    return [(w, freq.count(w)) for w in ranked]


def correct(
    word: str,
    freq: FrequencyTable | None = None,
    alphabet: EditAlphabet | None = None,
) -> str:
    """Best correction for ``word`` (the word itself when known or hopeless)."""
    return candidates(word, freq, alphabet)[0][0]
