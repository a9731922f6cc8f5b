"""Immutable prefix-trie word list.

The trie answers the one query dictionary matching needs: all word ends
reachable from a start offset, in one left-to-right pass.  Nodes are plain
dicts keyed by scalar; the empty-string key marks a word end (it can never
collide with a scalar key).
"""

from __future__ import annotations

from typing import Iterable

from .data import data_path, read_data_lines

__all__ = ["Lexicon", "build_lexicon", "load_wordlist", "default_lexicon", "fixture_lexicon"]

_END = ""


class Lexicon:
    """Frozen word list with all-prefix matching.  Build once, share freely."""

    __slots__ = ("_root", "word_count", "_visits")

    def __init__(self, words: Iterable[str]):
        root: dict = {}
        count = 0
        for word in words:
            if not word:
                continue
            node = root
            for ch in word:
                nxt = node.get(ch)
                if nxt is None:
                    nxt = {}
                    node[ch] = nxt
                node = nxt
            if _END not in node:
                node[_END] = True
                count += 1
        self._root = root
        self.word_count = count
        self._visits: int | None = None

    def __contains__(self, word: str) -> bool:
        if not word:
            return False
        node = self._root
        for ch in word:
            node = node.get(ch)
            if node is None:
                return False
        return _END in node

    def __len__(self) -> int:
        return self.word_count

    def enable_visit_counting(self) -> None:
        """Count trie-node visits (for complexity assertions in tests)."""
        self._visits = 0

    @property
    def visits(self) -> int | None:
        return self._visits

    def prefix_matches(self, text: str, start: int) -> list[int]:
        """End offsets ``j`` with ``text[start:j]`` in the lexicon, ascending.

        ``start`` may equal ``len(text)`` (no matches); anything outside
        ``[0, len(text)]`` is a caller bug and raises.
        """
        if start < 0 or start > len(text):
            raise IndexError(f"start {start} out of range for text of length {len(text)}")
        if self._visits is None:
            node = self._root
            out: list[int] = []
            j = start
            n = len(text)
            while j < n:
                node = node.get(text[j])
                if node is None:
                    break
                j += 1
                if _END in node:
                    out.append(j)
            return out
        return self._prefix_matches_counted(text, start)

    def _prefix_matches_counted(self, text: str, start: int) -> list[int]:
        node = self._root
        out: list[int] = []
        j = start
        n = len(text)
        visits = 1
        while j < n:
            node = node.get(text[j])
            if node is None:
                break
            visits += 1
            j += 1
            if _END in node:
                out.append(j)
        self._visits += visits
        return out


def build_lexicon(words: Iterable[str]) -> Lexicon:
    """Build a lexicon; empty strings are dropped, duplicates stored once."""
    return Lexicon(words)


def load_wordlist(path) -> list[str]:
    """Read a word list: one word per line, ``#`` comments and blanks skipped.

    Raises :class:`~thaitext.data.DataFileError` (with a line number) for a
    missing file or invalid UTF-8.
    """
    return [text for _, text in read_data_lines(path)]


_CACHED: dict[str, Lexicon] = {}


def _cached_lexicon(name: str) -> Lexicon:
    path = str(data_path(name))
    lex = _CACHED.get(path)
    if lex is None:
        lex = build_lexicon(load_wordlist(path))
        _CACHED[path] = lex
    return lex


def default_lexicon() -> Lexicon:
    """The bundled general-purpose Thai lexicon."""
    return _cached_lexicon("lexicon")


def fixture_lexicon() -> Lexicon:
    """The small lexicon matching the bundled benchmark fixture corpus."""
    return _cached_lexicon("fixture_lexicon")
