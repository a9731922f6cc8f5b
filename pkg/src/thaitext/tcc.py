"""Thai character-cluster (TCC) segmentation.

A cluster is a minimal run of scalars that no word boundary may split: a
base consonant together with the vowels, tone marks, and signs stacked on
it, plus the lead vowel written before it.  The rule table lives in a
bundled data file (see ``data/tcc_rules.txt`` for the syntax) and is
compiled into a single regular expression:

* every rule with optional elements is expanded into fixed-length
  variants, sorted longest first, so the leftmost regex alternative that
  matches is also the longest rule match;
* a matched cluster then absorbs any directly following stacking marks
  (above/below vowels, tones, thanthakhat), which keeps malformed
  sequences from starting a cluster with a bare mark;
* single-scalar fallbacks guarantee a match at every position.  Scalars
  outside the Thai block are always singleton clusters and never absorb
  marks; an orphan mark after one of them (or at the start of the text)
  becomes a degenerate cluster of its own.

Offsets are Unicode scalar indices (plain ``str`` indices), not bytes.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import NamedTuple

from .data import DataFileError, data_path, read_data_lines

__all__ = [
    "ClusterSpan",
    "TccRuleTable",
    "default_rule_table",
    "tcc_segment",
    "tcc_boundaries",
    "cluster_strings",
]

_CLASS_PATTERNS = {
    "C": "[ก-ฮ]",
    "LV": "[เ-ไ]",
    "FV": "[ะาำ]",
    "AV": "[ัิ-ื็]",
    "BV": "[ุ-ฺ]",
    "T": "[่-๋]",
    "S": "[์ํๆฯ]",
}

_ABSORB = "[ัิ-ื็ุ-ฺ่-๋์]*"
_THAI_ONE = "[฀-๿]"
_NON_THAI_ONE = "[^฀-๿]"


class ClusterSpan(NamedTuple):
    start: int
    end: int


class _Element(NamedTuple):
    pattern: str
    optional: bool


def _parse_rule(line: str, path, lineno: int) -> list[_Element]:
    elements: list[_Element] = []
    for token in line.split():
        optional = token.endswith("?")
        if optional:
            token = token[:-1]
        if not token:
            raise DataFileError(path, "empty rule element", line=lineno)
        if token in _CLASS_PATTERNS:
            pattern = _CLASS_PATTERNS[token]
        elif len(token) == 1:
            pattern = re.escape(token)
        else:
            raise DataFileError(
                path, f"unknown element {token!r} (not a class name or single scalar)", line=lineno
            )
        elements.append(_Element(pattern, optional))
    if not elements:
        raise DataFileError(path, "empty rule", line=lineno)
    if all(el.optional for el in elements):
        raise DataFileError(path, "rule must have at least one mandatory element", line=lineno)
    return elements


def _expand(elements: list[_Element]) -> list[tuple[int, str]]:
    """All fixed-length variants of a rule as ``(scalar_length, pattern)``."""
    variants = [(0, "")]
    for el in elements:
        extended = [(n + 1, v + el.pattern) for n, v in variants]
        variants = extended + variants if el.optional else extended
    return variants


class TccRuleTable:
    """An ordered cluster-rule table compiled to one scanning regex."""

    def __init__(self, rule_elements: list[list[_Element]], source: str = "<builtin>"):
        self.source = source
        self.rule_count = len(rule_elements)
        weighted: list[tuple[int, int, str]] = []
        for index, elements in enumerate(rule_elements):
            for length, variant in _expand(elements):
                weighted.append((length, index, variant))
        # longest first; table order breaks length ties
        weighted.sort(key=lambda item: (-item[0], item[1]))
        alternatives = "|".join(v for _, _, v in weighted)
        thai = f"(?:{alternatives}|{_THAI_ONE}){_ABSORB}" if alternatives else f"{_THAI_ONE}{_ABSORB}"
        self._pattern = re.compile(f"(?:{thai}|{_NON_THAI_ONE})")

    @classmethod
    def from_file(cls, path) -> "TccRuleTable":
        rules = [_parse_rule(text, path, lineno) for lineno, text in read_data_lines(path)]
        return cls(rules, source=str(path))

    def segment(self, text: str) -> list[ClusterSpan]:
        return [ClusterSpan(m.start(), m.end()) for m in self._pattern.finditer(text)]

    def boundaries(self, text: str) -> list[int]:
        return [m.end() for m in self._pattern.finditer(text)]


@lru_cache(maxsize=4)
def _table_from(path_str: str) -> TccRuleTable:
    return TccRuleTable.from_file(path_str)


def default_rule_table() -> TccRuleTable:
    """The bundled rule table (honors the THAITEXT_DATA override)."""
    return _table_from(str(data_path("tcc_rules")))


def tcc_segment(text: str, table: TccRuleTable | None = None) -> list[ClusterSpan]:
    """Split ``text`` into contiguous cluster spans covering it exactly."""
    return (table or default_rule_table()).segment(text)


def tcc_boundaries(text: str, table: TccRuleTable | None = None) -> list[int]:
    """Ascending cluster end offsets; includes ``len(text)`` when text is nonempty."""
    return (table or default_rule_table()).boundaries(text)


def cluster_strings(text: str, table: TccRuleTable | None = None) -> list[str]:
    """Cluster substrings, in order."""
    return [text[s:e] for s, e in tcc_segment(text, table)]
