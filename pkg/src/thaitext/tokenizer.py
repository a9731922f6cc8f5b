"""Dictionary-based word segmentation.

``newmm_tokenize`` picks, among all valid segmentations, one with the
fewest tokens.  A segmentation is valid when every token is one of:

* KNOWN - a lexicon word ending on a cluster boundary;
* PATTERN - a maximal ASCII-letter run, digit run (Arabic and Thai digits
  together), whitespace run, or a single other non-Thai scalar.  A digit
  run that ends inside a cluster (a stacking mark written after a Thai
  digit) stops at the last cluster edge inside it;
* UNKNOWN - a run of consecutive clusters none of which starts a KNOWN or
  PATTERN token, ending at the first position where one does (or at the
  end of the text).  Each maximal such run is a single token.

Ties between minimal segmentations are broken left to right: prefer the
longer token, then prefer KNOWN over UNKNOWN over PATTERN.  The search is
a unit-cost shortest path over token edges, solved by a right-to-left
sweep (edges only point right), so cost stays linear in practice.

Safe mode bounds worst-case behavior on very long inputs by cutting the
text into chunks of at most ``SAFE_CHUNK_LIMIT`` scalars (preferring
whitespace, then cluster edges) and tokenizing the chunks independently.
"""

from __future__ import annotations

import re
from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

from .lexicon import Lexicon, default_lexicon
from .tcc import TccRuleTable, default_rule_table

__all__ = [
    "Token",
    "TokenKind",
    "Segmentation",
    "newmm_tokenize",
    "longest_match_tokenize",
    "chunk_for_safety",
    "SAFE_CHUNK_LIMIT",
]

SAFE_CHUNK_LIMIT = 300

_PATTERN_RE = re.compile(r"[A-Za-z]+|[0-9๐-๙]+|\s+|[^฀-๿]")
_WS_RE = re.compile(r"\s+")


class TokenKind(Enum):
    KNOWN = "known"
    UNKNOWN = "unknown"
    PATTERN = "pattern"


class Token(NamedTuple):
    start: int
    end: int
    kind: TokenKind


@dataclass(frozen=True)
class Segmentation:
    """Token spans over ``text``; contiguous and covering it exactly."""

    text: str
    tokens: tuple[Token, ...]

    def strings(self) -> list[str]:
        text = self.text
        return [text[t.start : t.end] for t in self.tokens]

    def __iter__(self) -> Iterator[Token]:
        return iter(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)


def _scan_arrays(text: str, table: TccRuleTable | None):
    """Cluster boundaries plus per-position pattern-run ends."""
    bounds = (table or default_rule_table()).boundaries(text)
    n = len(text)
    is_b = bytearray(n + 1)
    for b in bounds:
        is_b[b] = 1
    pat_end = [0] * (n + 1)
    for m in _PATTERN_RE.finditer(text):
        s, e = m.span()
        pat_end[s:e] = [e] * (e - s)
    return bounds, is_b, pat_end


def newmm_tokenize(
    text: str,
    lex: Lexicon | None = None,
    safe: bool = False,
    table: TccRuleTable | None = None,
) -> Segmentation:
    """Segment ``text`` with the fewest tokens possible (see module doc)."""
    if lex is None:
        lex = default_lexicon()
    n = len(text)
    if n == 0:
        return Segmentation(text, ())
    if safe and n > SAFE_CHUNK_LIMIT:
        tokens: list[Token] = []
        prev = 0
        for cut in chunk_for_safety(text, SAFE_CHUNK_LIMIT, table):
            part = newmm_tokenize(text[prev:cut], lex, safe=False, table=table)
            tokens.extend(Token(t.start + prev, t.end + prev, t.kind) for t in part.tokens)
            prev = cut
        return Segmentation(text, tuple(tokens))

    bounds, is_b, pat_end = _scan_arrays(text, table)
    starts = [0] + [b for b in bounds if b < n]
    root = lex._root

    inf = n + 9
    dist = [inf] * (n + 1)
    dist[n] = 0
    unknown_jump: dict[int, int] = {}
    next_live = n

    for p in reversed(starts):
        best = inf
        live = False
        node = root
        j = p
        while j < n:
            node = node.get(text[j])
            if node is None:
                break
            j += 1
            if "" in node and is_b[j]:
                live = True
                d = dist[j]
                if d < best:
                    best = d
        pe = pat_end[p]
        if pe:
            while pe > p and not is_b[pe]:
                pe -= 1
            if pe > p:
                live = True
                d = dist[pe]
                if d < best:
                    best = d
        if live:
            next_live = p
        else:
            jump = next_live
            unknown_jump[p] = jump
            best = dist[jump]
        dist[p] = best + 1

    # Forward walk: among edges on a fewest-token path take the longest,
    # and at equal length prefer KNOWN (PATTERN only wins strictly-longer).
    tokens = []
    p = 0
    while p < n:
        jump = unknown_jump.get(p)
        if jump is not None:
            tokens.append(Token(p, jump, TokenKind.UNKNOWN))
            p = jump
            continue
        want = dist[p] - 1
        best_j = -1
        best_kind = TokenKind.KNOWN
        node = root
        j = p
        while j < n:
            node = node.get(text[j])
            if node is None:
                break
            j += 1
            if "" in node and is_b[j] and dist[j] == want and j > best_j:
                best_j = j
        pe = pat_end[p]
        if pe:
            while pe > p and not is_b[pe]:
                pe -= 1
            if pe > p and dist[pe] == want and pe > best_j:
                best_j = pe
                best_kind = TokenKind.PATTERN
        assert best_j > p, "segmentation graph is inconsistent"
        tokens.append(Token(p, best_j, best_kind))
        p = best_j
    return Segmentation(text, tuple(tokens))


def longest_match_tokenize(
    text: str,
    lex: Lexicon | None = None,
    table: TccRuleTable | None = None,
) -> Segmentation:
    """Greedy baseline: longest lexicon match, else pattern run, else one cluster."""
    if lex is None:
        lex = default_lexicon()
    n = len(text)
    if n == 0:
        return Segmentation(text, ())
    bounds, is_b, pat_end = _scan_arrays(text, table)
    root = lex._root
    tokens = []
    p = 0
    while p < n:
        best = -1
        node = root
        j = p
        while j < n:
            node = node.get(text[j])
            if node is None:
                break
            j += 1
            if "" in node and is_b[j]:
                best = j
        if best > p:
            tokens.append(Token(p, best, TokenKind.KNOWN))
            p = best
            continue
        pe = pat_end[p]
        if pe:
            while pe > p and not is_b[pe]:
                pe -= 1
            if pe > p:
                tokens.append(Token(p, pe, TokenKind.PATTERN))
                p = pe
                continue
        cluster_end = bounds[bisect_right(bounds, p)]
        tokens.append(Token(p, cluster_end, TokenKind.UNKNOWN))
        p = cluster_end
    return Segmentation(text, tuple(tokens))


def chunk_for_safety(text: str, limit: int, table: TccRuleTable | None = None) -> list[int]:
    """Cut offsets bounding every chunk to ``limit`` scalars.

    Each cut lands after the last whitespace in the chunk window when that
    whitespace sits in the window's trailing half, otherwise on the last
    cluster edge inside the window; a window made of one giant cluster
    (degenerate input) is cut hard at the limit.  The final cut is always
    ``len(text)``.
    """
    if limit < 2:
        raise ValueError(f"chunk limit must be >= 2, got {limit}")
    n = len(text)
    if n <= limit:
        return [n]
    bounds = (table or default_rule_table()).boundaries(text)
    half = limit // 2
    cuts: list[int] = []
    s = 0
    while n - s > limit:
        window = text[s : s + limit]
        ws_end = 0
        for m in _WS_RE.finditer(window):
            ws_end = m.end()
        if ws_end and ws_end - 1 >= half:
            cut = s + ws_end
        else:
            i = bisect_right(bounds, s + limit) - 1
            cut = bounds[i] if i >= 0 and bounds[i] > s else s + limit
        cuts.append(cut)
        s = cut
    cuts.append(n)
    return cuts
