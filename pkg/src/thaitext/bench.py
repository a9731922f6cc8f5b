"""Segmentation evaluation harness.

Gold corpora are pipe-delimited: one sentence per line, tokens separated
by ``|``, optionally wrapped in ``<TAG>...</TAG>`` annotation markers.
Scoring is exact-span word matching plus boundary matching over interior
cut offsets, micro-averaged over the corpus.  Throughput measures raw
tokenization only, best wall-clock rate over a number of repetitions.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .data import DataFileError
from .tokenizer import Segmentation

__all__ = [
    "GoldSentence",
    "SentenceCounts",
    "EvalReport",
    "load_gold",
    "render_gold",
    "score",
    "aggregate",
    "throughput",
    "format_report",
    "report_key_values",
    "save_report_figure",
]

_TAG_OPEN = re.compile(r"^<([A-Za-z_][A-Za-z0-9_]*)>")
_TAG_CLOSE = re.compile(r"</([A-Za-z_][A-Za-z0-9_]*)>$")
_TAG_ANY = re.compile(r"</?[A-Za-z_][A-Za-z0-9_]*>")
_WS_ONLY = re.compile(r"\s+\Z")


@dataclass(frozen=True)
class GoldSentence:
    """Reference segmentation: raw text plus gold token spans."""

    text: str
    spans: tuple[tuple[int, int], ...]

    def tokens(self) -> list[str]:
        return [self.text[s:e] for s, e in self.spans]


@dataclass(frozen=True)
class SentenceCounts:
    """Per-sentence true/false positive/negative tallies."""

    word_tp: int
    word_fp: int
    word_fn: int
    boundary_tp: int
    boundary_fp: int
    boundary_fn: int


@dataclass(frozen=True)
class EvalReport:
    word_precision: float
    word_recall: float
    word_f1: float
    boundary_precision: float
    boundary_recall: float
    boundary_f1: float
    sentences: int
    chars_per_second: float = 0.0


def _strip_tags(tokens: list[str]) -> list[str]:
    """Remove annotation wrappers; a wrapper spanning several pipe slots
    merges them into one token."""
    out: list[str] = []
    pending: list[str] | None = None
    for token in tokens:
        opened = _TAG_OPEN.match(token) is not None
        closed = _TAG_CLOSE.search(token) is not None
        inner = _TAG_ANY.sub("", token)
        if pending is not None:
            pending.append(inner)
            if closed:
                out.append("".join(pending))
                pending = None
        elif opened and not closed:
            pending = [inner]
        else:
            out.append(inner)
    if pending is not None:  # unterminated wrapper: keep what we saw
        out.append("".join(pending))
    return out


def _sentence_from_tokens(tokens: Iterable[str]) -> GoldSentence:
    spans: list[tuple[int, int]] = []
    pos = 0
    parts: list[str] = []
    for token in tokens:
        if not token:
            continue
        spans.append((pos, pos + len(token)))
        parts.append(token)
        pos += len(token)
    return GoldSentence("".join(parts), tuple(spans))


def load_gold(path, strip_tags: bool = False) -> list[GoldSentence]:
    """Read a pipe-delimited gold corpus; bad UTF-8 names its line."""
    try:
        raw = open(path, "rb").read()
    except FileNotFoundError:
        raise DataFileError(path, "file not found") from None
    except OSError as exc:
        raise DataFileError(path, f"cannot read: {exc}") from None
    sentences: list[GoldSentence] = []
    for lineno, chunk in enumerate(raw.split(b"\n"), start=1):
        if chunk.endswith(b"\r"):
            chunk = chunk[:-1]
        try:
            line = chunk.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DataFileError(path, f"invalid UTF-8 ({exc.reason})", line=lineno) from None
        if not line:
            continue
        tokens = line.split("|")
        if strip_tags:
            tokens = _strip_tags(tokens)
        sentence = _sentence_from_tokens(tokens)
        if sentence.text:
            sentences.append(sentence)
    return sentences


def render_gold(sentence: GoldSentence, delimiter: str = "|") -> str:
    return delimiter.join(sentence.tokens())


def _boundary_set(
    spans: Sequence[tuple[int, int]], text: str, ignore_space: bool
) -> set[int]:
    n = len(text)
    points: set[int] = set()
    for s, e in spans:
        if ignore_space and _WS_ONLY.match(text[s:e]):
            continue
        points.add(s)
        points.add(e)
    points.discard(0)
    points.discard(n)
    return points


def score(pred: Segmentation, gold: GoldSentence, ignore_space: bool = False) -> SentenceCounts:
    """Span and boundary tallies for one sentence.

    ``ignore_space`` drops whitespace-only tokens from both sides; the
    boundary sets are then the edges of the remaining tokens (text start
    and end excluded).  Pred and gold must cover the same text.
    """
    if pred.text != gold.text:
        raise ValueError(
            f"prediction covers {pred.text!r} but gold covers {gold.text!r}"
        )
    text = gold.text
    pred_spans = [(t.start, t.end) for t in pred.tokens]
    gold_spans = list(gold.spans)
    if ignore_space:
        pred_spans = [s for s in pred_spans if not _WS_ONLY.match(text[s[0] : s[1]])]
        gold_spans = [s for s in gold_spans if not _WS_ONLY.match(text[s[0] : s[1]])]
    pred_set = set(pred_spans)
    gold_set = set(gold_spans)
    word_tp = len(pred_set & gold_set)
    pred_b = _boundary_set(pred_spans, text, ignore_space)
    gold_b = _boundary_set(gold_spans, text, ignore_space)
    boundary_tp = len(pred_b & gold_b)
    return SentenceCounts(
        word_tp=word_tp,
        word_fp=len(pred_set) - word_tp,
        word_fn=len(gold_set) - word_tp,
        boundary_tp=boundary_tp,
        boundary_fp=len(pred_b) - boundary_tp,
        boundary_fn=len(gold_b) - boundary_tp,
    )


def _prf(tp: int, fp: int, fn: int) -> tuple[float, float, float]:
    # Vacuous sets score perfect; a one-sided empty set scores zero.
    precision = tp / (tp + fp) if tp + fp else (1.0 if fn == 0 else 0.0)
    recall = tp / (tp + fn) if tp + fn else (1.0 if fp == 0 else 0.0)
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f1


def aggregate(counts: Iterable[SentenceCounts], chars_per_second: float = 0.0) -> EvalReport:
    """Micro-averaged report: tallies are summed before computing P/R/F1."""
    items = list(counts)
    if not items:
        raise ValueError("cannot aggregate an empty corpus")
    wp, wr, wf = _prf(
        sum(c.word_tp for c in items),
        sum(c.word_fp for c in items),
        sum(c.word_fn for c in items),
    )
    bp, br, bf = _prf(
        sum(c.boundary_tp for c in items),
        sum(c.boundary_fp for c in items),
        sum(c.boundary_fn for c in items),
    )
    return EvalReport(wp, wr, wf, bp, br, bf, sentences=len(items), chars_per_second=chars_per_second)


def throughput(
    engine: Callable[[str], Segmentation],
    corpus: Sequence[GoldSentence | str],
    repetitions: int = 3,
) -> float:
    """Best scalars-per-second over ``repetitions`` timed tokenization runs."""
    if repetitions < 1:
        raise ValueError(f"repetitions must be >= 1, got {repetitions}")
    texts = [s if isinstance(s, str) else s.text for s in corpus]
    total = sum(len(t) for t in texts)
    if total == 0:
        return 0.0
    best = float("inf")
    for _ in range(repetitions):
        start = time.perf_counter()
        for text in texts:
            engine(text)
        elapsed = time.perf_counter() - start
        best = min(best, elapsed)
    return total / max(best, 1e-9)


def report_key_values(report: EvalReport) -> list[str]:
    return [
        f"sentences={report.sentences}",
        f"word_precision={report.word_precision:.6f}",
        f"word_recall={report.word_recall:.6f}",
        f"word_f1={report.word_f1:.6f}",
        f"boundary_precision={report.boundary_precision:.6f}",
        f"boundary_recall={report.boundary_recall:.6f}",
        f"boundary_f1={report.boundary_f1:.6f}",
        f"chars_per_second={report.chars_per_second:.1f}",
    ]


def format_report(report: EvalReport) -> str:
    rows = [
        ("", "precision", "recall", "f1"),
        (
            "word",
            f"{report.word_precision:.4f}",
            f"{report.word_recall:.4f}",
            f"{report.word_f1:.4f}",
        ),
        (
            "boundary",
            f"{report.boundary_precision:.4f}",
            f"{report.boundary_recall:.4f}",
            f"{report.boundary_f1:.4f}",
        ),
    ]
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = [
        "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
        for row in rows
    ]
    lines.append(f"sentences: {report.sentences}")
    if report.chars_per_second:
        lines.append(f"throughput: {report.chars_per_second:,.0f} chars/s")
    return "\n".join(lines)


def save_report_figure(report: EvalReport, path) -> None:
    """Render the report as a bar chart image next to the textual output."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = ["precision", "recall", "f1"]
    word = [report.word_precision, report.word_recall, report.word_f1]
    boundary = [report.boundary_precision, report.boundary_recall, report.boundary_f1]
    x = range(len(labels))
    width = 0.38
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar([i - width / 2 for i in x], word, width, label="word")
    ax.bar([i + width / 2 for i in x], boundary, width, label="boundary")
    ax.set_xticks(list(x))
    ax.set_xticklabels(labels)
    ax.set_ylim(0.0, 1.05)
    ax.set_ylabel("score")
    title = f"{report.sentences} sentences"
    if report.chars_per_second:
        title += f", {report.chars_per_second:,.0f} chars/s"
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
