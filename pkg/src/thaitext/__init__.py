"""Thai text processing core.

Dictionary-based word segmentation over Thai character clusters, text
normalization, spell checking, phonetic hashing, simplified romanization,
and a segmentation evaluation harness.
"""

__version__ = "1.0.0"

from .chars import CharClass, classify_char
from .data import DataFileError
from .lexicon import Lexicon, build_lexicon, default_lexicon, fixture_lexicon, load_wordlist
from .normalize import normalize, remove_tonemarks
from .phonetics import (
    ConsonantClassTable,
    RomanizationTable,
    metasound,
    romanize,
)
from .spell import (
    EditAlphabet,
    FrequencyTable,
    candidates,
    correct,
    default_alphabet,
    default_frequencies,
    edits1,
    load_frequencies,
)
from .tcc import ClusterSpan, TccRuleTable, cluster_strings, tcc_boundaries, tcc_segment
from .tokenizer import (
    SAFE_CHUNK_LIMIT,
    Segmentation,
    Token,
    TokenKind,
    chunk_for_safety,
    longest_match_tokenize,
    newmm_tokenize,
)
from .bench import (
    EvalReport,
    GoldSentence,
    SentenceCounts,
    aggregate,
    load_gold,
    render_gold,
    save_report_figure,
    score,
    throughput,
)

__all__ = [
    "CharClass",
    "classify_char",
    "DataFileError",
    "Lexicon",
    "build_lexicon",
    "default_lexicon",
    "fixture_lexicon",
    "load_wordlist",
    "normalize",
    "remove_tonemarks",
    "ConsonantClassTable",
    "RomanizationTable",
    "metasound",
    "romanize",
    "EditAlphabet",
    "FrequencyTable",
    "candidates",
    "correct",
    "default_alphabet",
    "default_frequencies",
    "edits1",
    "load_frequencies",
    "ClusterSpan",
    "TccRuleTable",
    "cluster_strings",
    "tcc_boundaries",
    "tcc_segment",
    "SAFE_CHUNK_LIMIT",
    "Segmentation",
    "Token",
    "TokenKind",
    "chunk_for_safety",
    "longest_match_tokenize",
    "newmm_tokenize",
    "EvalReport",
    "GoldSentence",
    "SentenceCounts",
    "aggregate",
    "load_gold",
    "render_gold",
    "save_report_figure",
    "score",
    "throughput",
    "__version__",
]
