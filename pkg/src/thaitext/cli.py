"""Line-oriented command line front end.

One input document per line on stdin, one output line per input line on
stdout, flushed as it goes so the tool composes in shell pipelines.  All
I/O is UTF-8 regardless of locale.  Exit codes: 0 success, 1 usage error,
2 data error (missing or malformed data files, invalid input bytes).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Callable

from . import __version__
from .bench import (
    aggregate,
    format_report,
    load_gold,
    report_key_values,
    save_report_figure,
    score,
    throughput,
)
from .data import DataFileError, data_file_versions
from .lexicon import build_lexicon, default_lexicon, load_wordlist
from .normalize import normalize
from .phonetics import metasound, romanize
from .spell import candidates, default_frequencies, load_frequencies
from .tcc import cluster_strings
from .tokenizer import longest_match_tokenize, newmm_tokenize

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage by default; this tool reserves 2 for
    # data errors, so usage problems must exit 1 instead.
    def error(self, message):
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _out(line: str) -> None:
    sys.stdout.buffer.write(line.encode("utf-8") + b"\n")
    sys.stdout.buffer.flush()


def _err(line: str) -> None:
    sys.stderr.buffer.write(line.encode("utf-8", "replace") + b"\n")
    sys.stderr.buffer.flush()


def _version_text() -> str:
    data = " ".join(f"{name}={ver}" for name, ver in sorted(data_file_versions().items()))
    return f"thaitext {__version__}\ndata: {data}"


def _stream(transform: Callable[[str], str]) -> int:
    """Apply ``transform`` per stdin line; bad bytes get a diagnostic and
    make the eventual exit code 2, but never stop the stream."""
    status = 0
    for raw in sys.stdin.buffer:
        if raw.endswith(b"\n"):
            raw = raw[:-1]
        try:
            line = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            _err(f"invalid UTF-8 input line: {exc.reason}")
            status = DATA_ERROR
            continue
        _out(transform(line))
    return status


def _lexicon(args):
    if getattr(args, "dict", None):
        return build_lexicon(load_wordlist(args.dict))
    return default_lexicon()


def _engine(args, lex):
    if args.engine == "longest":
        return lambda text: longest_match_tokenize(text, lex)
    safe = getattr(args, "safe", False)
    return lambda text: newmm_tokenize(text, lex, safe=safe)


def _cmd_tokenize(args) -> int:
    engine = _engine(args, _lexicon(args))
    delim = args.delimiter
    return _stream(lambda line: delim.join(engine(line).strings()))


def _cmd_tcc(args) -> int:
    delim = args.delimiter
    return _stream(lambda line: delim.join(cluster_strings(line)))


def _cmd_normalize(args) -> int:
    return _stream(normalize)


def _cmd_spell(args) -> int:
    freq = load_frequencies(args.freq) if args.freq else default_frequencies()
    for word, count in candidates(args.word, freq):
        _out(f"{word}\t{count}")
    return 0


def _cmd_soundex(args) -> int:
    _out(metasound(args.word, length=args.length))
    return 0


def _cmd_romanize(args) -> int:
    _out(romanize(args.word))
    return 0


def _cmd_bench(args) -> int:
    gold = load_gold(args.gold, strip_tags=args.strip_tags)
    if not gold:
        _err(f"{args.gold}: no sentences")
        return DATA_ERROR
    lex = _lexicon(args)
    engine = _engine(args, lex)
    counts = [score(engine(s.text), s, ignore_space=args.ignore_space) for s in gold]
    rate = throughput(engine, gold, repetitions=args.repetitions)
    report = aggregate(counts, chars_per_second=rate)
    _out(format_report(report))
    for line in report_key_values(report):
        _out(line)
    if args.figure:
        save_report_figure(report, args.figure)
    return 0


def _nonempty(value: str) -> str:
    if value == "":
        raise argparse.ArgumentTypeError("delimiter must be nonempty")
    return value


def _positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from None
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {number}")
    return number


def build_parser() -> _Parser:
    parser = _Parser(prog="thaitext", description=__doc__)
    parser.add_argument("--version", action="version", version=_version_text())
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    tokenize = sub.add_parser("tokenize", help="segment stdin lines into words")
    tokenize.add_argument("--dict", help="word list file (default: bundled lexicon)")
    tokenize.add_argument("--engine", choices=("newmm", "longest"), default="newmm")
    tokenize.add_argument("--safe", action="store_true", help="chunk very long lines")
    tokenize.add_argument("--delimiter", type=_nonempty, default="|")
    tokenize.set_defaults(func=_cmd_tokenize)

    tcc = sub.add_parser("tcc", help="split stdin lines into character clusters")
    tcc.add_argument("--delimiter", type=_nonempty, default="|")
    tcc.set_defaults(func=_cmd_tcc)

    norm = sub.add_parser("normalize", help="canonicalize stdin lines")
    norm.set_defaults(func=_cmd_normalize)

    spell = sub.add_parser("spell", help="print ranked corrections for a word")
    spell.add_argument("word")
    spell.add_argument("--freq", help="frequency file (default: bundled)")
    spell.set_defaults(func=_cmd_spell)

    soundex = sub.add_parser("soundex", help="print the phonetic code of a word")
    soundex.add_argument("word")
    soundex.add_argument("--length", type=_positive_int, default=4)
    soundex.set_defaults(func=_cmd_soundex)

    roman = sub.add_parser("romanize", help="print the Latin transcription of a word")
    roman.add_argument("word")
    roman.set_defaults(func=_cmd_romanize)

    bench = sub.add_parser("bench", help="score an engine against a gold corpus")
    bench.add_argument("--gold", required=True, help="pipe-delimited gold corpus")
    bench.add_argument("--dict", help="word list file (default: bundled lexicon)")
    bench.add_argument("--engine", choices=("newmm", "longest"), default="newmm")
    bench.add_argument("--safe", action="store_true")
    bench.add_argument("--strip-tags", action="store_true")
    bench.add_argument("--ignore-space", action="store_true")
    bench.add_argument("--repetitions", type=_positive_int, default=1)
    bench.add_argument("--figure", help="also render the report to this image file")
    bench.set_defaults(func=_cmd_bench)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DataFileError as exc:
        _err(str(exc))
        return DATA_ERROR
    except BrokenPipeError:
        # Downstream closed the pipe (e.g. head); park stdout so the
        # interpreter's shutdown flush stays quiet.
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
