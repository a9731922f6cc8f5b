"""Bundled data files and the loaders shared by every module.

All data assets are UTF-8 text with ``#`` comment lines and a
``# version:`` header.  The bundled directory can be overridden with the
``THAITEXT_DATA`` environment variable; individual loaders also accept an
explicit path.
"""

from __future__ import annotations

import os
from functools import lru_cache
from importlib import resources
from pathlib import Path

__all__ = [
    "DataFileError",
    "data_path",
    "read_data_lines",
    "data_file_versions",
]

_ENV_VAR = "THAITEXT_DATA"

DATA_FILES = {
    "tcc_rules": "tcc_rules.txt",
    "lexicon": "lexicon_th.txt",
    "frequencies": "frequency_th.tsv",
    "metasound": "metasound_classes.tsv",
    "romanize": "romanize_th.tsv",
    "fixture_corpus": "fixture_corpus.txt",
    "fixture_lexicon": "fixture_lexicon.txt",
}


class DataFileError(Exception):
    """A data file is missing or malformed.

    Carries the path and, when the problem is tied to a specific line,
    its 1-based line number.
    """

    def __init__(self, path: str, message: str, line: int | None = None):
        self.path = str(path)
        self.line = line
        self.message = message
        where = f"{self.path}:{line}" if line is not None else self.path
        super().__init__(f"{where}: {message}")


def _bundled_dir() -> Path:
    return Path(str(resources.files("thaitext") / "data"))


def data_path(name: str) -> Path:
    """Resolve a bundled data file, honoring the THAITEXT_DATA override."""
    filename = DATA_FILES[name]
    override = os.environ.get(_ENV_VAR)
    if override:
        candidate = Path(override) / filename
        if candidate.exists():
            return candidate
    return _bundled_dir() / filename


def read_data_lines(path: str | os.PathLike) -> list[tuple[int, str]]:
    """Read a UTF-8 text file as ``(line_number, text)`` pairs.

    Comment lines (leading ``#``) and blank lines are dropped.  Decoding is
    done per line so a bad byte is reported with its line number instead of
    poisoning the whole file.
    """
    try:
        raw = Path(path).read_bytes()
    except FileNotFoundError:
        raise DataFileError(path, "file not found") from None
    except OSError as exc:
        raise DataFileError(path, f"cannot read: {exc}") from None

    out: list[tuple[int, str]] = []
    for lineno, chunk in enumerate(raw.split(b"\n"), start=1):
        if chunk.endswith(b"\r"):
            chunk = chunk[:-1]
        try:
            text = chunk.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DataFileError(path, f"invalid UTF-8 ({exc.reason})", line=lineno) from None
        if not text or text.lstrip().startswith("#"):
            continue
        out.append((lineno, text))
    return out


def _file_version(path: Path) -> str:
    try:
        with open(path, "rb") as fh:
            for raw in fh:
                line = raw.decode("utf-8", errors="replace").strip()
                if line.lower().startswith("# version:"):
                    return line.split(":", 1)[1].strip()
                if line and not line.startswith("#"):
                    break
    except OSError:
        return "missing"
    return "unversioned"


@lru_cache(maxsize=None)
def data_file_versions() -> dict[str, str]:
    """Version string of every bundled (or overridden) data file."""
    return {name: _file_version(data_path(name)) for name in DATA_FILES}
