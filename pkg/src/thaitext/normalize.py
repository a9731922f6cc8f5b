"""Thai text canonicalization.

Fixes the classic Thai input mistakes: zero-width scalars pasted in from
web text, doubled spaces, sara e typed twice instead of sara ae, the
legacy nikhahit+sara aa spelling of sara am, duplicated stacking marks,
and tone marks typed before their vowel.  Rules apply in a fixed order,
in repeated passes, until the text stops changing.
"""

from __future__ import annotations

import re

__all__ = ["normalize", "remove_tonemarks", "RULE_IDS"]

_ZERO_WIDTH = re.compile("[​‌]")
_MULTI_SPACE = re.compile(" {2,}")
_DOUBLE_SARA_E = "เเ"  # เเ
_SARA_AE = "แ"  # แ
_NIKHAHIT_AA = "ํา"  # ◌ํ + า
_SARA_AM = "ำ"  # ำ
_COMBINING = "ัิ-ื็ุ-ฺ่-๋์"
_REPEATED_MARK = re.compile(f"([{_COMBINING}])\\1+")
_TONE_BEFORE_VOWEL = re.compile("([่-๋])([ัิ-ื็ุ-ฺ])")

_TONES = re.compile("[่-๋]")

RULE_IDS = ("N1", "N2", "N3", "N4", "N5", "N6")


def _pass(text: str) -> str:
    text = _ZERO_WIDTH.sub("", text)  # N1
    text = _MULTI_SPACE.sub(" ", text)  # N2
    text = text.replace(_DOUBLE_SARA_E, _SARA_AE)  # N3
    text = text.replace(_NIKHAHIT_AA, _SARA_AM)  # N4
    text = _REPEATED_MARK.sub(r"\1", text)  # N5
    text = _TONE_BEFORE_VOWEL.sub(r"\2\1", text)  # N6
    return text


def normalize(text: str) -> str:
    """Apply the rule set to fixpoint.  Never lengthens the text."""
    passes = 0
    bound = max(4, 2 * len(text))
    while True:
        out = _pass(text)
        if out == text:
            return out
        text = out
        passes += 1
        # Every pass shortens the text or moves a tone mark rightward past
        # a vowel, so the fixpoint arrives long before this bound.
        assert passes <= bound, "normalization failed to converge"


def remove_tonemarks(text: str) -> str:
    """Delete the four tone marks; everything else is kept in order."""
    return _TONES.sub("", text)
