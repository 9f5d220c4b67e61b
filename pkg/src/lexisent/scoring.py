"""Aggregate per-token valences into one sentiment strength per text."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .matching import LookupIndex
from .tokenize import Token, tokenize

__all__ = ["ScoringScheme", "TextScore", "score_text", "score_texts"]


class ScoringScheme(str, enum.Enum):
    """Tweet-level aggregation rules.

    ``mean``          sum of valence deviations divided by the number of tokens
    ``sum``           unnormalised sum
    ``mean-matched``  sum divided by the number of tokens with a non-neutral hit
    ``extreme``       the single most extreme valence (opposite-sign tie -> neutral)
    ``quantized``     sign of the ``mean`` deviation, in {-1, 0, +1}
    """

    MEAN = "mean"
    SUM = "sum"
    MEAN_MATCHED = "mean-matched"
    EXTREME = "extreme"
    QUANTIZED = "quantized"

    @classmethod
    def coerce(cls, value: "ScoringScheme | str") -> "ScoringScheme":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower().replace("_", "-"))
        except ValueError:
            choices = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown scoring scheme {value!r}; expected one of {choices}") from None


@dataclass(frozen=True)
class TextScore:
    value: float
    token_count: int
    matched_count: int


def _sign(x: float) -> int:
    return (x > 0) - (x < 0)


def score_text(
    tokens: Sequence[Token | str],
    index: LookupIndex,
    scheme: ScoringScheme | str = ScoringScheme.MEAN,
    neutral: float | None = None,
) -> TextScore:
    """Score one tokenized text.

    Unmatched tokens count as ``neutral``; every scheme works on deviations
    from it, so lexicons on a 1..9 scale aggregate the same way as -5..+5 ones.
    ``neutral`` defaults to the neutral point the index was built with.
    """
    scheme = ScoringScheme.coerce(scheme)
    if neutral is None:
        neutral = index.neutral
    devs = []
    for tok in tokens:
        text = tok if isinstance(tok, str) else tok.text
        v = index.get(text)
        if v is not None and v != neutral:
            devs.append(v - neutral)
    n = len(tokens)
    k = len(devs)
    total = math.fsum(devs)

    if scheme is ScoringScheme.QUANTIZED:
        mean_dev = (neutral + total / n) - neutral if n else 0.0
        return TextScore(float(_sign(mean_dev)), n, k)
    if scheme is ScoringScheme.MEAN:
        value = neutral + total / n if n else neutral
    elif scheme is ScoringScheme.SUM:
        value = neutral + total
    elif scheme is ScoringScheme.MEAN_MATCHED:
        value = neutral + total / k if k else neutral
    else:
        value = neutral + _extreme(devs)
    return TextScore(value, n, k)


def _extreme(devs: Iterable[float]) -> float:
    lo = min(devs, default=0.0)
    hi = max(devs, default=0.0)
    if hi > -lo:
        return hi
    if -lo > hi:
        return lo
    return 0.0


def score_texts(
    texts: Iterable[str],
    index: LookupIndex,
    scheme: ScoringScheme | str = ScoringScheme.MEAN,
    neutral: float | None = None,
) -> np.ndarray:
    """Tokenize and score raw texts; returns a float array aligned with ``texts``."""
    return np.array(
        [score_text(tokenize(t), index, scheme, neutral).value for t in texts],
        dtype=float,
    )
