"""Input checks shared by the loaders and the estimator."""
from __future__ import annotations

from collections.abc import Iterable

import numpy as np

__all__ = ["FormatError", "check_texts", "check_target"]


class FormatError(ValueError):
    """A malformed input record; ``source`` and ``lineno`` locate it."""

    def __init__(self, message: str, lineno: int | None = None, source: str | None = None):
        self.message = message
        self.lineno = lineno
        self.source = source
        where = ":".join(str(p) for p in (source, lineno) if p is not None)
        super().__init__(f"{where}: {message}" if where else message)


def check_texts(X) -> list[str]:
    """Coerce a 1-d collection of raw strings (list, array, Series) to a list.

    A bare string is rejected since iterating it would score characters.
    A single-column 2-d array is flattened.
    """
    if isinstance(X, (str, bytes)):
        raise TypeError("expected a collection of texts, got a single string")
    if not isinstance(X, Iterable):
        raise TypeError(f"expected a collection of texts, got {type(X).__name__}")
    if hasattr(X, "ndim") and getattr(X, "ndim") == 2:
        if X.shape[1] != 1:
            raise ValueError(f"expected one text column, got shape {X.shape}")
        X = np.asarray(X).ravel()
    texts = list(X)
    for i, t in enumerate(texts):
        if not isinstance(t, str):
            raise TypeError(f"text {i} is {type(t).__name__}, not str")
    return texts


def check_target(y, n: int) -> np.ndarray:
    arr = np.asarray(y, dtype=float).ravel()
    if arr.size != n:
        raise ValueError(f"y has {arr.size} values for {n} texts")
    if not np.isfinite(arr).all():
        raise ValueError("y contains non-finite values")
    return arr
