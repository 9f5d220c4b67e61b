"""Pearson and Spearman correlation with midrank tie handling.

Correlations of a constant series are undefined and come back as ``nan``
rather than 0, so callers can report the gap.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

__all__ = ["pearson", "spearman", "midranks", "is_defined"]


def _paired(x, y) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(x, dtype=float).ravel()
    b = np.asarray(y, dtype=float).ravel()
    if a.size != b.size:
        raise ValueError(f"length mismatch: {a.size} != {b.size}")
    if a.size < 2:
        raise ValueError("correlation needs at least two pairs")
    if not (np.isfinite(a).all() and np.isfinite(b).all()):
        raise ValueError("series contain non-finite values")
    return a, b


def is_defined(r: float | None) -> bool:
    return r is not None and not math.isnan(r)


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Product-moment correlation; ``nan`` if either series is constant."""
    a, b = _paired(x, y)
    if (a == a[0]).all() or (b == b[0]).all():
        return math.nan
    a = a - a.mean()
    b = b - b.mean()
    denom = math.sqrt(float(np.dot(a, a)) * float(np.dot(b, b)))
    if denom == 0.0:
        return math.nan
    r = float(np.dot(a, b)) / denom
    return min(1.0, max(-1.0, r))


def midranks(v: Sequence[float]) -> np.ndarray:
    """1-based ranks; tied values share the average of their positions."""
    a = np.asarray(v, dtype=float).ravel()
    if a.size == 0:
        raise ValueError("midranks of an empty series")
    order = np.argsort(a, kind="mergesort")
    sorted_a = a[order]
    # run boundaries of equal values in sorted order
    starts = np.flatnonzero(np.r_[True, sorted_a[1:] != sorted_a[:-1]])
    ends = np.r_[starts[1:], a.size]
    run_rank = (starts + ends + 1) / 2.0
    ranks = np.empty(a.size, dtype=float)
    ranks[order] = np.repeat(run_rank, ends - starts)
    return ranks


def spearman(x: Sequence[float], y: Sequence[float]) -> float:
    """Pearson correlation of the midranks."""
    a, b = _paired(x, y)
    return pearson(midranks(a), midranks(b))
