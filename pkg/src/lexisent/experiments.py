"""Evaluation harness: coverage, correlation matrices, scheme sweeps and
resampled learning curves."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .corpus import LabeledText, ScoreColumn, gold_score
from .lexicon import Lexicon
from .matching import MatchStrategy, build_index, key_function
from .scoring import ScoringScheme, score_text
from .stats import is_defined, pearson, spearman
from .tokenize import tokenize

__all__ = [
    "CoverageReport",
    "CorrelationReport",
    "LearningCurvePoint",
    "coverage",
    "correlation_matrix",
    "scheme_sweep",
    "learning_curve",
    "resample_terms",
    "default_sizes",
    "five_number_summary",
    "summarize_boxplot",
]


def _texts(corpus: Iterable[LabeledText | str]) -> list[str]:
    return [t if isinstance(t, str) else t.text for t in corpus]


def _gold(corpus: Sequence[LabeledText | str], gold) -> np.ndarray:
    if gold is not None:
        g = gold.values if isinstance(gold, ScoreColumn) else np.asarray(gold, dtype=float)
        if g.size != len(corpus):
            raise ValueError(f"gold has {g.size} values for {len(corpus)} texts")
        return g
    if not all(isinstance(t, LabeledText) for t in corpus):
        raise TypeError("gold scores required when the corpus has no ratings")
    return np.array([gold_score(t) for t in corpus], dtype=float)


@dataclass(frozen=True)
class CoverageReport:
    total_tokens: int
    unique_tokens: int
    unique_matched: int
    lexicon_size: int


def coverage(corpus: Iterable[LabeledText | str], lexicon: Lexicon,
             strategy: MatchStrategy | str = MatchStrategy.EXACT) -> CoverageReport:
    """Token counts of a corpus and how many distinct words hit the lexicon."""
    index = build_index(lexicon, strategy)
    total = 0
    uniques: set[str] = set()
    for text in _texts(corpus):
        toks = tokenize(text)
        total += len(toks)
        uniques.update(t.text for t in toks)
    matched = sum(index.get(u) is not None for u in uniques)
    return CoverageReport(total, len(uniques), matched, len(lexicon))


@dataclass(frozen=True, eq=False)
class CorrelationReport:
    names: tuple[str, ...]
    pearson: np.ndarray
    spearman: np.ndarray

    @property
    def undefined(self) -> list[str]:
        """Columns whose correlations are undefined (constant scores)."""
        return [n for i, n in enumerate(self.names) if not is_defined(self.pearson[i, i])]

    def get(self, a: str, b: str, kind: str = "pearson") -> float:
        m = self.pearson if kind == "pearson" else self.spearman
        return float(m[self.names.index(a), self.names.index(b)])


def correlation_matrix(gold: ScoreColumn, columns: Sequence[ScoreColumn]) -> CorrelationReport:
    """Pairwise Pearson and Spearman over ``gold`` followed by ``columns``.

    Cells involving a constant column are ``nan``.
    """
    cols = [gold, *columns]
    n = len(gold)
    for c in cols:
        if len(c) != n:
            raise ValueError(f"column {c.name!r} has {len(c)} values, gold has {n}")
    if n < 2:
        raise ValueError("correlation needs at least two texts")
    k = len(cols)
    pm = np.full((k, k), np.nan)
    sm = np.full((k, k), np.nan)
    for i in range(k):
        for j in range(i, k):
            pm[i, j] = pm[j, i] = pearson(cols[i].values, cols[j].values)
            sm[i, j] = sm[j, i] = spearman(cols[i].values, cols[j].values)
    for i in range(k):
        # self-correlation is 1 exactly wherever it is defined
        if is_defined(pm[i, i]):
            pm[i, i] = sm[i, i] = 1.0
    pm.flags.writeable = sm.flags.writeable = False
    return CorrelationReport(tuple(c.name for c in cols), pm, sm)


def scheme_sweep(
    corpus: Sequence[LabeledText | str],
    lexicon: Lexicon,
    strategy: MatchStrategy | str = MatchStrategy.EXACT,
    gold=None,
    schemes: Iterable[ScoringScheme | str] = tuple(ScoringScheme),
) -> dict[ScoringScheme, tuple[float, float]]:
    """(Pearson, Spearman) against gold for each scoring scheme."""
    g = _gold(corpus, gold)
    index = build_index(lexicon, strategy)
    tokens = [tokenize(t) for t in _texts(corpus)]
    out = {}
    for scheme in schemes:
        scheme = ScoringScheme.coerce(scheme)
        scores = np.array([score_text(t, index, scheme).value for t in tokens])
        out[scheme] = (pearson(scores, g), spearman(scores, g))
    return out


@dataclass(frozen=True)
class LearningCurvePoint:
    size: int
    pearson_samples: tuple[float, ...]
    spearman_samples: tuple[float, ...]


def default_sizes(n_terms: int) -> list[int]:
    """Roughly logarithmic grid from 5 up to the full lexicon."""
    grid = [5, 10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000]
    return [s for s in grid if s < n_terms] + [n_terms]


def resample_terms(terms: Sequence[str], size: int, seed: int, resample: int) -> list[str]:
    """Uniform subset of ``size`` terms without replacement.

    Each (seed, size, resample) triple has its own random stream, so any
    subset can be regenerated on its own, in any order.
    """
    if not 0 <= size <= len(terms):
        raise ValueError(f"size {size} outside [0, {len(terms)}]")
    rng = np.random.default_rng(np.random.SeedSequence([seed, size, resample]))
    picked = np.sort(rng.choice(len(terms), size=size, replace=False))
    return [terms[i] for i in picked]


class _HitTable:
    """Token hits of a corpus against every key of a lexicon.

    Scores of any sub-lexicon follow from weighted bincounts, which is much
    faster than re-scoring every text per resample.
    """

    def __init__(self, texts: Sequence[str], lexicon: Lexicon, strategy: MatchStrategy):
        keyf = key_function(strategy)
        self.terms = sorted(lexicon)
        self.valences = np.array([lexicon.entries[t] for t in self.terms])
        self.neutral = lexicon.scale.neutral
        keys = sorted({keyf(t) for t in self.terms})
        key_id = {k: i for i, k in enumerate(keys)}
        self.n_keys = len(keys)
        self.term_key = np.array([key_id[keyf(t)] for t in self.terms], dtype=np.intp)
        self.term_pos = {t: i for i, t in enumerate(self.terms)}
        rows, cols = [], []
        self.n_tokens = np.zeros(len(texts))
        for r, text in enumerate(texts):
            toks = tokenize(text)
            self.n_tokens[r] = len(toks)
            for tok in toks:
                k = key_id.get(keyf(tok.text))
                if k is not None:
                    rows.append(r)
                    cols.append(k)
        self.rows = np.array(rows, dtype=np.intp)
        self.cols = np.array(cols, dtype=np.intp)
        self.n_texts = len(texts)

    def scores(self, subset: Sequence[str], scheme: ScoringScheme) -> np.ndarray:
        mask = np.zeros(len(self.terms), dtype=bool)
        mask[[self.term_pos[t] for t in subset]] = True
        tk = self.term_key[mask]
        count = np.bincount(tk, minlength=self.n_keys)
        total_v = np.bincount(tk, weights=self.valences[mask], minlength=self.n_keys)
        dev = np.zeros(self.n_keys)
        has = count > 0
        dev[has] = total_v[has] / count[has] - self.neutral
        hit_dev = dev[self.cols]
        total = np.bincount(self.rows, weights=hit_dev, minlength=self.n_texts)
        nt = self.n_tokens
        with np.errstate(invalid="ignore", divide="ignore"):
            if scheme is ScoringScheme.SUM:
                return self.neutral + total
            if scheme is ScoringScheme.MEAN_MATCHED:
                matched = np.bincount(self.rows, weights=(hit_dev != 0).astype(float),
                                      minlength=self.n_texts)
                return np.where(matched > 0, self.neutral + total / matched, self.neutral)
            mean = np.where(nt > 0, self.neutral + total / nt, self.neutral)
            if scheme is ScoringScheme.QUANTIZED:
                return np.sign(mean - self.neutral)
            return mean


def learning_curve(
    corpus: Sequence[LabeledText | str],
    lexicon: Lexicon,
    sizes: Sequence[int] | None = None,
    resamples: int = 50,
    seed: int = 0,
    strategy: MatchStrategy | str = MatchStrategy.EXACT,
    scheme: ScoringScheme | str = ScoringScheme.MEAN,
    gold=None,
) -> list[LearningCurvePoint]:
    """Correlation with gold as a function of lexicon size.

    For every size, ``resamples`` random sub-lexicons are drawn (see
    :func:`resample_terms`) and the corpus is scored with each. Undefined
    correlations, from constant score columns at small sizes, are kept as
    ``nan``.
    """
    strategy = MatchStrategy.coerce(strategy)
    scheme = ScoringScheme.coerce(scheme)
    if resamples < 1:
        raise ValueError("resamples must be >= 1")
    if seed < 0:
        raise ValueError("seed must be non-negative")
    build_index(lexicon, strategy)  # rejects phrase entries up front
    sizes = default_sizes(len(lexicon)) if sizes is None else list(sizes)
    for s in sizes:
        if not 1 <= s <= len(lexicon):
            raise ValueError(f"size {s} outside [1, {len(lexicon)}] for lexicon {lexicon.name!r}")
    g = _gold(corpus, gold)
    texts = _texts(corpus)
    table = _HitTable(texts, lexicon, strategy)

    points = []
    for size in sizes:
        ps, ss = [], []
        for r in range(resamples):
            subset = resample_terms(table.terms, size, seed, r)
            if scheme is ScoringScheme.EXTREME:
                index = build_index(lexicon.restrict(subset), strategy)
                scores = np.array([score_text(tokenize(t), index, scheme).value for t in texts])
            else:
                scores = table.scores(subset, scheme)
            if len(texts) < 2:
                ps.append(math.nan)
                ss.append(math.nan)
                continue
            ps.append(pearson(scores, g))
            ss.append(spearman(scores, g))
        points.append(LearningCurvePoint(size, tuple(ps), tuple(ss)))
    return points


def five_number_summary(samples: Iterable[float]) -> tuple[float, float, float, float, float]:
    """(min, q1, median, q3, max) over the defined samples.

    Quartiles are medians of the lower and upper halves, the overall median
    excluded from both when the count is odd: (1, 2, 3, 4, 5) gives
    q1 = 1.5 and q3 = 4.5.
    """
    s = sorted(x for x in samples if is_defined(x))
    if not s:
        raise ValueError("no defined samples to summarize")
    n = len(s)
    lower, upper = s[: n // 2], s[(n + 1) // 2:]
    if n == 1:
        lower = upper = s
    return s[0], _median(lower), _median(s), _median(upper), s[-1]


def _median(s: Sequence[float]) -> float:
    n = len(s)
    mid = n // 2
    return s[mid] if n % 2 else (s[mid - 1] + s[mid]) / 2


def summarize_boxplot(point: LearningCurvePoint) -> dict[str, tuple | None]:
    """Five-number summaries per statistic; ``None`` for a statistic with no
    defined sample. Raises if neither statistic has one."""
    out = {}
    for name, samples in (("pearson", point.pearson_samples),
                          ("spearman", point.spearman_samples)):
        try:
            out[name] = five_number_summary(samples)
        except ValueError:
            out[name] = None
    if out["pearson"] is None and out["spearman"] is None:
        raise ValueError(f"all samples undefined at size {point.size}")
    return out
