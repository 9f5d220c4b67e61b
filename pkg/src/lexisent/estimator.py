"""scikit-learn compatible front end for lexicon scoring."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_target, check_texts
from .lexicon import Lexicon, load_afinn, strip_phrases
from .matching import MatchStrategy, build_index
from .scoring import ScoringScheme, score_text
from .stats import pearson
from .tokenize import tokenize

__all__ = ["LexiconScorer"]


class LexiconScorer(TransformerMixin, BaseEstimator):
    """Score raw texts against a valence lexicon.

    Parameters
    ----------
    lexicon : Lexicon or None
        Word list to score with. ``None`` uses the bundled AFINN-111 list.
        Multiword entries are dropped at fit time.
    match : {"exact", "stemmed"}
        Exact term lookup, or Porter-stem both terms and tokens.
    scheme : {"mean", "sum", "mean-matched", "extreme", "quantized"}
        How token valences combine into one value per text.

    Notes
    -----
    ``fit`` learns nothing from the data; it only builds the lookup index, so
    the estimator can sit in a :class:`~sklearn.pipeline.Pipeline` and be
    grid-searched over ``match``/``scheme``. ``score`` returns the Pearson
    correlation of predictions with ``y``.

    Examples
    --------
    >>> LexiconScorer(scheme="sum").fit(None).predict(["good good", "awful"])
    array([ 6., -3.])
    """

    def __init__(self, lexicon: Lexicon | None = None, match: str = "exact", scheme: str = "mean"):
        self.lexicon = lexicon
        self.match = match
        self.scheme = scheme

    def fit(self, X=None, y=None):
        lex = load_afinn() if self.lexicon is None else self.lexicon
        if not isinstance(lex, Lexicon):
            raise TypeError(f"lexicon must be a Lexicon, got {type(lex).__name__}")
        self.match_ = MatchStrategy.coerce(self.match)
        self.scheme_ = ScoringScheme.coerce(self.scheme)
        self.lexicon_ = strip_phrases(lex)
        self.index_ = build_index(self.lexicon_, self.match_)
        self.neutral_ = self.lexicon_.scale.neutral
        return self

    def _score_all(self, X):
        check_is_fitted(self, "index_")
        texts = check_texts(X)
        return [score_text(tokenize(t), self.index_, self.scheme_, self.neutral_) for t in texts]

    def predict(self, X) -> np.ndarray:
        return np.array([s.value for s in self._score_all(X)], dtype=float)

    def transform(self, X) -> np.ndarray:
        """One feature column: the text score."""
        return self.predict(X).reshape(-1, 1)

    def transform_details(self, X) -> np.ndarray:
        """Columns: score, token count, matched-token count."""
        return np.array(
            [(s.value, s.token_count, s.matched_count) for s in self._score_all(X)],
            dtype=float,
        ).reshape(-1, 3)

    def score(self, X, y, sample_weight=None) -> float:
        if sample_weight is not None:
            raise NotImplementedError("sample weights are not supported")
        pred = self.predict(X)
        return pearson(pred, check_target(y, pred.size))

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "index_")
        return np.array([f"{self.lexicon_.name}_{self.scheme_.value}"], dtype=object)

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.input_tags.two_d_array = False
        tags.input_tags.string = True
        tags.requires_fit = True
        return tags
