"""Lexicon-based sentiment scoring of short informal texts, with an evaluation
harness for comparing word lists against human ratings."""
from .compare import (
    IntersectionResult,
    intersect,
    intersection_rank_correlation,
    intersection_sublexicons,
    sign_discrepancies,
    sublexicon,
)
from .corpus import (
    DualStrength,
    LabeledText,
    ScoreColumn,
    collapse_dual,
    gold_column,
    gold_score,
    load_corpus,
    load_dual_column,
    load_score_column,
)
from .estimator import LexiconScorer
from .experiments import (
    CorrelationReport,
    CoverageReport,
    LearningCurvePoint,
    correlation_matrix,
    coverage,
    learning_curve,
    scheme_sweep,
    summarize_boxplot,
)
from .lexicon import (
    AFINN_SCALE,
    ANEW_SCALE,
    POLARITY_SCALE,
    Lexicon,
    ValenceScale,
    from_polarity_list,
    load_afinn,
    load_valence_list,
    polarity_counts,
    strip_phrases,
    valence_histogram,
)
from .matching import LookupIndex, MatchStrategy, build_index, lookup
from .porter import porter_stem
from .scoring import ScoringScheme, TextScore, score_text, score_texts
from .stats import midranks, pearson, spearman
from .tokenize import Token, tokenize, unique_tokens
from ._validation import FormatError

__version__ = "0.1.0"
