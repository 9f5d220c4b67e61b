"""Compare two lexicons over their shared vocabulary."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

from .lexicon import Lexicon
from .matching import MatchStrategy, build_index, key_function
from .stats import spearman

__all__ = [
    "IntersectionResult",
    "intersect",
    "intersection_rank_correlation",
    "sign_discrepancies",
    "sublexicon",
    "intersection_sublexicons",
    "intersection_csv",
]


@dataclass(frozen=True)
class IntersectionResult:
    terms: tuple[str, ...]
    valences_a: tuple[float, ...]
    valences_b: tuple[float, ...]
    strategy: MatchStrategy
    neutral_a: float = 0.0
    neutral_b: float = 0.0

    def __len__(self) -> int:
        return len(self.terms)


def intersect(a: Lexicon, b: Lexicon, strategy: MatchStrategy | str = MatchStrategy.EXACT
              ) -> IntersectionResult:
    """Shared keys of ``a`` and ``b``, sorted, with each side's valence.

    Under stemmed matching the keys are stems and each side's valence is the
    mean over its terms sharing that stem.
    """
    strategy = MatchStrategy.coerce(strategy)
    ia = build_index(a, strategy)
    ib = build_index(b, strategy)
    shared = sorted(ia.table.keys() & ib.table.keys())
    return IntersectionResult(
        tuple(shared),
        tuple(ia.table[k] for k in shared),
        tuple(ib.table[k] for k in shared),
        strategy,
        a.scale.neutral,
        b.scale.neutral,
    )


def intersection_rank_correlation(r: IntersectionResult) -> float:
    """Spearman correlation of the paired valences (``nan`` if degenerate)."""
    return spearman(r.valences_a, r.valences_b)


def _side(x: float, neutral: float) -> int:
    return (x > neutral) - (x < neutral)


def sign_discrepancies(r: IntersectionResult, neutral_a: float | None = None,
                       neutral_b: float | None = None) -> list[str]:
    """Shared terms that are positive in one list and negative in the other.

    A valence exactly at its list's neutral point is never a discrepancy.
    """
    na = r.neutral_a if neutral_a is None else neutral_a
    nb = r.neutral_b if neutral_b is None else neutral_b
    return [
        t for t, va, vb in zip(r.terms, r.valences_a, r.valences_b)
        if _side(va, na) * _side(vb, nb) == -1
    ]


def sublexicon(terms: Sequence[str], source: Lexicon, name: str | None = None) -> Lexicon:
    return source.restrict(terms, name)


def intersection_sublexicons(a: Lexicon, b: Lexicon,
                             strategy: MatchStrategy | str = MatchStrategy.EXACT
                             ) -> tuple[Lexicon, Lexicon]:
    """Restrict each lexicon to the terms whose match key the other also has."""
    keyf = key_function(strategy)
    shared = set(intersect(a, b, strategy).terms)
    return tuple(
        sublexicon(sorted(t for t in lex if keyf(t) in shared), lex, f"{lex.name}-shared")
        for lex in (a, b)
    )


def _fmt(v: float) -> str:
    return repr(float(v))


def intersection_csv(r: IntersectionResult, terms: Sequence[str] | None = None) -> str:
    """CSV rows ``term,valence_a,valence_b``; ``terms`` selects a subset."""
    keep = None if terms is None else set(terms)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["term", "valence_a", "valence_b"])
    for t, va, vb in zip(r.terms, r.valences_a, r.valences_b):
        if keep is None or t in keep:
            writer.writerow([t, _fmt(va), _fmt(vb)])
    return buf.getvalue()
