"""Sentiment lexicons: valence scales, loading, and simple summaries."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from ._validation import FormatError

__all__ = [
    "ValenceScale",
    "LexiconEntry",
    "Lexicon",
    "AFINN_SCALE",
    "ANEW_SCALE",
    "POLARITY_SCALE",
    "load_valence_list",
    "load_afinn",
    "dump_valence_list",
    "from_polarity_list",
    "load_polarity_lists",
    "strip_phrases",
    "valence_histogram",
    "polarity_counts",
]


@dataclass(frozen=True)
class ValenceScale:
    min: float
    neutral: float
    max: float

    def __post_init__(self):
        if not (self.min < self.neutral < self.max):
            raise ValueError(
                f"scale must satisfy min < neutral < max, got "
                f"({self.min}, {self.neutral}, {self.max})"
            )

    @classmethod
    def parse(cls, text: str) -> "ValenceScale":
        """Parse ``MIN:NEUTRAL:MAX``, e.g. ``-5:0:5`` or ``1:5:9``."""
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"scale must look like MIN:NEUTRAL:MAX, got {text!r}")
        lo, mid, hi = (float(p) for p in parts)
        return cls(lo, mid, hi)

    def __contains__(self, value: float) -> bool:
        return self.min <= value <= self.max


AFINN_SCALE = ValenceScale(-5.0, 0.0, 5.0)
ANEW_SCALE = ValenceScale(1.0, 5.0, 9.0)
POLARITY_SCALE = ValenceScale(-1.0, 0.0, 1.0)


@dataclass(frozen=True)
class LexiconEntry:
    term: str
    valence: float

    @property
    def is_phrase(self) -> bool:
        return len(self.term.split()) > 1


@dataclass(frozen=True, eq=False)
class Lexicon(Mapping[str, float]):
    """Immutable map from case-folded term to valence on a declared scale.

    Lookups fold case, so ``lex["LOL"] == lex["lol"]``.
    """

    name: str
    scale: ValenceScale
    entries: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        folded: dict[str, float] = {}
        for term, valence in self.entries.items():
            key = _fold(term)
            if not key:
                raise ValueError("lexicon terms must be non-empty")
            if key in folded:
                raise ValueError(f"duplicate term after case folding: {key!r}")
            v = float(valence)
            if math.isnan(v) or v not in self.scale:
                raise ValueError(
                    f"valence {v} of {key!r} outside scale [{self.scale.min}, {self.scale.max}]"
                )
            folded[key] = v
        object.__setattr__(self, "entries", MappingProxyType(folded))

    def __getitem__(self, term: str) -> float:
        return self.entries[_fold(term)]

    def __contains__(self, term: object) -> bool:
        return isinstance(term, str) and _fold(term) in self.entries

    def __iter__(self) -> Iterator[str]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return (
            self.name == other.name
            and self.scale == other.scale
            and dict(self.entries) == dict(other.entries)
        )

    def __hash__(self):
        return hash((self.name, self.scale, frozenset(self.entries.items())))

    def __reduce__(self):
        return (Lexicon, (self.name, self.scale, dict(self.entries)))

    def __repr__(self) -> str:
        return f"Lexicon(name={self.name!r}, scale={self.scale}, size={len(self)})"

    def iter_entries(self) -> Iterator[LexiconEntry]:
        for term, valence in self.entries.items():
            yield LexiconEntry(term, valence)

    @property
    def phrase_count(self) -> int:
        return sum(e.is_phrase for e in self.iter_entries())

    def restrict(self, terms: Iterable[str], name: str | None = None) -> "Lexicon":
        """Sub-lexicon over ``terms``; every term must be present."""
        picked = {}
        for t in terms:
            key = _fold(t)
            if key not in self.entries:
                raise KeyError(f"term {key!r} not in lexicon {self.name!r}")
            picked[key] = self.entries[key]
        return Lexicon(self.name if name is None else name, self.scale, picked)


def _fold(term: str) -> str:
    return term.strip().casefold()


def load_valence_list(
    stream: Iterable[str], scale: ValenceScale = AFINN_SCALE, name: str = "lexicon",
    source: str | None = None,
) -> Lexicon:
    """Parse ``term<TAB>valence`` lines.

    Blank lines and ``#`` comments are skipped. Malformed lines, out-of-scale
    valences and duplicate terms raise :class:`FormatError` with the
    line number.
    """
    entries: dict[str, float] = {}
    first_seen: dict[str, int] = {}
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        term, tab, value = line.rpartition("\t")
        if not tab:
            raise FormatError("expected 'term<TAB>valence'", lineno, source)
        term = _fold(term)
        if not term:
            raise FormatError("empty term", lineno, source)
        try:
            valence = float(value)
        except ValueError:
            raise FormatError(f"non-numeric valence {value!r}", lineno, source) from None
        if math.isnan(valence) or valence not in scale:
            raise FormatError(
                f"valence {valence} outside scale [{scale.min}, {scale.max}]", lineno, source
            )
        if term in entries:
            raise FormatError(
                f"duplicate term {term!r} (first seen on line {first_seen[term]})", lineno, source
            )
        entries[term] = valence
        first_seen[term] = lineno
    return Lexicon(name, scale, entries)


def load_afinn() -> Lexicon:
    """The bundled AFINN-111 list (2477 entries, -5..+5)."""
    ref = resources.files("lexisent") / "data" / "AFINN-111.txt"
    with ref.open("r", encoding="utf-8") as fh:
        return load_valence_list(fh, AFINN_SCALE, "AFINN-111", source="AFINN-111.txt")


def _format_valence(v: float) -> str:
    return str(int(v)) if v.is_integer() else repr(v)


def dump_valence_list(lex: Lexicon) -> str:
    """Serialize to the tab-separated format, sorted by term, LF-terminated."""
    return "".join(f"{t}\t{_format_valence(v)}\n" for t, v in sorted(lex.entries.items()))


def from_polarity_list(
    positive_terms: Iterable[str], negative_terms: Iterable[str], name: str = "polarity"
) -> Lexicon:
    pos = {_fold(t) for t in positive_terms}
    neg = {_fold(t) for t in negative_terms}
    pos.discard("")
    neg.discard("")
    overlap = pos & neg
    if overlap:
        raise ValueError(f"terms in both polarity sets: {sorted(overlap)[:10]}")
    entries = {t: 1.0 for t in sorted(pos)}
    entries.update((t, -1.0) for t in sorted(neg))
    return Lexicon(name, POLARITY_SCALE, entries)


def _read_terms(path) -> list[str]:
    with open(path, encoding="utf-8") as fh:
        return [
            line.strip() for line in fh
            if line.strip() and not line.lstrip().startswith("#")
        ]


def load_polarity_lists(pos_path, neg_path, name: str = "polarity") -> Lexicon:
    """Load two one-term-per-line files into a +1/-1 lexicon."""
    return from_polarity_list(_read_terms(pos_path), _read_terms(neg_path), name)


def strip_phrases(lex: Lexicon) -> Lexicon:
    kept = {e.term: e.valence for e in lex.iter_entries() if not e.is_phrase}
    return Lexicon(lex.name, lex.scale, kept)


def valence_histogram(lex: Lexicon, bin_width: float = 1.0) -> dict[float, int]:
    """Count entries per bin.

    Bins are labelled by their centre: a valence ``v`` falls into the bin
    ``round(v / bin_width) * bin_width``, so integer valences with width 1 map
    to themselves.
    """
    if not bin_width > 0:
        raise ValueError("bin_width must be positive")
    counts = Counter(
        float(math.floor(v / bin_width + 0.5) * bin_width) for v in lex.entries.values()
    )
    return dict(sorted(counts.items()))


def polarity_counts(lex: Lexicon) -> tuple[int, int, int]:
    """Return ``(negative, positive, neutral)`` counts relative to the scale's neutral."""
    mid = lex.scale.neutral
    neg = sum(v < mid for v in lex.entries.values())
    pos = sum(v > mid for v in lex.entries.values())
    return neg, pos, len(lex) - neg - pos
