"""Gold-labelled corpora and externally produced score columns.

Corpus files are UTF-8 TSV, one record per line::

    id<TAB>text<TAB>r1,r2,...

Tabs, newlines and backslashes inside ``text`` are written as ``\\t``, ``\\n``
and ``\\\\``. Ratings are integers in 1..9.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ._validation import FormatError

__all__ = [
    "RATING_MIN",
    "RATING_MAX",
    "LabeledText",
    "DualStrength",
    "ScoreColumn",
    "load_corpus",
    "dump_corpus",
    "gold_score",
    "gold_column",
    "collapse_dual",
    "load_score_column",
    "load_dual_column",
]

RATING_MIN, RATING_MAX = 1, 9

_ESCAPES = {"\\": "\\\\", "\t": "\\t", "\n": "\\n", "\r": "\\r"}
_UNESCAPES = {v: k for k, v in _ESCAPES.items()}
_UNESCAPE_RE = re.compile(r"\\[\\tnr]")


def _escape(text: str) -> str:
    return "".join(_ESCAPES.get(ch, ch) for ch in text)


def _unescape(text: str) -> str:
    return _UNESCAPE_RE.sub(lambda m: _UNESCAPES[m.group()], text)


@dataclass(frozen=True)
class LabeledText:
    id: str
    text: str
    ratings: tuple[int, ...]

    def __post_init__(self):
        if not self.ratings:
            raise ValueError(f"record {self.id!r} has no ratings")
        bad = [r for r in self.ratings if not RATING_MIN <= r <= RATING_MAX]
        if bad:
            raise ValueError(
                f"record {self.id!r}: ratings {bad} outside [{RATING_MIN}, {RATING_MAX}]"
            )

    @property
    def gold(self) -> float:
        return gold_score(self)


def gold_score(t: LabeledText) -> float:
    """Mean of the human ratings."""
    return math.fsum(t.ratings) / len(t.ratings)


def gold_column(corpus: Sequence[LabeledText], name: str = "gold") -> "ScoreColumn":
    return ScoreColumn(name, np.array([gold_score(t) for t in corpus], dtype=float))


def load_corpus(stream: Iterable[str], source: str | None = None) -> list[LabeledText]:
    records = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise FormatError(
                f"expected 3 tab-separated fields (id, text, ratings), got {len(fields)}",
                lineno, source,
            )
        rid, text, rating_field = fields
        if not rid:
            raise FormatError("empty id", lineno, source)
        if rid in seen:
            raise FormatError(f"duplicate id {rid!r} (first on line {seen[rid]})", lineno, source)
        if not rating_field.strip():
            raise FormatError(f"record {rid!r} has no ratings", lineno, source)
        try:
            ratings = tuple(int(r) for r in rating_field.split(","))
        except ValueError:
            raise FormatError(f"non-integer rating in {rating_field!r}", lineno, source) from None
        try:
            records.append(LabeledText(rid, _unescape(text), ratings))
        except ValueError as exc:
            raise FormatError(str(exc), lineno, source) from None
        seen[rid] = lineno
    return records


def dump_corpus(corpus: Iterable[LabeledText]) -> str:
    return "".join(
        f"{t.id}\t{_escape(t.text)}\t{','.join(map(str, t.ratings))}\n" for t in corpus
    )


@dataclass(frozen=True)
class DualStrength:
    """A positive (1..5) and a negative (-5..-1) strength for one text."""

    positive: int
    negative: int

    def __post_init__(self):
        if not 1 <= self.positive <= 5:
            raise ValueError(f"positive strength {self.positive} outside [1, 5]")
        if not -5 <= self.negative <= -1:
            raise ValueError(f"negative strength {self.negative} outside [-5, -1]")


def collapse_dual(d: DualStrength) -> int:
    """Keep the strength with the larger magnitude; equal magnitudes give 0."""
    if d.positive > -d.negative:
        return d.positive
    if -d.negative > d.positive:
        return d.negative
    return 0


@dataclass(frozen=True, eq=False)
class ScoreColumn:
    name: str
    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float).ravel()
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return self.values.size


def _read_id_rows(stream, width: int, source):
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != width:
            raise FormatError(f"expected {width} tab-separated fields, got {len(fields)}",
                              lineno, source)
        yield lineno, fields


def _align(by_id: dict, corpus: Sequence[LabeledText], source) -> list:
    missing = [t.id for t in corpus if t.id not in by_id]
    if missing:
        more = f" (and {len(missing) - 1} more)" if len(missing) > 1 else ""
        raise FormatError(f"no score for corpus id {missing[0]!r}{more}", source=source)
    return [by_id[t.id] for t in corpus]


def load_score_column(
    stream: Iterable[str], corpus: Sequence[LabeledText], name: str = "score",
    source: str | None = None,
) -> ScoreColumn:
    """Read ``id<TAB>value`` rows and align them to ``corpus`` by id."""
    known = {t.id for t in corpus}
    by_id: dict[str, float] = {}
    for lineno, (rid, value) in _read_id_rows(stream, 2, source):
        if rid not in known:
            raise FormatError(f"unknown id {rid!r}", lineno, source)
        if rid in by_id:
            raise FormatError(f"duplicate id {rid!r}", lineno, source)
        try:
            v = float(value)
        except ValueError:
            raise FormatError(f"non-numeric value {value!r}", lineno, source) from None
        if not math.isfinite(v):
            raise FormatError(f"non-finite value {value!r}", lineno, source)
        by_id[rid] = v
    return ScoreColumn(name, np.array(_align(by_id, corpus, source), dtype=float))


def load_dual_column(
    stream: Iterable[str], corpus: Sequence[LabeledText], name: str = "dual",
    source: str | None = None,
) -> ScoreColumn:
    """Read ``id<TAB>pos<TAB>neg`` rows, collapse each pair, align by id."""
    known = {t.id for t in corpus}
    by_id: dict[str, int] = {}
    for lineno, (rid, pos, neg) in _read_id_rows(stream, 3, source):
        if rid not in known:
            raise FormatError(f"unknown id {rid!r}", lineno, source)
        if rid in by_id:
            raise FormatError(f"duplicate id {rid!r}", lineno, source)
        try:
            by_id[rid] = collapse_dual(DualStrength(int(pos), int(neg)))
        except ValueError as exc:
            raise FormatError(str(exc), lineno, source) from None
    return ScoreColumn(name, np.array(_align(by_id, corpus, source), dtype=float))
