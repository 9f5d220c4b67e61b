"""Lookup indices from lexicons under exact or Porter-stemmed matching."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Mapping

from .lexicon import Lexicon
from .porter import porter_stem

__all__ = ["MatchStrategy", "LookupIndex", "build_index", "lookup", "register_strategy"]


class MatchStrategy(str, enum.Enum):
    EXACT = "exact"
    STEMMED = "stemmed"

    @classmethod
    def coerce(cls, value: "MatchStrategy | str") -> "MatchStrategy":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            choices = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown match strategy {value!r}; expected one of {choices}") from None


def _identity(word: str) -> str:
    return word


# strategy -> key function applied to lexicon terms and tokens alike
_KEY_FUNCS: dict[MatchStrategy, Callable[[str], str]] = {
    MatchStrategy.EXACT: _identity,
    MatchStrategy.STEMMED: porter_stem,
}


def register_strategy(strategy: MatchStrategy, key_func: Callable[[str], str]) -> None:
    """Swap the key function behind a strategy (e.g. a lemmatizer for experiments)."""
    _KEY_FUNCS[MatchStrategy.coerce(strategy)] = key_func


def key_function(strategy: MatchStrategy | str) -> Callable[[str], str]:
    return _KEY_FUNCS[MatchStrategy.coerce(strategy)]


@dataclass(frozen=True)
class LookupIndex:
    strategy: MatchStrategy
    table: Mapping[str, float]
    collisions: tuple[tuple[str, tuple[str, ...]], ...] = field(default=())
    neutral: float = 0.0

    def __post_init__(self):
        if not isinstance(self.table, MappingProxyType):
            object.__setattr__(self, "table", MappingProxyType(dict(self.table)))

    def get(self, token_text: str) -> float | None:
        return self.table.get(key_function(self.strategy)(token_text))

    def __len__(self) -> int:
        return len(self.table)

    def __reduce__(self):
        return (LookupIndex, (self.strategy, dict(self.table), self.collisions, self.neutral))


def build_index(lex: Lexicon, strategy: MatchStrategy | str = MatchStrategy.EXACT) -> LookupIndex:
    """Key every lexicon term under ``strategy``.

    Terms sharing a key (stem collisions) are merged to the arithmetic mean of
    their valences and recorded in ``collisions``.
    """
    strategy = MatchStrategy.coerce(strategy)
    phrases = [e.term for e in lex.iter_entries() if e.is_phrase]
    if phrases:
        raise ValueError(
            f"lexicon {lex.name!r} contains {len(phrases)} phrase entries "
            f"(e.g. {phrases[0]!r}); apply strip_phrases first"
        )
    keyf = key_function(strategy)
    groups: dict[str, list[str]] = {}
    for term in lex:
        groups.setdefault(keyf(term), []).append(term)

    table = {}
    collisions = []
    for key, terms in groups.items():
        vals = [lex.entries[t] for t in terms]
        table[key] = sum(vals) / len(vals)
        if len(terms) > 1:
            collisions.append((key, tuple(sorted(terms))))
    collisions.sort()
    return LookupIndex(strategy, table, tuple(collisions), lex.scale.neutral)


def lookup(index: LookupIndex, token_text: str) -> float | None:
    return index.get(token_text)
