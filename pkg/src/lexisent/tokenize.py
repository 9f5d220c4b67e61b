"""Word tokenizer for short informal text (tweets, comments)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import regex

__all__ = ["Token", "tokenize", "token_texts", "unique_tokens", "TOKEN_PATTERN"]

# a word is a run of letters/digits (combining marks may follow), with at most
# one internal apostrophe: "can't" is one token, "'tis" is "tis"
_WORD = r"[\p{L}\p{N}][\p{L}\p{N}\p{M}]*"
TOKEN_PATTERN = rf"{_WORD}(?:['’]{_WORD})?"

_SCANNER = regex.compile(
    r"(?P<url>(?:https?://|www\.)\S*)"
    r"|(?P<mention>@\w+)"
    rf"|(?P<word>{TOKEN_PATTERN})",
    regex.IGNORECASE,
)


@dataclass(frozen=True)
class Token:
    text: str
    start: int
    end: int


def tokenize(raw: str) -> list[Token]:
    """Split ``raw`` into case-folded word tokens with character offsets.

    URLs (``http://``, ``https://``, ``www.``) and ``@mentions`` are dropped;
    a hashtag keeps its word (``#cool`` -> ``cool``).

    >>> [t.text for t in tokenize("check http://x.co #Cool @bob")]
    ['check', 'cool']
    """
    out = []
    for m in _SCANNER.finditer(raw):
        if m.lastgroup != "word":
            continue
        text = m.group().replace("’", "'").casefold()
        out.append(Token(text, m.start(), m.end()))
    return out


def token_texts(raw: str) -> list[str]:
    return [t.text for t in tokenize(raw)]


def unique_tokens(tokens: Iterable[Token | str]) -> set[str]:
    return {t if isinstance(t, str) else t.text for t in tokens}
