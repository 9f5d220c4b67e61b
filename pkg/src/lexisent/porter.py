"""Porter (1980) suffix-stripping stemmer.

Follows Martin Porter's reference implementation, which produced the published
``voc.txt``/``output.txt`` test vocabulary. That implementation differs from
Porter's 1980 description in two step-2 rules (``bli -> ble`` instead of ``abli -> able``,
and the extra ``logi -> log``); both are kept so the output matches the
reference pairs.
"""
from __future__ import annotations

from functools import lru_cache

__all__ = ["porter_stem"]

_VOWELS = frozenset("aeiou")


def _is_cons(w: str, i: int) -> bool:
    ch = w[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        return i == 0 or not _is_cons(w, i - 1)
    return True


def _measure(stem: str) -> int:
    """Number of VC sequences in ``[C](VC)^m[V]``."""
    m = 0
    prev_vowel = False
    for i in range(len(stem)):
        cons = _is_cons(stem, i)
        if cons and prev_vowel:
            m += 1
        prev_vowel = not cons
    return m


def _has_vowel(stem: str) -> bool:
    return any(not _is_cons(stem, i) for i in range(len(stem)))


def _ends_double_cons(w: str) -> bool:
    return len(w) >= 2 and w[-1] == w[-2] and _is_cons(w, len(w) - 1)


def _ends_cvc(w: str) -> bool:
    # consonant-vowel-consonant, final consonant not w, x or y
    n = len(w)
    if n < 3:
        return False
    return (
        _is_cons(w, n - 1) and not _is_cons(w, n - 2) and _is_cons(w, n - 3)
        and w[-1] not in "wxy"
    )


def _step1ab(w: str) -> str:
    if w.endswith("s"):
        if w.endswith("sses"):
            w = w[:-2]
        elif w.endswith("ies"):
            w = w[:-2]
        elif not w.endswith("ss"):
            w = w[:-1]

    if w.endswith("eed"):
        if _measure(w[:-3]) > 0:
            w = w[:-1]
        return w

    for suffix in ("ed", "ing"):
        if w.endswith(suffix) and _has_vowel(w[: -len(suffix)]):
            w = w[: -len(suffix)]
            break
    else:
        return w

    if w.endswith(("at", "bl", "iz")):
        return w + "e"
    if _ends_double_cons(w):
        return w if w[-1] in "lsz" else w[:-1]
    if _measure(w) == 1 and _ends_cvc(w):
        return w + "e"
    return w


def _step1c(w: str) -> str:
    if w.endswith("y") and _has_vowel(w[:-1]):
        return w[:-1] + "i"
    return w


# grouped by penultimate letter as in the reference code; within a group the
# first matching suffix decides, whether or not its measure condition holds
_STEP2 = {
    "a": (("ational", "ate"), ("tional", "tion")),
    "c": (("enci", "ence"), ("anci", "ance")),
    "e": (("izer", "ize"),),
    "l": (("bli", "ble"), ("alli", "al"), ("entli", "ent"), ("eli", "e"), ("ousli", "ous")),
    "o": (("ization", "ize"), ("ation", "ate"), ("ator", "ate")),
    "s": (("alism", "al"), ("iveness", "ive"), ("fulness", "ful"), ("ousness", "ous")),
    "t": (("aliti", "al"), ("iviti", "ive"), ("biliti", "ble")),
    "g": (("logi", "log"),),
}

_STEP3 = {
    "e": (("icate", "ic"), ("ative", ""), ("alize", "al")),
    "i": (("iciti", "ic"),),
    "l": (("ical", "ic"), ("ful", "")),
    "s": (("ness", ""),),
}

_STEP4 = {
    "a": ("al",),
    "c": ("ance", "ence"),
    "e": ("er",),
    "i": ("ic",),
    "l": ("able", "ible"),
    "n": ("ant", "ement", "ment", "ent"),
    "o": ("ion", "ou"),
    "s": ("ism",),
    "t": ("ate", "iti"),
    "u": ("ous",),
    "v": ("ive",),
    "z": ("ize",),
}


def _replace_if_measure(w: str, rules, key: str) -> str:
    for suffix, repl in rules.get(key, ()):
        if w.endswith(suffix):
            stem = w[: -len(suffix)]
            return stem + repl if _measure(stem) > 0 else w
    return w


def _step4(w: str) -> str:
    for suffix in _STEP4.get(w[-2], ()):
        if not w.endswith(suffix):
            continue
        stem = w[: -len(suffix)]
        if suffix == "ion" and not stem.endswith(("s", "t")):
            continue
        return stem if _measure(stem) > 1 else w
    return w


def _step5(w: str) -> str:
    if w.endswith("e"):
        stem = w[:-1]
        m = _measure(stem)
        if m > 1 or (m == 1 and not _ends_cvc(stem)):
            w = stem
    if w.endswith("ll") and _measure(w) > 1:
        w = w[:-1]
    return w


@lru_cache(maxsize=65536)
def porter_stem(word: str) -> str:
    """Stem a lowercase word.

    >>> porter_stem("caresses"), porter_stem("ponies"), porter_stem("relational")
    ('caress', 'poni', 'relat')
    """
    if len(word) <= 2:
        return word
    w = _step1ab(word)
    if len(w) < 2:
        return w
    w = _step1c(w)
    w = _replace_if_measure(w, _STEP2, w[-2])
    w = _replace_if_measure(w, _STEP3, w[-1])
    w = _step4(w)
    return _step5(w)
