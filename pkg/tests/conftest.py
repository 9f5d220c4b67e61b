import random

import pytest

from lexisent import Lexicon, AFINN_SCALE, load_afinn, strip_phrases

FILLERS = ["the", "a", "of", "and", "to", "in", "it", "this", "that", "was",
           "my", "on", "for", "is", "with", "at", "so", "just", "today", "now"]


@pytest.fixture(scope="session")
def afinn():
    return load_afinn()


@pytest.fixture(scope="session")
def afinn_words(afinn):
    return strip_phrases(afinn)


@pytest.fixture
def small_lex():
    return Lexicon("small", AFINN_SCALE, {"good": 3, "bad": -3, "awful": -4, "love": 3})


def synthetic_texts(lexicon, n_texts, seed, min_len=3, max_len=12, filler_rate=0.4):
    """Random texts built from lexicon words plus filler words absent from it."""
    rng = random.Random(seed)
    words = sorted(lexicon)
    fillers = [w for w in FILLERS if w not in lexicon]
    texts = []
    for _ in range(n_texts):
        k = rng.randint(min_len, max_len)
        toks = [rng.choice(fillers) if rng.random() < filler_rate else rng.choice(words)
                for _ in range(k)]
        texts.append(" ".join(toks))
    return texts


@pytest.fixture(scope="session")
def synthetic_corpus(afinn_words):
    return synthetic_texts(afinn_words, 500, seed=20111)
