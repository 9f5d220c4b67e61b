import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.linear_model import LinearRegression
from sklearn.model_selection import GridSearchCV, KFold
from sklearn.pipeline import make_pipeline

from oracles import pearson_exact
from lexisent import AFINN_SCALE, Lexicon, LexiconScorer, build_index, score_texts


def test_defaults_use_bundled_list():
    est = LexiconScorer(scheme="sum").fit()
    assert est.lexicon_.name == "AFINN-111" and len(est.lexicon_) == 2462
    assert est.predict(["good good"]).tolist() == [6.0]


def test_params_round_trip(small_lex):
    est = LexiconScorer(lexicon=small_lex, match="stemmed", scheme="extreme")
    assert est.get_params() == {"lexicon": small_lex, "match": "stemmed", "scheme": "extreme"}
    twin = clone(est)
    assert twin.get_params() == est.get_params()
    twin.set_params(scheme="sum")
    assert est.scheme == "extreme"


def test_unfitted():
    with pytest.raises(NotFittedError):
        LexiconScorer().predict(["x"])


def test_input_validation(small_lex):
    est = LexiconScorer(small_lex).fit()
    with pytest.raises(TypeError, match="single string"):
        est.predict("good")
    with pytest.raises(TypeError, match="not str"):
        est.predict(["good", 3])
    with pytest.raises(ValueError):
        LexiconScorer(small_lex, scheme="median").fit()
    with pytest.raises(TypeError):
        LexiconScorer(lexicon={"good": 3}).fit()


def test_accepts_arrays_and_columns(small_lex):
    est = LexiconScorer(small_lex, scheme="sum").fit()
    col = np.array([["good"], ["bad"]], dtype=object)
    assert est.predict(col).tolist() == [3.0, -3.0]
    assert est.transform(np.array(["good", "bad"], dtype=object)).shape == (2, 1)


def test_transform_details(small_lex):
    est = LexiconScorer(small_lex).fit()
    assert est.transform_details(["good meh"]).tolist() == [[1.5, 2.0, 1.0]]
    assert est.get_feature_names_out().tolist() == ["small_mean"]


def test_matches_functional_path(afinn_words, synthetic_corpus):
    est = LexiconScorer(afinn_words, scheme="mean-matched").fit(synthetic_corpus)
    want = score_texts(synthetic_corpus, build_index(afinn_words), "mean-matched")
    assert np.array_equal(est.predict(synthetic_corpus), want)


def test_score_is_pearson(small_lex):
    est = LexiconScorer(small_lex).fit()
    # predictions 3, -3, -3.5 per the mean scheme
    want = pearson_exact([3, -3, -3.5], [5, 3, 1])
    assert est.score(["good", "bad", "awful bad"], [5, 3, 1]) == pytest.approx(want, abs=1e-12)


def test_pickle_round_trip(small_lex):
    import pickle
    est = LexiconScorer(small_lex, match="stemmed").fit()
    again = pickle.loads(pickle.dumps(est))
    assert again.lexicon_ == small_lex
    assert again.predict(["loving it"]).tolist() == est.predict(["loving it"]).tolist()


def test_pipeline_and_grid_search(afinn_words, synthetic_corpus):
    texts = synthetic_corpus[:200]
    y = 3.0 * score_texts(texts, build_index(afinn_words), "sum") + 1.0
    pipe = make_pipeline(LexiconScorer(afinn_words), LinearRegression())
    grid = GridSearchCV(pipe, {"lexiconscorer__scheme": ["mean", "sum", "extreme"]},
                        cv=KFold(3))
    grid.fit(texts, y)
    assert grid.best_params_ == {"lexiconscorer__scheme": "sum"}
    assert grid.best_score_ == pytest.approx(1.0)
