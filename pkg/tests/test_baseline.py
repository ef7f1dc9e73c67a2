from clauseid.baseline import baseline_columns, baseline_predict
from clauseid.corpus import BRACKETS, ENDS, STARTS
from clauseid.encoding import ClauseSet
from clauseid.scoring import score, score_clauses
from clauseid.synthgen import generate

from conftest import EXAMPLE_SPANS


def test_example_sentence():
    pred = baseline_predict(range(13))
    assert pred.clauses == ClauseSet([(0, 12)])
    assert [i for i, f in enumerate(pred.starts) if f] == [0]
    assert [i for i, f in enumerate(pred.ends) if f] == [12]


def test_single_token():
    pred = baseline_predict("a")
    assert pred.clauses == ClauseSet([(0, 0)])
    assert pred.starts == pred.ends == [True]


def test_scored_against_example():
    s = score(score_clauses([ClauseSet(EXAMPLE_SPANS)], [baseline_predict(range(13)).clauses]))
    assert (s.precision, s.recall) == (1.0, 0.25)


def test_columns():
    corpus = generate(sentences=3, max_len=4, seed=1)
    cols = baseline_columns(corpus)
    for k, sentence in enumerate(corpus):
        n = len(sentence)
        assert cols[STARTS][k] == ["S"] + ["X"] * (n - 1)
        assert cols[ENDS][k] == ["X"] * (n - 1) + ["E"]
        expected = ["(S*S)"] if n == 1 else ["(S*"] + ["*"] * (n - 2) + ["*S)"]
        assert cols[BRACKETS][k] == expected
