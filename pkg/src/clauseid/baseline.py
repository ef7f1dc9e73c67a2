"""Whole-sentence baseline: each sentence is a single clause."""
from typing import NamedTuple

from .corpus import BRACKETS, ENDS, STARTS, Corpus
from .encoding import ClauseSet, format_boundary_column, format_bracket_column, spans_to_tags


class BaselinePrediction(NamedTuple):
    clauses: ClauseSet
    starts: list
    ends: list


def baseline_predict(sentence) -> BaselinePrediction:
    """Predict for a sentence (or anything with a length)."""
    n = len(sentence)
    if n == 0:
        raise ValueError("empty sentence")
    starts = [i == 0 for i in range(n)]
    ends = [i == n - 1 for i in range(n)]
    return BaselinePrediction(ClauseSet([(0, n - 1)]), starts, ends)


def baseline_columns(corpus: Corpus, roles=(STARTS, ENDS, BRACKETS)) -> dict:
    """Baseline annotation strings for the requested clause roles."""
    preds = [baseline_predict(s) for s in corpus]
    columns = {}
    for role in roles:
        if role == STARTS:
            columns[role] = [format_boundary_column(p.starts, 1) for p in preds]
        elif role == ENDS:
            columns[role] = [format_boundary_column(p.ends, 2) for p in preds]
        elif role == BRACKETS:
            columns[role] = [
                format_bracket_column(spans_to_tags(p.clauses, len(s)))
                for p, s in zip(preds, corpus)
            ]
        else:
            raise ValueError(f"not a clause role: {role!r}")
    return columns
