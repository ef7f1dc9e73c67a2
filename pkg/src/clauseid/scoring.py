"""Precision, recall and F-beta for clause starts, clause ends and clauses.

Counts are micro-averaged: per-sentence tallies are summed over the corpus
before any ratio is taken.  Clause matching uses multiset semantics, so a
duplicated gold clause must be predicted twice to be found twice.
"""
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .encoding import (
    ClauseSet,
    derive_boundaries,
    looks_like_brackets,
    parse_boundary_column,
    parse_bracket_column,
    parse_clause_column,
)
from .errors import AlignmentError


@dataclass(frozen=True)
class PartCounts:
    gold: int = 0
    predicted: int = 0
    correct: int = 0

    def __post_init__(self):
        if min(self.gold, self.predicted, self.correct) < 0:
            raise ValueError(f"negative count in {self}")
        if self.correct > min(self.gold, self.predicted):
            raise ValueError(f"correct exceeds gold or predicted in {self}")

    def __add__(self, other):
        if not isinstance(other, PartCounts):
            return NotImplemented
        return PartCounts(
            self.gold + other.gold,
            self.predicted + other.predicted,
            self.correct + other.correct,
        )

    def precision(self):
        return Fraction(self.correct, self.predicted) if self.predicted else Fraction(0)

    def recall(self):
        return Fraction(self.correct, self.gold) if self.gold else Fraction(0)


@dataclass(frozen=True)
class Score:
    precision: float
    recall: float
    f: float
    beta: float = 1.0


def merge(*counts: PartCounts) -> PartCounts:
    return reduce(lambda a, b: a + b, counts, PartCounts())


def f_measure(precision, recall, beta=1.0):
    """(beta² + 1)·P·R / (beta²·P + R), or 0 when the denominator vanishes.

    Exact when given Fractions; otherwise computed in floating point.
    """
    if beta <= 0:
        raise ValueError("beta must be positive")
    if isinstance(precision, Fraction) and isinstance(recall, Fraction):
        beta = Fraction(beta)
    b2 = beta * beta
    denominator = b2 * precision + recall
    if denominator == 0:
        return 0 * precision
    return (b2 + 1) * precision * recall / denominator


def score_boundaries(gold: Sequence[Sequence[bool]], pred: Sequence[Sequence[bool]]) -> PartCounts:
    """Compare per-sentence start (or end) flag columns."""
    if len(gold) != len(pred):
        raise AlignmentError(f"gold has {len(gold)} sentences, prediction {len(pred)}")
    g = p = c = 0
    for k, (gs, ps) in enumerate(zip(gold, pred)):
        if len(gs) != len(ps):
            raise AlignmentError(f"gold has {len(gs)} tokens, prediction {len(ps)}", k)
        for a, b in zip(gs, ps):
            g += a
            p += b
            c += a and b
    return PartCounts(g, p, c)


def sentence_clause_counts(gold: ClauseSet, pred: ClauseSet) -> PartCounts:
    common = gold.counter() & pred.counter()
    return PartCounts(len(gold), len(pred), sum(common.values()))


def score_clauses(gold: Sequence[ClauseSet], pred: Sequence[ClauseSet]) -> PartCounts:
    if len(gold) != len(pred):
        raise AlignmentError(f"gold has {len(gold)} sentences, prediction {len(pred)}")
    return merge(*(sentence_clause_counts(g, p) for g, p in zip(gold, pred)))


def _fraction(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def round_half_up(value, places=2) -> Decimal:
    """Round a rational value half-up (not half-even) to ``places`` decimals."""
    value = _fraction(value)
    with localcontext() as ctx:
        ctx.prec = 50
        exact = Decimal(value.numerator) / Decimal(value.denominator)
        return exact.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def _exact_scores(counts, beta):
    p = counts.precision()
    r = counts.recall()
    return p, r, f_measure(p, r, beta)


def score(counts: PartCounts, beta=1.0) -> Score:
    p, r, f = _exact_scores(counts, beta)
    return Score(float(p), float(r), float(f), beta)


def _f_name(beta):
    return f"F{beta:g}"


def report(counts: PartCounts, beta=1.0):
    """Return the Score and a one-line rendering in table style.

    ``precision: 100.00%; recall: 25.00%; F1: 40.00``
    """
    p, r, f = _exact_scores(counts, beta)
    text = "precision: {}%; recall: {}%; {}: {}".format(
        round_half_up(100 * p), round_half_up(100 * r), _f_name(beta), round_half_up(100 * f)
    )
    return Score(float(p), float(r), float(f), beta), text


def machine_line(part, counts: PartCounts, beta=1.0) -> str:
    p, r, f = _exact_scores(counts, beta)
    return (
        f"part={part} gold={counts.gold} pred={counts.predicted} correct={counts.correct} "
        f"p={round_half_up(p, 4)} r={round_half_up(r, 4)} f={round_half_up(f, 4)}"
    )


def check_alignment(gold_words, pred_words):
    """Raise AlignmentError unless both corpora have identical tokenization."""
    if len(gold_words) != len(pred_words):
        raise AlignmentError(f"gold has {len(gold_words)} sentences, prediction {len(pred_words)}")
    for k, (g, p) in enumerate(zip(gold_words, pred_words)):
        if len(g) != len(p):
            raise AlignmentError(f"gold has {len(g)} tokens, prediction {len(p)}", k)
        for i, (a, b) in enumerate(zip(g, p)):
            if a != b:
                raise AlignmentError(f"token {i} differs: {a!r} vs {b!r}", k)


def column_as_boundaries(column: Sequence[str], part: int):
    """Read a sentence's start (part 1) or end (part 2) flags.

    Accepts either the flag encoding itself or bracket tags, which are
    projected onto flags.
    """
    if looks_like_brackets(column):
        starts, ends = derive_boundaries(parse_bracket_column(column))
        return starts if part == 1 else ends
    return parse_boundary_column(column, part)


def score_part(part: int, gold_columns, pred_columns) -> PartCounts:
    """Score one task part from per-sentence annotation string columns."""
    if part in (1, 2):
        return score_boundaries(
            [column_as_boundaries(c, part) for c in gold_columns],
            [column_as_boundaries(c, part) for c in pred_columns],
        )
    if part == 3:
        return score_clauses(
            [parse_clause_column(c) for c in gold_columns],
            [parse_clause_column(c) for c in pred_columns],
        )
    raise ValueError(f"unknown task part {part}")
