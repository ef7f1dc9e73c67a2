import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from clauseid.encoding import ClauseSet
from clauseid.errors import AlignmentError
from clauseid.scoring import (
    PartCounts,
    check_alignment,
    f_measure,
    machine_line,
    merge,
    report,
    round_half_up,
    score,
    score_boundaries,
    score_clauses,
    score_part,
)

from conftest import EXAMPLE_SPANS


@pytest.mark.parametrize("p, r, f", [
    (0.9577, 0.9208, 0.9389),
    (0.8482, 0.7328, 0.7863),
])
def test_f_measure_table_rows(p, r, f):
    assert f_measure(p, r, 1) == pytest.approx(f, abs=0.00005)


def test_f_measure_edges():
    assert f_measure(1, 1, 1) == 1
    assert f_measure(0, 0, 1) == 0
    assert f_measure(Fraction(1), Fraction(1, 4)) == Fraction(2, 5)
    with pytest.raises(ValueError):
        f_measure(0.5, 0.5, 0)


def test_f_measure_beta():
    # beta=2 weighs recall more: 5PR/(4P+R)
    assert f_measure(0.5, 1.0, 2) == pytest.approx(5 * 0.5 / (4 * 0.5 + 1))
    assert f_measure(0.5, 1.0, 2) > f_measure(1.0, 0.5, 2)


@given(st.floats(0, 1), st.floats(0, 1))
def test_f_symmetric_at_beta_one(p, r):
    assert f_measure(p, r) == pytest.approx(f_measure(r, p))
    assert 0 <= f_measure(p, r) <= 1 + 1e-12


def test_boundaries_baseline_on_example():
    gold = [[i in {0, 3, 5, 7} for i in range(13)]]
    pred = [[i == 0 for i in range(13)]]
    assert score_boundaries(gold, pred) == PartCounts(4, 1, 1)


def test_boundaries_identical_and_empty():
    col = [[True, False, True]]
    s = score(score_boundaries(col, col))
    assert (s.precision, s.recall, s.f) == (1, 1, 1)
    counts = score_boundaries(col, [[False] * 3])
    assert counts == PartCounts(2, 0, 0)
    assert score(counts).precision == 0


def test_boundaries_alignment():
    with pytest.raises(AlignmentError) as err:
        score_boundaries([[True], [True, False]], [[True], [True]])
    assert err.value.sentence == 1
    with pytest.raises(AlignmentError):
        score_boundaries([[True]], [])


def test_clauses_example():
    counts = score_clauses([ClauseSet(EXAMPLE_SPANS)], [ClauseSet([(0, 12)])])
    assert counts == PartCounts(4, 1, 1)
    s = score(counts)
    assert (s.precision, s.recall, s.f) == (1.0, 0.25, 0.4)


def test_clauses_multiset():
    counts = score_clauses([ClauseSet([(0, 0), (0, 0)])], [ClauseSet([(0, 0)])])
    assert counts == PartCounts(2, 1, 1)
    gold = [ClauseSet(EXAMPLE_SPANS)]
    assert score(score_clauses(gold, gold)).f == 1


def test_clauses_alignment():
    with pytest.raises(AlignmentError):
        score_clauses([ClauseSet()], [])


def test_merge():
    assert merge(PartCounts(4, 1, 1), PartCounts()) == PartCounts(4, 1, 1)
    assert merge(PartCounts(2, 3, 1), PartCounts(1, 1, 1)) == PartCounts(3, 4, 2)
    assert merge() == PartCounts()


def test_part_counts_invariants():
    with pytest.raises(ValueError):
        PartCounts(1, 1, 2)
    with pytest.raises(ValueError):
        PartCounts(-1, 0, 0)


def test_report_text():
    s, text = report(PartCounts(4, 1, 1))
    assert text == "precision: 100.00%; recall: 25.00%; F1: 40.00"
    assert s.recall == 0.25
    _, text = report(PartCounts())
    assert text == "precision: 0.00%; recall: 0.00%; F1: 0.00"


def test_report_beta_label():
    _, text = report(PartCounts(4, 2, 1), beta=0.5)
    assert text.endswith("F0.5: 41.67")


def test_round_half_up():
    assert str(round_half_up(Fraction(1, 8) * 100)) == "12.50"
    assert str(round_half_up(Fraction(12345, 1000))) == "12.35"  # half-even would give 12.34
    assert str(round_half_up(Fraction(-1, 3))) == "-0.33"


def test_machine_line():
    assert machine_line(3, PartCounts(4, 1, 1)) == (
        "part=3 gold=4 pred=1 correct=1 p=1.0000 r=0.2500 f=0.4000")


def test_score_part_accepts_both_encodings(example_brackets, example_starts, example_ends):
    assert score_part(1, [example_brackets], [example_starts]) == PartCounts(4, 4, 4)
    assert score_part(2, [example_ends], [example_brackets]) == PartCounts(3, 3, 3)
    assert score_part(3, [example_brackets], [example_brackets]) == PartCounts(4, 4, 4)
    with pytest.raises(ValueError):
        score_part(4, [], [])


def test_check_alignment():
    check_alignment([["a", "b"]], [["a", "b"]])
    with pytest.raises(AlignmentError) as err:
        check_alignment([["a"], ["a", "b"]], [["a"], ["a", "c"]])
    assert err.value.sentence == 1


def test_reordering_invariance():
    rng = random.Random(3)
    gold = [ClauseSet([(0, 3), (1, 2)]), ClauseSet([(0, 0)]), ClauseSet([(1, 4)])]
    pred = [ClauseSet([(1, 2)]), ClauseSet([(0, 0), (0, 0)]), ClauseSet()]
    order = list(range(3))
    rng.shuffle(order)
    assert score_clauses(gold, pred) == score_clauses([gold[i] for i in order], [pred[i] for i in order])


def test_table_rows_consistent_up_to_input_rounding():
    """Table P/R values are rounded, so F is only pinned to an interval.

    F grows with both P and R, so the reachable range comes from the interval
    corners.  Two rows fall outside their range by far more than rounding
    allows; they are listed here so that any change is noticed.
    """
    from result_tables import RESULT_TABLES

    half = Fraction(1, 200)
    outside = []
    for name, rows in RESULT_TABLES.items():
        for i, (p, r, f) in enumerate(rows):
            p, r, f = Fraction(str(p)), Fraction(str(r)), Fraction(str(f))
            lo = 100 * f_measure((p - half) / 100, (r - half) / 100)
            hi = 100 * f_measure((p + half) / 100, (r + half) / 100)
            if not lo - half <= f <= hi + half:
                outside.append((name, i))
    assert outside == [("test part 2", 4), ("test part 3", 4)]
