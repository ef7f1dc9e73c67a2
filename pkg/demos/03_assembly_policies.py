"""
From start and end flags to clauses
===================================

Train the reference flag predictor, predict starts and ends, and turn the
flags into clauses with each assembly policy.  The predictor is a plain
POS-trigram count model, only meant to feed the rest of the pipeline.
"""

from clauseid.assembly import POLICIES, AssemblyPolicy, assemble
from clauseid.encoding import parse_clause_column
from clauseid.predictor import predict_corpus, train
from clauseid.scoring import report, score_boundaries, score_clauses, column_as_boundaries
from clauseid.synthgen import generate

train_corpus = generate(sentences=3000, seed=10)
test_corpus = generate(sentences=1000, seed=11)
gold_column = test_corpus.column("clause-3")
gold_clauses = [parse_clause_column(c) for c in gold_column]

starts_model = train(train_corpus, "starts")
ends_model = train(train_corpus, "ends")
pred_starts = predict_corpus(starts_model, test_corpus)
pred_ends = predict_corpus(ends_model, test_corpus)

gold_starts = [column_as_boundaries(c, 1) for c in gold_column]
gold_ends = [column_as_boundaries(c, 2) for c in gold_column]
print("starts:", report(score_boundaries(gold_starts, pred_starts))[1])
print("ends:  ", report(score_boundaries(gold_ends, pred_ends))[1])

# %%
# The policies differ only in how they treat starts that never met an end.
for name in POLICIES:
    for wrap in (False, True):
        policy = AssemblyPolicy(name, add_sentence_clause=wrap)
        pred = [assemble(s, e, policy) for s, e in zip(pred_starts, pred_ends)]
        _, text = report(score_clauses(gold_clauses, pred))
        print(f"{name:22s} wrap={wrap!s:5s} {text}")

# %%
# With gold flags and no token opening or closing twice, strict assembly
# recovers every clause.
exact = generate(sentences=1000, allow_multi_boundary=False, seed=12)
column = exact.column("clause-3")
pred = [assemble(column_as_boundaries(c, 1), column_as_boundaries(c, 2)) for c in column]
print(report(score_clauses([parse_clause_column(c) for c in column], pred))[1])
