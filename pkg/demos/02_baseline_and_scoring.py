"""
Scoring the whole-sentence baseline
===================================

The baseline puts exactly one clause around every sentence.  Its part 3
precision is the share of sentences whose gold annotation contains that
clause, and its recall is low because embedded clauses are never found.
"""

from clauseid.baseline import baseline_columns
from clauseid.scoring import machine_line, report, score_part
from clauseid.synthgen import GeneratorConfig, generate

# A synthetic gold corpus stands in for treebank data here.
config = GeneratorConfig(sentences=2000, max_len=25, max_depth=5, clause_density=0.6, seed=1)
corpus = generate(config)
gold = corpus.column("clause-3")

predicted = baseline_columns(corpus)
for part, role in ((1, "clause-1"), (2, "clause-2"), (3, "clause-3")):
    counts = score_part(part, gold, predicted[role])
    score, text = report(counts)
    print(f"part {part}: {text}")
    print("   ", machine_line(part, counts))

# Every part predicts one item per sentence.
print(len(corpus), "sentences")
