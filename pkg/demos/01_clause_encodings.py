"""
Three ways to write down clauses
================================

One sentence, three per-token encodings: start flags, end flags and
bracket tags.  Only the bracket tags keep the full nesting.
"""

from clauseid.encoding import (
    derive_boundaries,
    format_boundary_column,
    parse_bracket_column,
    spans_from_tags,
)
from clauseid.treebank import extract_clauses, parse_trees

tree_text = (
    "(S Coach them in (S-NOM handling complaints) "
    "(SBAR-PRP so that (S they can resolve problems immediately)) .)"
)

# Every constituent labelled S, SBAR, SBARQ, SINV or SQ becomes a plain
# clause; the function tags (NOM, PRP) are thrown away.
sentence = extract_clauses(parse_trees(tree_text)[0])
brackets = sentence.column("clause-3")

tags = parse_bracket_column(brackets)
starts, ends = derive_boundaries(tags)
for word, s, e, b in zip(sentence.words, format_boundary_column(starts, 1),
                         format_boundary_column(ends, 2), brackets):
    print(f"{word:12s} {s} {e} {b}")

# Bracket tags decode to a multiset of (first token, last token) spans.
print(list(spans_from_tags(tags)))

# Token 11 closes two clauses at once, so the end-flag column cannot say how
# many clauses end there.  That is why complete clauses are a separate task.
print(tags[11])
