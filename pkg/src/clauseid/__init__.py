"""Clause identification toolkit: encodings, assembly, baseline and scoring."""
from .assembly import AssemblyPolicy, assemble
from .baseline import baseline_predict
from .corpus import DEFAULT_LAYOUT, Corpus, Layout, Sentence, Token, read_corpus, write_corpus
from .encoding import (
    BracketTag,
    ClauseSet,
    ClauseSpan,
    derive_boundaries,
    format_bracket_tag,
    parse_bracket_tag,
    spans_from_tags,
    spans_to_tags,
    validate,
)
from .scoring import PartCounts, Score, f_measure, merge, report, score_boundaries, score_clauses
from .synthgen import GeneratorConfig, generate
from .treebank import extract_clauses, parse_trees

__version__ = "0.1.0"
