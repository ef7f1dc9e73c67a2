"""Seeded generator of clause-annotated corpora.

Clause sets are generated first, by random top-down nesting, and then
serialized with :func:`clauseid.encoding.spans_to_tags`, so every generated
sentence is balanced and non-crossing by construction.

Each sentence draws from its own stream spawned from the seed
(``numpy.random.SeedSequence``), so sentence ``i`` is the same whatever
the number of sentences requested.
"""
from dataclasses import dataclass

import numpy as np

from .corpus import BRACKETS, DEFAULT_LAYOUT, Corpus, Sentence, Token
from .encoding import ClauseSet, format_bracket_column, parse_clause_column, spans_to_tags

START_TAGS = ("IN", "WDT", "PRP", "TO")
END_TAGS = (".", ",", "NN")
OTHER_TAGS = ("DT", "NN", "VBZ", "JJ", "RB", "NNS", "VBD", "CC")
CHUNK_TYPES = ("NP", "VP", "PP", "ADVP")


@dataclass(frozen=True)
class GeneratorConfig:
    sentences: int = 100
    max_len: int = 20
    max_depth: int = 4
    allow_multi_boundary: bool = True
    clause_density: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.sentences < 1 or self.max_len < 1 or self.max_depth < 1:
            raise ValueError("sentences, max_len and max_depth must be positive")
        if not 0 <= self.clause_density <= 1:
            raise ValueError("clause_density must lie in [0, 1]")


def _fill(rng, lo, hi, depth, config, out):
    """Add random clauses inside tokens lo..hi at nesting level ``depth``."""
    if depth > config.max_depth or lo > hi:
        return
    pos = lo
    while pos <= hi:
        end = int(rng.integers(pos, hi + 1))
        if rng.random() < config.clause_density:
            out.append((pos, end))
            if config.allow_multi_boundary:
                _fill(rng, pos, end, depth + 1, config, out)
            else:
                # children may not share a first or last token with the parent
                _fill(rng, pos + 1, end - 1, depth + 1, config, out)
        pos = end + 1


def generate_clauses(rng, length, config) -> ClauseSet:
    spans = []
    _fill(rng, 0, length - 1, 1, config, spans)
    return ClauseSet(spans)


def _pick(rng, choices):
    return choices[int(rng.integers(len(choices)))]


def _sentence(rng, config) -> Sentence:
    n = int(rng.integers(1, config.max_len + 1))
    clauses = generate_clauses(rng, n, config)
    tags = spans_to_tags(clauses, n)
    tokens = []
    chunk = None
    for i, tag in enumerate(tags):
        if tag.opens and rng.random() < 0.8:
            pos = _pick(rng, START_TAGS)
        elif tag.closes and rng.random() < 0.6:
            pos = _pick(rng, END_TAGS)
        else:
            pos = _pick(rng, OTHER_TAGS)
        if pos in (".", ","):
            chunk = None
            chunk_tag = "O"
        elif chunk is not None and rng.random() < 0.5:
            chunk_tag = f"I-{chunk}"
        else:
            chunk = _pick(rng, CHUNK_TYPES)
            chunk_tag = f"B-{chunk}"
        word = pos if pos in (".", ",") else f"w{int(rng.integers(1000))}"
        tokens.append((word, pos, chunk_tag))
    brackets = format_bracket_column(tags)
    return Sentence(tuple(
        Token(w, p, c, {BRACKETS: b}) for (w, p, c), b in zip(tokens, brackets)
    ))


def generate(config: GeneratorConfig = GeneratorConfig(), **overrides) -> Corpus:
    if overrides:
        config = GeneratorConfig(**{**config.__dict__, **overrides})
    streams = np.random.SeedSequence(config.seed).spawn(config.sentences)
    sentences = [_sentence(np.random.default_rng(s), config) for s in streams]
    return Corpus(tuple(sentences), DEFAULT_LAYOUT)


def clause_sets(corpus: Corpus, role=BRACKETS) -> list:
    """Gold clause sets of a generated (or any bracket-annotated) corpus."""
    return [parse_clause_column(c) for c in corpus.column(role)]
