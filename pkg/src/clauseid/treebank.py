"""Penn Treebank bracketed trees to clause-annotated sentences.

Only constituents whose base label is a clause label count as clauses, and
all of them are written as plain ``S`` brackets.  Empty elements (leaves
tagged ``-NONE-``) are removed before clause extents are computed.
"""
import re
from dataclasses import dataclass
from typing import Optional

from .corpus import BRACKETS, CHUNK, POS, WORD, Corpus, Layout, Sentence, Token
from .encoding import format_bracket_column, spans_to_tags
from .errors import EmptySentenceError, TreeParseError

CLAUSE_LABELS = frozenset({"S", "SBAR", "SBARQ", "SINV", "SQ"})
EMPTY_TAG = "-NONE-"
# POS given to words that appear without a preterminal, as in ``(S Coach them)``
BARE_LEAF_TAG = "XX"
CHUNK_PLACEHOLDER = "O"

INGEST_LAYOUT = Layout((WORD, POS, CHUNK, BRACKETS))

_TOKEN_RE = re.compile(r"\(|\)|[^\s()]+")


@dataclass(frozen=True)
class ParseNode:
    label: str
    children: tuple = ()
    leaf_word: Optional[str] = None

    def __post_init__(self):
        if not self.label:
            raise ValueError("empty node label")
        if self.children and self.leaf_word is not None:
            raise ValueError("node has both children and a word")

    @property
    def is_leaf(self):
        return self.leaf_word is not None

    def leaves(self):
        if self.is_leaf:
            yield self
        else:
            for child in self.children:
                yield from child.leaves()

    def __str__(self):
        if self.is_leaf:
            return f"({self.label} {self.leaf_word})"
        return f"({self.label} {' '.join(map(str, self.children))})"


def base_label(label: str) -> str:
    """Strip function tags and coindices: ``S-NOM-1`` and ``S=2`` become ``S``.

    Labels starting with ``-`` (``-NONE-``, ``-LRB-``) are returned unchanged.
    """
    if label.startswith("-"):
        return label
    return re.split(r"[-=]", label, maxsplit=1)[0]


def parse_trees(source) -> list:
    """Parse every top-level bracketed tree in ``source`` (a str or stream)."""
    text = source if isinstance(source, str) else source.read()
    tokens = [(m.group(), m.start()) for m in _TOKEN_RE.finditer(text)]
    trees = []
    pos = 0
    while pos < len(tokens):
        tok, offset = tokens[pos]
        if tok != "(":
            raise TreeParseError(f"expected '(' but found {tok!r}", offset)
        node, pos = _parse_node(tokens, pos, len(text), top=True)
        trees.append(node)
    return trees


def _parse_node(tokens, pos, end_offset, top=False):
    open_offset = tokens[pos][1]
    pos += 1
    if pos >= len(tokens):
        raise TreeParseError("unbalanced parenthesis", end_offset)
    label = ""
    if tokens[pos][0] not in ("(", ")"):
        label = tokens[pos][0]
        pos += 1
    items = []
    while True:
        if pos >= len(tokens):
            raise TreeParseError("unbalanced parenthesis", end_offset)
        tok, offset = tokens[pos]
        if tok == ")":
            pos += 1
            break
        if tok == "(":
            child, pos = _parse_node(tokens, pos, end_offset)
            items.append(child)
        else:
            items.append(tok)
            pos += 1
    if not label:
        # unlabeled wrapper around a single tree, as in treebank .mrg files
        if top and len(items) == 1 and isinstance(items[0], ParseNode):
            return items[0], pos
        raise TreeParseError("empty label", open_offset)
    if len(items) == 1 and isinstance(items[0], str):
        return ParseNode(label, leaf_word=items[0]), pos
    if not items:
        raise TreeParseError(f"node {label!r} has no children", open_offset)
    children = tuple(
        ParseNode(BARE_LEAF_TAG, leaf_word=i) if isinstance(i, str) else i for i in items
    )
    return ParseNode(label, children), pos


def clause_spans(tree: ParseNode, labels=CLAUSE_LABELS):
    """Return (leaves, spans) with empty elements removed.

    ``leaves`` is the list of surviving leaf nodes; ``spans`` lists the
    (first, last) leaf index of every clause constituent, outermost first.
    """
    leaves = []
    spans = []

    def walk(node):
        if node.is_leaf:
            if node.label != EMPTY_TAG:
                leaves.append(node)
            return
        first = len(leaves)
        slot = len(spans)
        is_clause = base_label(node.label) in labels
        if is_clause:
            spans.append(None)
        for child in node.children:
            walk(child)
        if is_clause:
            if len(leaves) > first:
                spans[slot] = (first, len(leaves) - 1)
    walk(tree)
    return leaves, [s for s in spans if s is not None]


def extract_clauses(tree: ParseNode, labels=CLAUSE_LABELS, dedupe=False) -> Sentence:
    """Turn one parse tree into a sentence with word, POS, chunk and bracket columns.

    The POS column holds the treebank tags; the chunk column is filled with
    ``O`` placeholders.
    """
    leaves, spans = clause_spans(tree, labels)
    if not leaves:
        raise EmptySentenceError("tree contains only empty elements")
    if dedupe:
        spans = list(dict.fromkeys(spans))
    tags = format_bracket_column(spans_to_tags(spans, len(leaves)))
    tokens = tuple(
        Token(leaf.leaf_word, leaf.label, CHUNK_PLACEHOLDER, {BRACKETS: tag})
        for leaf, tag in zip(leaves, tags)
    )
    return Sentence(tokens)


def ingest(source, labels=CLAUSE_LABELS, dedupe=False) -> Corpus:
    """Convert every tree in ``source`` to a sentence of a task-format corpus."""
    sentences = [extract_clauses(t, labels, dedupe) for t in parse_trees(source)]
    return Corpus(tuple(sentences), INGEST_LAYOUT)
