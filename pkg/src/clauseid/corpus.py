"""Annotated corpora and the whitespace-column file format.

One token per line, columns separated by runs of spaces or tabs, sentences
separated by blank lines.  Which column holds what is described by a
:class:`Layout`; clause annotation columns are stored as raw strings and
only interpreted by :mod:`clauseid.encoding`.
"""
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .errors import EmptyCorpusError, FormatError, LayoutError

WORD = "word"
POS = "pos"
CHUNK = "chunk"
STARTS = "clause-1"
ENDS = "clause-2"
BRACKETS = "clause-3"
IGNORE = "ignore"

CLAUSE_ROLES = (STARTS, ENDS, BRACKETS)
ROLES = (WORD, POS, CHUNK) + CLAUSE_ROLES + (IGNORE,)

_CHUNK_RE = re.compile(r"O|[BI]-\S+")


@dataclass(frozen=True)
class Layout:
    """Role of each column, in column order."""

    roles: tuple

    def __post_init__(self):
        roles = tuple(self.roles)
        object.__setattr__(self, "roles", roles)
        for role in roles:
            if role not in ROLES:
                raise LayoutError(f"unknown column role {role!r}")
        if roles.count(WORD) != 1:
            raise LayoutError("layout needs exactly one word column")
        for role in (POS, CHUNK) + CLAUSE_ROLES:
            if roles.count(role) > 1:
                raise LayoutError(f"column role {role!r} used twice")

    @classmethod
    def from_columns(cls, width=None, word=0, pos=None, chunk=None, clauses=None):
        """Build a layout from 0-based column indices.

        Columns not mentioned become ``ignore``; ``width`` pads the layout to
        a known number of columns.
        """
        assigned = {word: WORD}
        for index, role in [(pos, POS), (chunk, CHUNK)] + list((clauses or {}).items()):
            if index is None:
                continue
            if index < 0:
                raise LayoutError(f"negative column index {index}")
            if index in assigned:
                raise LayoutError(f"column {index} assigned to both {assigned[index]} and {role}")
            assigned[index] = role
        n = max(assigned) + 1
        if width is not None:
            n = max(n, width)
        return cls(tuple(assigned.get(i, IGNORE) for i in range(n)))

    @property
    def width(self):
        return len(self.roles)

    def index(self, role) -> Optional[int]:
        try:
            return self.roles.index(role)
        except ValueError:
            return None

    def __contains__(self, role):
        return role in self.roles

    @property
    def clause_roles(self):
        return tuple(r for r in self.roles if r in CLAUSE_ROLES)


DEFAULT_LAYOUT = Layout((WORD, POS, CHUNK, BRACKETS))


@dataclass(frozen=True)
class Token:
    word: str
    pos: Optional[str] = None
    chunk: Optional[str] = None
    annotations: Mapping = field(default_factory=dict)
    extra: tuple = ()

    def __post_init__(self):
        if not self.word or any(c.isspace() for c in self.word):
            raise ValueError(f"invalid word {self.word!r}")
        if self.chunk is not None and not _CHUNK_RE.fullmatch(self.chunk):
            raise ValueError(f"invalid chunk tag {self.chunk!r}")
        object.__setattr__(self, "annotations", dict(self.annotations))
        object.__setattr__(self, "extra", tuple(self.extra))

    def value(self, role, ignore_index=0):
        if role == WORD:
            return self.word
        if role == POS:
            return self.pos
        if role == CHUNK:
            return self.chunk
        if role == IGNORE:
            return self.extra[ignore_index] if ignore_index < len(self.extra) else None
        return self.annotations.get(role)

    def _shape(self):
        return (self.pos is None, self.chunk is None, tuple(sorted(self.annotations)), len(self.extra))


@dataclass(frozen=True)
class Sentence:
    tokens: tuple

    def __post_init__(self):
        tokens = tuple(self.tokens)
        object.__setattr__(self, "tokens", tokens)
        if not tokens:
            raise ValueError("empty sentence")
        shape = tokens[0]._shape()
        if any(t._shape() != shape for t in tokens[1:]):
            raise ValueError("tokens of a sentence carry different columns")

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, i):
        return self.tokens[i]

    @property
    def words(self):
        return [t.word for t in self.tokens]

    def column(self, role):
        return [t.value(role) for t in self.tokens]


@dataclass(frozen=True)
class Corpus:
    sentences: tuple
    layout: Layout = DEFAULT_LAYOUT

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        layout = self.layout
        shape = (
            POS not in layout,
            CHUNK not in layout,
            tuple(sorted(layout.clause_roles)),
            layout.roles.count(IGNORE),
        )
        for i, sentence in enumerate(self.sentences):
            if sentence.tokens[0]._shape() != shape:
                raise LayoutError(f"sentence {i} does not match layout {layout.roles}")

    def __len__(self):
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)

    def column(self, role):
        """Per-sentence lists of one column's values."""
        if role not in self.layout:
            raise LayoutError(f"corpus has no {role} column")
        return [s.column(role) for s in self.sentences]

    def with_annotations(self, columns: Mapping, drop: Iterable = ()):
        """Return a copy with clause columns dropped and new ones appended.

        ``columns`` maps clause roles to per-sentence lists of strings.  The
        new layout keeps the surviving columns in order and appends the new
        ones in mapping order.
        """
        drop = set(drop) | set(columns)
        roles = [r for r in self.layout.roles if r not in drop] + list(columns)
        layout = Layout(tuple(roles))
        if len(columns) and any(len(v) != len(self.sentences) for v in columns.values()):
            raise LayoutError("annotation column does not cover every sentence")
        sentences = []
        for k, sentence in enumerate(self.sentences):
            tokens = []
            for i, tok in enumerate(sentence.tokens):
                ann = {r: v for r, v in tok.annotations.items() if r not in drop}
                for role, values in columns.items():
                    if len(values[k]) != len(sentence):
                        raise LayoutError(f"sentence {k}: annotation length mismatch")
                    ann[role] = values[k][i]
                tokens.append(Token(tok.word, tok.pos, tok.chunk, ann, tok.extra))
            sentences.append(Sentence(tuple(tokens)))
        return Corpus(tuple(sentences), layout)


def _token_from_fields(fields, layout, lineno):
    word = pos = chunk = None
    annotations = {}
    extra = []
    for role, value in zip(layout.roles, fields):
        if role == WORD:
            word = value
        elif role == POS:
            pos = value
        elif role == CHUNK:
            chunk = value
        elif role == IGNORE:
            extra.append(value)
        else:
            annotations[role] = value
    try:
        return Token(word, pos, chunk, annotations, tuple(extra))
    except ValueError as exc:
        raise FormatError(str(exc), lineno) from None


def read_corpus(source: Iterable[str], layout: Layout = DEFAULT_LAYOUT) -> Corpus:
    """Read a corpus from a text stream or any iterable of lines."""
    sentences = []
    tokens = []
    for lineno, line in enumerate(source, 1):
        fields = line.split()
        if not fields:
            if tokens:
                sentences.append(Sentence(tuple(tokens)))
                tokens = []
            continue
        if len(fields) != layout.width:
            raise FormatError(
                f"expected {layout.width} columns, found {len(fields)}", lineno
            )
        tokens.append(_token_from_fields(fields, layout, lineno))
    if tokens:
        sentences.append(Sentence(tuple(tokens)))
    if not sentences:
        raise EmptyCorpusError("corpus contains no sentences")
    return Corpus(tuple(sentences), layout)


def write_corpus(corpus: Corpus, layout: Optional[Layout] = None) -> str:
    """Serialize a corpus; defaults to the corpus's own layout."""
    layout = layout or corpus.layout
    ignore_needed = layout.roles.count(IGNORE)
    for role in layout.roles:
        if role != IGNORE and role not in corpus.layout:
            raise LayoutError(f"layout requests a {role} column the corpus lacks")
    if ignore_needed > corpus.layout.roles.count(IGNORE):
        raise LayoutError("layout requests more ignored columns than the corpus has")
    lines = []
    for sentence in corpus.sentences:
        for tok in sentence.tokens:
            fields = []
            k = 0
            for role in layout.roles:
                fields.append(tok.value(role, k))
                if role == IGNORE:
                    k += 1
            lines.append(" ".join(fields))
        lines.append("")
    return "\n".join(lines) + "\n"


def sniff_width(lines: Sequence[str]) -> int:
    """Number of columns on the first non-blank line (0 when there is none)."""
    for line in lines:
        fields = line.split()
        if fields:
            return len(fields)
    return 0
