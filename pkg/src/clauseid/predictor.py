"""Reference start/end flag predictor.

A backed-off count model over POS tags: the (previous, current, next) tag
trigram, then the current tag alone, then a global prior.  It exists so the
start → end → clause pipeline can be run end to end; it makes no attempt
to be competitive.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from .corpus import BRACKETS, POS, Corpus
from .encoding import derive_boundaries, parse_bracket_column
from .errors import FormatError, LayoutError

TRIGRAM = "trigram"
UNIGRAM = "unigram"
PRIOR = "prior"
LEVELS = (TRIGRAM, UNIGRAM, PRIOR)
TARGETS = ("starts", "ends")
OUTSIDE = "<out>"
KEY_SEP = "|"


@dataclass
class ContextModel:
    # level -> {key tuple: [mark count, no-mark count]}
    tables: dict = field(default_factory=lambda: {level: {} for level in LEVELS})
    smoothing: float = 1

    def __eq__(self, other):
        if not isinstance(other, ContextModel):
            return NotImplemented
        return self.smoothing == other.smoothing and _freeze(self.tables) == _freeze(other.tables)

    def add(self, level, key, mark):
        counts = self.tables[level].setdefault(key, [0, 0])
        counts[0 if mark else 1] += 1

    def mark_probability(self, keys):
        """Smoothed Mark probability at the first level with observations."""
        k = Fraction(self.smoothing)
        for level, key in zip(LEVELS, keys):
            mark, nomark = self.tables[level].get(key, (0, 0))
            if mark + nomark > 0 or level == PRIOR:
                return (mark + k) / (mark + nomark + 2 * k)


def _freeze(tables):
    return {level: {key: tuple(c) for key, c in t.items()} for level, t in tables.items()}


def contexts(tags):
    """Backoff keys (trigram, unigram, prior) for every token position."""
    padded = [OUTSIDE] + list(tags) + [OUTSIDE]
    return [
        ((padded[i], padded[i + 1], padded[i + 2]), (padded[i + 1],), ())
        for i in range(len(tags))
    ]


def _targets(column, target):
    starts, ends = derive_boundaries(parse_bracket_column(column))
    return starts if target == "starts" else ends


def train(corpus: Corpus, target: str, clause_role=BRACKETS, smoothing=1) -> ContextModel:
    if target not in TARGETS:
        raise ValueError(f"target must be one of {TARGETS}")
    for role in (POS, clause_role):
        if role not in corpus.layout:
            raise LayoutError(f"training needs a {role} column")
    model = ContextModel(smoothing=smoothing)
    for sentence in corpus:
        flags = _targets(sentence.column(clause_role), target)
        for keys, mark in zip(contexts(sentence.column(POS)), flags):
            for level, key in zip(LEVELS, keys):
                model.add(level, key, mark)
    return model


def predict(model: ContextModel, sentence) -> list:
    """Flag column for one sentence; ties at probability 0.5 give no mark."""
    return [model.mark_probability(keys) > Fraction(1, 2) for keys in contexts(sentence.column(POS))]


def predict_corpus(model: ContextModel, corpus: Corpus) -> list:
    if POS not in corpus.layout:
        raise LayoutError("prediction needs a pos column")
    return [predict(model, s) for s in corpus]


def save_model(model: ContextModel) -> str:
    """Tab-separated ``level key marks nomarks`` lines in a fixed order."""
    lines = []
    for level in LEVELS:
        for key in sorted(model.tables[level]):
            mark, nomark = model.tables[level][key]
            lines.append(f"{level}\t{KEY_SEP.join(key)}\t{mark}\t{nomark}")
    return "\n".join(lines) + "\n" if lines else ""


def load_model(source, smoothing=1) -> ContextModel:
    """Inverse of :func:`save_model`; ``source`` is a str or iterable of lines."""
    lines = source.splitlines() if isinstance(source, str) else source
    model = ContextModel(smoothing=smoothing)
    for lineno, line in enumerate(lines, 1):
        line = line.rstrip("\n")
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != 4 or fields[0] not in LEVELS:
            raise FormatError(f"bad model line {line!r}", lineno)
        level, key, mark, nomark = fields
        key = tuple(key.split(KEY_SEP)) if key else ()
        if len(key) != {TRIGRAM: 3, UNIGRAM: 1, PRIOR: 0}[level]:
            raise FormatError(f"bad {level} key {fields[1]!r}", lineno)
        try:
            model.tables[level][key] = [int(mark), int(nomark)]
        except ValueError:
            raise FormatError(f"bad counts in {line!r}", lineno) from None
    return model
