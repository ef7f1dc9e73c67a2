"""Clause tag algebra.

Three per-token encodings describe the same clause structure:

* start flags, rendered ``S`` (a clause starts here) or ``X``;
* end flags, rendered ``E`` (a clause ends here) or ``X``;
* bracket tags such as ``(S*``, ``*``, ``*S)S)`` or ``(S*S)``, which carry
  the number of clauses opened and closed at each token.

Bracket tags are lossless: they convert to and from a multiset of
non-crossing token spans (:class:`ClauseSet`).  Boundary flags are the
lossy projection used for the start and end subtasks.
"""
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import BalanceError, NestingError, TagSyntaxError

OPEN = "(S"
CLOSE = "S)"
STAR = "*"
NO_MARK = "X"
MARKS = {1: "S", 2: "E"}

_TAG_RE = re.compile(r"((?:\(S)*)\*((?:S\))*)")


@dataclass(frozen=True)
class BracketTag:
    opens: int = 0
    closes: int = 0

    def __post_init__(self):
        if self.opens < 0 or self.closes < 0:
            raise ValueError(f"negative bracket counts: {self.opens}, {self.closes}")

    def __str__(self):
        return format_bracket_tag(self)


class ClauseSpan(NamedTuple):
    """Inclusive token range of one clause."""

    begin: int
    end: int


def _span_order(span):
    # outermost first among spans sharing a start token
    return (span.begin, -span.end)


class ClauseSet:
    """Multiset of non-crossing clause spans for one sentence.

    Spans are kept in canonical order (by start, wider spans first), so two
    clause sets are equal exactly when they are equal as multisets.
    """

    __slots__ = ("_spans",)

    def __init__(self, spans: Iterable = ()):
        spans = sorted((ClauseSpan(*s) for s in spans), key=_span_order)
        for span in spans:
            if span.begin < 0 or span.end < span.begin:
                raise ValueError(f"invalid span {tuple(span)}")
        _check_nesting(spans)
        self._spans = tuple(spans)

    def __iter__(self):
        return iter(self._spans)

    def __len__(self):
        return len(self._spans)

    def __contains__(self, span):
        return tuple(span) in self._spans

    def __eq__(self, other):
        if isinstance(other, ClauseSet):
            return self._spans == other._spans
        return NotImplemented

    def __hash__(self):
        return hash(self._spans)

    def __repr__(self):
        return f"ClauseSet({[tuple(s) for s in self._spans]})"

    @property
    def spans(self):
        return self._spans

    def counter(self):
        return Counter(self._spans)

    def depth(self):
        """Maximum nesting depth (0 for an empty set)."""
        best = 0
        stack = []
        for span in self._spans:
            while stack and stack[-1].end < span.begin:
                stack.pop()
            stack.append(span)
            best = max(best, len(stack))
        return best


def _check_nesting(spans):
    """Raise NestingError unless spans (in canonical order) are non-crossing."""
    stack = []
    for span in spans:
        while stack and stack[-1].end < span.begin:
            stack.pop()
        if stack and stack[-1].end < span.end:
            raise NestingError(stack[-1], span)
        stack.append(span)


def parse_bracket_tag(text: str) -> BracketTag:
    m = _TAG_RE.fullmatch(text)
    if m is None:
        raise TagSyntaxError(text)
    return BracketTag(len(m.group(1)) // 2, len(m.group(2)) // 2)


def format_bracket_tag(tag: BracketTag) -> str:
    return OPEN * tag.opens + STAR + CLOSE * tag.closes


def parse_boundary_tag(text: str, part: int) -> bool:
    """Read an ``S``/``X`` (part 1) or ``E``/``X`` (part 2) flag."""
    mark = MARKS[part]
    if text == mark:
        return True
    if text == NO_MARK:
        return False
    raise TagSyntaxError(text, expected=f"part {part} boundary tag")


def format_boundary_tag(flag: bool, part: int) -> str:
    return MARKS[part] if flag else NO_MARK


def parse_bracket_column(texts: Iterable[str]) -> list:
    return [parse_bracket_tag(t) for t in texts]


def format_bracket_column(tags: Iterable[BracketTag]) -> list:
    return [format_bracket_tag(t) for t in tags]


def parse_boundary_column(texts: Iterable[str], part: int) -> list:
    return [parse_boundary_tag(t, part) for t in texts]


def format_boundary_column(flags: Iterable[bool], part: int) -> list:
    return [format_boundary_tag(f, part) for f in flags]


@dataclass(frozen=True)
class BalanceReport:
    """Outcome of :func:`validate`.

    ``position`` is the token index of the first violation, or the sentence
    length when clauses are left open at the end.  It is None for valid input.
    """

    valid: bool
    position: int = None
    message: str = "balanced"

    def __bool__(self):
        return self.valid


def validate(tags: Sequence[BracketTag]) -> BalanceReport:
    depth = 0
    for i, tag in enumerate(tags):
        depth += tag.opens
        depth -= tag.closes
        if depth < 0:
            return BalanceReport(False, i, f"token {i}: close without matching open")
    if depth > 0:
        n = len(tags)
        return BalanceReport(False, n, f"end of sentence: {depth} unclosed clause(s)")
    return BalanceReport(True)


def spans_from_tags(tags: Sequence[BracketTag]) -> ClauseSet:
    """Match opens and closes last-in first-out into clause spans."""
    report = validate(tags)
    if not report:
        raise BalanceError(report)
    stack = []
    spans = []
    for i, tag in enumerate(tags):
        stack.extend([i] * tag.opens)
        for _ in range(tag.closes):
            spans.append(ClauseSpan(stack.pop(), i))
    return ClauseSet(spans)


def spans_to_tags(spans, length: int) -> list:
    if not isinstance(spans, ClauseSet):
        spans = ClauseSet(spans)
    opens = [0] * length
    closes = [0] * length
    for begin, end in spans:
        if end >= length:
            raise ValueError(f"span {(begin, end)} exceeds sentence length {length}")
        opens[begin] += 1
        closes[end] += 1
    return [BracketTag(o, c) for o, c in zip(opens, closes)]


def parse_clause_column(texts: Iterable[str]) -> ClauseSet:
    """Clause set of one sentence's bracket tag strings."""
    return spans_from_tags(parse_bracket_column(texts))


def derive_boundaries(tags: Sequence[BracketTag]):
    """Project bracket tags onto (start flags, end flags)."""
    starts = [t.opens >= 1 for t in tags]
    ends = [t.closes >= 1 for t in tags]
    return starts, ends


def looks_like_brackets(texts: Iterable[str]) -> bool:
    """True when a column uses bracket tags rather than boundary flags.

    The two alphabets are disjoint: every bracket tag contains ``*``.
    """
    return any(STAR in t for t in texts)
