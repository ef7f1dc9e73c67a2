"""Build complete clauses from start and end flags.

Binary flags lose information whenever a token opens or closes more than
one clause, so no rule can recover every clause set.  The policies here
only differ in what they do with starts that never found an end.
"""
from dataclasses import dataclass
from typing import Sequence

from .encoding import ClauseSet, ClauseSpan
from .errors import InputError

STRICT = "strict"
CLOSE_AT_LAST_FLAG = "close-at-last-flag"
CLOSE_AT_SENTENCE_END = "close-at-sentence-end"
POLICIES = (STRICT, CLOSE_AT_LAST_FLAG, CLOSE_AT_SENTENCE_END)


@dataclass(frozen=True)
class AssemblyPolicy:
    name: str = STRICT
    # wrap the sentence in one clause when the output has none covering it
    add_sentence_clause: bool = False

    def __post_init__(self):
        if self.name not in POLICIES:
            raise ValueError(f"unknown assembly policy {self.name!r}; choose from {POLICIES}")


def assemble(starts: Sequence[bool], ends: Sequence[bool], policy=AssemblyPolicy()) -> ClauseSet:
    n = len(starts)
    if n != len(ends):
        raise InputError(f"start column has {n} tokens, end column {len(ends)}")
    if n == 0:
        raise InputError("empty sentence")
    if isinstance(policy, str):
        policy = AssemblyPolicy(policy)

    stack = []
    spans = []
    for i in range(n):
        if starts[i]:
            stack.append(i)
        if ends[i] and stack:
            spans.append(ClauseSpan(stack.pop(), i))

    if policy.name == CLOSE_AT_SENTENCE_END:
        last = n - 1
    elif policy.name == CLOSE_AT_LAST_FLAG:
        flagged = [i for i in range(n) if ends[i]]
        last = flagged[-1] if flagged else None
    else:
        last = None
    if last is not None:
        while stack:
            begin = stack.pop()
            # a start after the last end flag cannot be closed there
            if begin <= last:
                spans.append(ClauseSpan(begin, last))

    whole = ClauseSpan(0, n - 1)
    if policy.add_sentence_clause and spans and whole not in spans:
        spans.append(whole)
    return ClauseSet(spans)
