"""Brute-force reference computations, deliberately independent of the package."""
import random


def crossing(a, b):
    """True when two inclusive spans overlap without one containing the other."""
    (a0, a1), (b0, b1) = a, b
    overlap = a0 <= b1 and b0 <= a1
    a_in_b = b0 <= a0 and a1 <= b1
    b_in_a = a0 <= b0 and b1 <= a1
    return overlap and not a_in_b and not b_in_a


def non_crossing(spans):
    spans = list(spans)
    return all(not crossing(x, y) for i, x in enumerate(spans) for y in spans[i + 1:])


def naive_clause_counts(gold, pred):
    """Quadratic matching: each prediction claims one unused equal gold span."""
    gold = [tuple(s) for s in gold]
    used = [False] * len(gold)
    correct = 0
    for p in pred:
        for j, g in enumerate(gold):
            if not used[j] and g == tuple(p):
                used[j] = True
                correct += 1
                break
    return len(gold), len(list(pred)), correct


def naive_flag_counts(gold, pred):
    g = sum(1 for x in gold if x)
    p = sum(1 for x in pred if x)
    c = sum(1 for i in range(len(gold)) if gold[i] and pred[i])
    return g, p, c


def render_brackets(spans, n):
    """Write bracket tag strings token by token by string concatenation."""
    tags = []
    for i in range(n):
        opens = "".join("(S" for (b, e) in spans if b == i)
        closes = "".join("S)" for (b, e) in spans if e == i)
        tags.append(opens + "*" + closes)
    return tags


def starts_of(spans, n):
    return [any(b == i for b, _ in spans) for i in range(n)]


def ends_of(spans, n):
    return [any(e == i for _, e in spans) for i in range(n)]


def perturb(spans, n, rng: random.Random):
    """Randomly drop, shift and add spans, keeping the result non-crossing."""
    candidates = []
    for b, e in spans:
        r = rng.random()
        if r < 0.6:
            candidates.append((b, e))
        elif r < 0.85:
            b2 = min(max(0, b + rng.choice((-1, 0, 1))), n - 1)
            e2 = min(max(b2, e + rng.choice((-1, 0, 1))), n - 1)
            candidates.append((b2, e2))
    for _ in range(rng.randrange(3)):
        b = rng.randrange(n)
        candidates.append((b, rng.randrange(b, n)))
    kept = []
    for c in candidates:
        if all(not crossing(c, k) for k in kept):
            kept.append(c)
    return kept


def naive_spans(tag_strings):
    """Clause spans from bracket strings by scanning for each open's partner."""
    events = []
    for i, text in enumerate(tag_strings):
        events += [("(", i)] * text.count("(S") + [(")", i)] * text.count("S)")
    spans = []
    for k, (kind, begin) in enumerate(events):
        if kind != "(":
            continue
        depth = 0
        for kind2, end in events[k:]:
            depth += 1 if kind2 == "(" else -1
            if depth == 0:
                spans.append((begin, end))
                break
    return spans
