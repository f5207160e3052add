"""Pure-Python brute force used as ground truth by the tests.

Nothing here touches numpy or the package's enumeration code.
"""
import itertools
from collections import Counter


def dist(a, b):
    assert len(a) == len(b)
    return sum(x != y for x, y in zip(a, b))


def windows(seq, l):
    return [seq[p:p + l] for p in range(len(seq) - l + 1)]


def majority(strings):
    out = []
    for col in zip(*strings):
        counts = Counter(col)
        best = max(counts.values())
        out.append(min(ch for ch in counts if counts[ch] == best))
    return "".join(out)


def consensus_cost(strings):
    v = majority(strings)
    return sum(dist(v, s) for s in strings)


def tuple_optimum(seqs, l):
    """(cost, positions) minimising consensus cost; lexicographic tie-break."""
    best = None
    for pos in itertools.product(*(range(len(s) - l + 1) for s in seqs)):
        cost = consensus_cost([s[p:p + l] for s, p in zip(seqs, pos)])
        if best is None or cost < best[0]:
            best = (cost, pos)
    return best


def min_window_distance(v, seq):
    return min(dist(v, w) for w in windows(seq, len(v)))


def pattern_cost(v, seqs):
    return sum(min_window_distance(v, s) for s in seqs)


def pattern_optimum(seqs, l, alphabet):
    best = None
    for chars in itertools.product(sorted(alphabet), repeat=l):
        v = "".join(chars)
        c = pattern_cost(v, seqs)
        if best is None or c < best[0]:
            best = (c, v)
    return best


def sum_of_pairs(strings):
    return sum(dist(a, b) for a, b in itertools.combinations(strings, 2))


def ptas_brute(seqs, l, r):
    """Minimum realigned cost over every distinct-sequence r-sample."""
    best = None
    for combo in itertools.combinations(range(len(seqs)), r):
        for pos in itertools.product(*(range(len(seqs[i]) - l + 1) for i in combo)):
            v = majority([seqs[i][p:p + l] for i, p in zip(combo, pos)])
            c = pattern_cost(v, seqs)
            if best is None or c < best:
                best = c
    return best
