"""Sequences, windows, consensus and the total-Hamming objective.

An :class:`Instance` is ``t`` equal-length strings plus a pattern length ``l``.
A :class:`Solution` picks one ``l``-window per sequence. Two scores exist for a
choice of windows:

* the consensus cost, measured against the column-majority string of the
  chosen windows (:func:`solution_cost`, :class:`CostedSolution`);
* the pattern cost of a fixed string ``v``, measured against ``v`` after
  picking each sequence's closest window (:func:`realign`, :class:`Alignment`).

For a fixed set of windows the majority string minimises the sum of Hamming
distances, so the consensus cost never exceeds the pattern cost of the same
windows.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Sequence

import numpy as np

from ._enum import BLOCK_ROWS

Pattern = str


def make_alphabet(symbols) -> str:
    """Sorted string of distinct single-character symbols."""
    chars = "".join(symbols)
    if not chars:
        raise ValueError("alphabet must be non-empty")
    if len(set(chars)) != len(chars):
        raise ValueError(f"alphabet has duplicate symbols: {chars!r}")
    for ch in chars:
        if not ch.isprintable() or ch.isspace():
            raise ValueError(f"alphabet symbol {ch!r} is not a printable character")
    return "".join(sorted(chars))


@dataclass(frozen=True)
class Instance:
    """``t`` sequences of common length ``n`` and a pattern length ``l``.

    ``alphabet`` defaults to the sorted set of symbols that occur; passing it
    explicitly pins a larger alphabet (used by the generators).
    """

    sequences: tuple[str, ...]
    l: int
    alphabet: str = field(default="")

    def __post_init__(self):
        seqs = tuple(self.sequences)
        object.__setattr__(self, "sequences", seqs)
        if not seqs:
            raise ValueError("instance needs at least one sequence")
        n = len(seqs[0])
        for i, s in enumerate(seqs):
            if len(s) != n:
                raise ValueError(f"sequence {i} has length {len(s)}, expected {n}")
        if not isinstance(self.l, (int, np.integer)) or self.l < 1:
            raise ValueError(f"pattern length must be a positive integer, got {self.l!r}")
        if self.l > n:
            raise ValueError(f"pattern length {self.l} exceeds sequence length {n}")
        observed = set("".join(seqs))
        alphabet = make_alphabet(self.alphabet or sorted(observed))
        stray = observed - set(alphabet)
        if stray:
            raise ValueError(f"symbols {''.join(sorted(stray))!r} not in alphabet {alphabet!r}")
        object.__setattr__(self, "l", int(self.l))
        object.__setattr__(self, "alphabet", alphabet)

    @property
    def t(self) -> int:
        return len(self.sequences)

    @property
    def n(self) -> int:
        return len(self.sequences[0])

    @property
    def num_windows(self) -> int:
        """Windows per sequence, ``n - l + 1``."""
        return self.n - self.l + 1

    @cached_property
    def codes(self) -> np.ndarray:
        """``(t, n)`` symbol indices into ``alphabet``."""
        lookup = {ch: i for i, ch in enumerate(self.alphabet)}
        return np.array([[lookup[ch] for ch in s] for s in self.sequences], dtype=np.int16)

    @cached_property
    def windows(self) -> np.ndarray:
        """``(t, n - l + 1, l)`` symbol indices of every window."""
        view = np.lib.stride_tricks.sliding_window_view(self.codes, self.l, axis=1)
        return np.ascontiguousarray(view)

    @cached_property
    def onehot(self) -> np.ndarray:
        """``(t * (n - l + 1), l, |alphabet|)`` indicator of each window, flattened by sequence."""
        w = self.windows.reshape(-1, self.l)
        out = np.zeros(w.shape + (len(self.alphabet),), dtype=np.int16)
        np.put_along_axis(out, w[..., None].astype(np.intp), 1, axis=-1)
        return out

    def encode(self, pattern: Pattern) -> np.ndarray:
        lookup = {ch: i for i, ch in enumerate(self.alphabet)}
        try:
            return np.array([lookup[ch] for ch in pattern], dtype=np.int16)
        except KeyError as exc:
            raise ValueError(f"pattern {pattern!r} uses a symbol outside {self.alphabet!r}") from exc

    def decode(self, codes) -> Pattern:
        return "".join(self.alphabet[int(c)] for c in codes)

    def with_sequences(self, extra: Sequence[str]) -> "Instance":
        """This instance with ``extra`` sequences appended."""
        alphabet = make_alphabet(sorted(set(self.alphabet) | set("".join(extra))))
        return Instance(self.sequences + tuple(extra), self.l, alphabet)


class Occurrence(NamedTuple):
    seq_index: int
    position: int


@dataclass(frozen=True)
class Solution:
    """One occurrence per sequence, listed in sequence order."""

    occurrences: tuple[Occurrence, ...]

    def __post_init__(self):
        occs = tuple(Occurrence(int(o[0]), int(o[1])) for o in self.occurrences)
        if not occs:
            raise ValueError("solution has no occurrences")
        for i, occ in enumerate(occs):
            if occ.seq_index != i:
                raise ValueError(f"occurrence {i} refers to sequence {occ.seq_index}")
            if occ.position < 0:
                raise ValueError(f"occurrence {i} has negative position {occ.position}")
        object.__setattr__(self, "occurrences", occs)

    @classmethod
    def from_positions(cls, positions) -> "Solution":
        return cls(tuple(Occurrence(i, int(p)) for i, p in enumerate(positions)))

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(o.position for o in self.occurrences)

    def __len__(self) -> int:
        return len(self.occurrences)

    def extend(self, positions) -> "Solution":
        return Solution.from_positions(self.positions + tuple(positions))


@dataclass(frozen=True)
class CostedSolution:
    """A solution scored against the majority consensus of its own windows."""

    solution: Solution
    consensus: Pattern
    cost: int

    @property
    def pattern(self) -> Pattern:
        return self.consensus


@dataclass(frozen=True)
class Alignment:
    """Closest windows to a fixed pattern, scored against that pattern.

    ``costed`` re-derives the consensus from the chosen windows; its cost is
    never larger than ``cost``.
    """

    pattern: Pattern
    solution: Solution
    cost: int
    costed: CostedSolution


def hamming(a: Pattern, b: Pattern) -> int:
    if len(a) != len(b):
        raise ValueError(f"hamming distance needs equal lengths, got {len(a)} and {len(b)}")
    return sum(x != y for x, y in zip(a, b))


def _check_occurrence(inst: Instance, occ: Occurrence) -> None:
    if not 0 <= occ.seq_index < inst.t:
        raise ValueError(f"sequence index {occ.seq_index} out of range for t={inst.t}")
    if not 0 <= occ.position <= inst.n - inst.l:
        raise ValueError(
            f"position {occ.position} out of range 0..{inst.n - inst.l} in sequence {occ.seq_index}"
        )


def substring_at(inst: Instance, occ: Occurrence) -> Pattern:
    occ = Occurrence(*occ)
    _check_occurrence(inst, occ)
    return inst.sequences[occ.seq_index][occ.position:occ.position + inst.l]


def check_solution(inst: Instance, sol: Solution) -> None:
    if len(sol) != inst.t:
        raise ValueError(f"solution has {len(sol)} occurrences for {inst.t} sequences")
    for occ in sol.occurrences:
        _check_occurrence(inst, occ)


def consensus_of(patterns: Sequence[Pattern], alphabet: str | None = None) -> Pattern:
    """Column-wise majority string; ties go to the smallest symbol."""
    if not patterns:
        raise ValueError("consensus of an empty list")
    width = len(patterns[0])
    if any(len(p) != width for p in patterns):
        raise ValueError("consensus needs patterns of equal length")
    order = {ch: i for i, ch in enumerate(alphabet)} if alphabet else None
    out = []
    for col in zip(*patterns):
        counts = Counter(col)
        key = (lambda ch: (-counts[ch], order[ch])) if order else (lambda ch: (-counts[ch], ch))
        out.append(min(counts, key=key))
    return "".join(out)


def solution_cost(inst: Instance, sol: Solution) -> CostedSolution:
    check_solution(inst, sol)
    subs = [substring_at(inst, occ) for occ in sol.occurrences]
    v = consensus_of(subs, inst.alphabet)
    return CostedSolution(sol, v, sum(hamming(v, y) for y in subs))


def decompose_cost(inst: Instance, sol: Solution, i: int) -> tuple[int, int]:
    """Split the consensus cost into the part without sequence ``i`` and its leaf term.

    The consensus is taken over the full solution, so ``partial + leaf`` is the
    total cost exactly.
    """
    costed = solution_cost(inst, sol)
    if not 0 <= i < inst.t:
        raise ValueError(f"sequence index {i} out of range for t={inst.t}")
    v = costed.consensus
    dists = [hamming(v, substring_at(inst, occ)) for occ in sol.occurrences]
    leaf = dists[i]
    return sum(dists) - leaf, leaf


def best_occurrence(inst: Instance, v: Pattern, seq_index: int) -> tuple[Occurrence, int]:
    """Closest window of sequence ``seq_index`` to ``v``; ties go to the leftmost."""
    if len(v) != inst.l:
        raise ValueError(f"pattern length {len(v)} differs from l={inst.l}")
    if not 0 <= seq_index < inst.t:
        raise ValueError(f"sequence index {seq_index} out of range for t={inst.t}")
    seq = inst.sequences[seq_index]
    best_pos, best = 0, inst.l + 1
    for pos in range(inst.num_windows):
        d = hamming(v, seq[pos:pos + inst.l])
        if d < best:
            best_pos, best = pos, d
    return Occurrence(seq_index, best_pos), best


def realign(inst: Instance, v: Pattern) -> Alignment:
    """Pick every sequence's closest window to ``v``."""
    hits = [best_occurrence(inst, v, i) for i in range(inst.t)]
    sol = Solution(tuple(occ for occ, _ in hits))
    return Alignment(v, sol, sum(d for _, d in hits), solution_cost(inst, sol))


def pattern_cost(inst: Instance, v: Pattern) -> int:
    return realign(inst, v).cost


def pattern_costs(inst: Instance, patterns: np.ndarray) -> np.ndarray:
    """Vectorised pattern cost for a ``(N, l)`` array of symbol indices."""
    patterns = np.asarray(patterns, dtype=np.int16).reshape(-1, inst.l)
    windows = inst.windows
    per_row = max(1, inst.t * inst.num_windows * inst.l)
    step = max(1, (BLOCK_ROWS * 64) // per_row)
    out = np.empty(len(patterns), dtype=np.int64)
    for s in range(0, len(patterns), step):
        chunk = patterns[s:s + step]
        d = (chunk[:, None, None, :] != windows[None]).sum(axis=-1)
        out[s:s + step] = d.min(axis=-1).sum(axis=-1)
    return out


def consensus_counts(counts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Majority symbols and consensus costs from ``(N, l, |alphabet|)`` column counts.

    Every row must sum to the same number of windows per column. A later
    symbol replaces the running majority only on a strictly larger count, so
    ties keep the smallest symbol.
    """
    if len(counts) == 0:
        return np.zeros(counts.shape[:2], dtype=np.intp), np.zeros(0, dtype=np.int64)
    top = counts[..., 0]
    arg = np.zeros(top.shape, dtype=np.intp)
    for a in range(1, counts.shape[-1]):
        col = counts[..., a]
        better = col > top
        arg[better] = a
        top = np.maximum(top, col)
    width = int(counts[0].sum())
    return arg, width - top.sum(axis=-1, dtype=np.int64)


class PatternCostCache:
    """Pattern costs memoised by the integer code of each pattern (base ``|alphabet|``)."""

    TABLE_LIMIT = 1 << 22

    def __init__(self, inst: Instance):
        self.inst = inst
        sigma = len(inst.alphabet)
        self.radix = np.array([sigma**p for p in range(inst.l - 1, -1, -1)], dtype=np.int64)
        self.space = sigma**inst.l
        self.table = np.full(self.space, -1, dtype=np.int64) if self.space <= self.TABLE_LIMIT else None

    def decode(self, codes: np.ndarray) -> np.ndarray:
        sigma = len(self.inst.alphabet)
        return (codes[:, None] // self.radix[None, :]) % sigma

    def lookup(self, patterns: np.ndarray) -> np.ndarray:
        """Costs for a ``(N, l)`` array of symbol indices."""
        if self.space >= 2**62:
            uniq, inverse = np.unique(patterns, axis=0, return_inverse=True)
            return pattern_costs(self.inst, uniq)[inverse.reshape(-1)]
        codes = patterns.astype(np.int64) @ self.radix
        if self.table is None:
            uniq, inverse = np.unique(codes, return_inverse=True)
            return pattern_costs(self.inst, self.decode(uniq))[inverse.reshape(-1)]
        got = self.table[codes]
        if (got < 0).any():
            missing = np.unique(codes[got < 0])
            self.table[missing] = pattern_costs(self.inst, self.decode(missing))
            got = self.table[codes]
        return got
