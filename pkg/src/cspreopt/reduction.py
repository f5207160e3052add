"""Closest substring as a minimum-weight clique in a t-partite graph.

Each window is a vertex, each sequence a part, and every cross-part pair is
joined by an edge weighted with the Hamming distance of the two windows. A
clique with one vertex per part then weighs the sum of pairwise distances of
the selected windows. That sum-of-pairs score is a different objective from
the consensus cost; both are reported side by side and never equated.

Since a clique in a graph is an independent set of its complement, the same
search also answers the minimum-weight independent set question on the
complement graph; no separate code path exists for it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import partial
from typing import Iterable, Iterator, Sequence

import numpy as np

from ._enum import check_budget, ordered_map, product_block, split_range
from .model import Instance

Vertex = tuple[int, int]


@dataclass(frozen=True, eq=False)
class TPartiteGraph:
    """Dense weights ``weights[i, p, j, q]`` between window ``p`` of part ``i`` and ``q`` of part ``j``.

    Entries with ``i == j`` are ``-1`` and are not edges.
    """

    weights: np.ndarray

    @property
    def num_parts(self) -> int:
        return self.weights.shape[0]

    @property
    def part_size(self) -> int:
        return self.weights.shape[1]

    @property
    def parts(self) -> list[list[Vertex]]:
        return [[(i, p) for p in range(self.part_size)] for i in range(self.num_parts)]

    @property
    def num_vertices(self) -> int:
        return self.num_parts * self.part_size

    @property
    def num_edges(self) -> int:
        return math.comb(self.num_parts, 2) * self.part_size**2

    def weight(self, u: Vertex, v: Vertex) -> int:
        if u[0] == v[0]:
            raise ValueError(f"vertices {u} and {v} are in the same part")
        return int(self.weights[u[0], u[1], v[0], v[1]])

    def edges(self) -> Iterator[tuple[int, int, int, int, int]]:
        """``(u_part, u_off, v_part, v_off, weight)`` with ``u_part < v_part``, ascending."""
        t, m = self.num_parts, self.part_size
        for i in range(t):
            for p in range(m):
                for j in range(i + 1, t):
                    for q in range(m):
                        yield i, p, j, q, int(self.weights[i, p, j, q])


def build_graph(inst: Instance) -> TPartiteGraph:
    w = inst.windows.reshape(-1, inst.l)
    dist = (w[:, None, :] != w[None, :, :]).sum(axis=-1)
    t, m = inst.t, inst.num_windows
    weights = dist.reshape(t, m, t, m).astype(np.int64)
    for i in range(t):
        weights[i, :, i, :] = -1
    return TPartiteGraph(weights)


def _check_selection(g: TPartiteGraph, selection: Iterable[Vertex]) -> list[int]:
    offsets: dict[int, int] = {}
    for part, off in selection:
        if not 0 <= part < g.num_parts:
            raise ValueError(f"part {part} out of range")
        if part in offsets:
            raise ValueError(f"selection picks part {part} twice")
        if not 0 <= off < g.part_size:
            raise ValueError(f"offset {off} out of range in part {part}")
        offsets[part] = off
    missing = set(range(g.num_parts)) - offsets.keys()
    if missing:
        raise ValueError(f"selection misses parts {sorted(missing)}")
    return [offsets[i] for i in range(g.num_parts)]


def clique_weight(g: TPartiteGraph, selection: Sequence[Vertex]) -> int:
    """Sum of all pairwise edge weights among one vertex per part."""
    offs = _check_selection(g, selection)
    t = g.num_parts
    return sum(
        int(g.weights[i, offs[i], j, offs[j]]) for i in range(t) for j in range(i + 1, t)
    )


def _clique_range(g: TPartiteGraph, bounds: tuple[int, int]) -> tuple[int, int]:
    start, stop = bounds
    t, m = g.num_parts, g.part_size
    idx = product_block((m,) * t, start, stop)
    total = np.zeros(len(idx), dtype=np.int64)
    for i in range(t):
        for j in range(i + 1, t):
            total += g.weights[i, idx[:, i], j, idx[:, j]]
    k = int(np.argmin(total))
    return int(total[k]), start + k


def min_weight_clique(
    g: TPartiteGraph, *, budget: int | None = None, jobs: int = 1
) -> tuple[list[Vertex], int]:
    """Exhaustive minimum; ties go to the lexicographically smallest offsets."""
    t, m = g.num_parts, g.part_size
    total = m**t
    check_budget("clique selections", total, budget)
    parts = ordered_map(partial(_clique_range, g), split_range(total, jobs), jobs)
    weight, flat = min(parts)
    offs = np.unravel_index(flat, (m,) * t)
    return [(i, int(p)) for i, p in enumerate(offs)], weight


def dump_edges(g: TPartiteGraph) -> str:
    return "".join(f"{a} {b} {c} {d} {w}\n" for a, b, c, d, w in g.edges())
