"""Induced chordless paths and cycles in undirected graphs.

Detection is backtracking over vertex sequences with chord pruning; exact and
exponential in the worst case, which is fine at the sizes this package
targets (n <= 12).  Returned witnesses are the lexicographically least
sequence (for cycles: least over all rotations and reflections).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .digraph import UGraph


@dataclass(frozen=True)
class InducedPath:
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class InducedCycle:
    vertices: tuple[int, ...]


def find_induced_path_masks(adj: Sequence[int], n: int, k: int) -> tuple[int, ...] | None:
    if k > n:
        return None
    path: list[int] = []

    def extend(last: int, spine: int, used: int) -> bool:
        if len(path) == k:
            return True
        cand = adj[last] & ~used
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            if adj[w] & spine:
                continue
            path.append(w)
            if extend(w, spine | (1 << last), used | low):
                return True
            path.pop()
        return False

    for start in range(n):
        if k == 1:
            return (start,)
        path = [start]
        if extend(start, 0, 1 << start):
            return tuple(path)
    return None


def find_induced_cycle_masks(adj: Sequence[int], n: int, k: int) -> tuple[int, ...] | None:
    if k > n:
        return None
    path: list[int] = []
    result: tuple[int, ...] | None = None

    def extend(first: int, last: int, spine: int, used: int) -> bool:
        nonlocal result
        if len(path) == k - 1:
            cand = adj[last] & adj[first] & ~used
            inner = spine & ~(1 << first)
            while cand:
                low = cand & -cand
                cand ^= low
                w = low.bit_length() - 1
                if adj[w] & inner:
                    continue
                if w < path[1]:
                    continue  # canonical direction: second vertex below closing vertex
                result = (*path, w)
                return True
            return False
        cand = adj[last] & ~used
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            if adj[w] & spine:
                continue
            path.append(w)
            if extend(first, w, spine | (1 << last), used | low):
                return True
            path.pop()
        return False

    for start in range(n):
        path = [start]
        if extend(start, start, 0, 1 << start):
            return result
    return None


def find_induced_path(g: UGraph, k: int) -> InducedPath | None:
    """Some induced path on k vertices, or None; g is Pk-free iff None."""
    if k < 2:
        raise ValueError("induced path needs at least 2 vertices")
    seq = find_induced_path_masks(g.adj_masks, g.n, k)
    return InducedPath(seq) if seq is not None else None


def find_induced_cycle(g: UGraph, k: int) -> InducedCycle | None:
    """Some induced chordless k-cycle, or None; odd k on bipartite input gives None."""
    if k < 3:
        raise ValueError("induced cycle needs at least 3 vertices")
    seq = find_induced_cycle_masks(g.adj_masks, g.n, k)
    return InducedCycle(seq) if seq is not None else None


def is_cograph(g: UGraph) -> bool:
    """True iff the graph has no induced path on four vertices."""
    return find_induced_path(g, 4) is None
