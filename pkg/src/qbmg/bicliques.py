"""Bicliques, dominating sets and dominating-biclique search.

A biclique here always has both sides nonempty; the left side is the color-0
side (edges force each side monochromatic in a bipartite host).  Searches are
exact: maximal bicliques come from the closure correspondence between subsets
of one color class and their common neighborhoods.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .digraph import UGraph, iter_bits
from .errors import Disconnected, TooLarge

BICLIQUE_MAX_SIDE = 20


@dataclass(frozen=True)
class Biclique:
    left: frozenset[int]
    right: frozenset[int]

    def vertices(self) -> frozenset[int]:
        return self.left | self.right

    def sort_key(self) -> tuple:
        return (-(len(self.left) + len(self.right)), tuple(sorted(self.left)), tuple(sorted(self.right)))


def is_dominating_set(g: UGraph, vertices: Iterable[int]) -> bool:
    """True iff every vertex outside the set has a neighbor inside it."""
    dmask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        dmask |= 1 << v
    for v in range(g.n):
        if dmask >> v & 1:
            continue
        if not g.adj_masks[v] & dmask:
            return False
    return True


def maximal_bicliques(g: UGraph) -> tuple[Biclique, ...]:
    """All inclusion-maximal bicliques with both sides nonempty.

    Ordered by decreasing vertex count, then lexicographically by sides.
    """
    left_class = [v for v in range(g.n) if g.colors[v] == 0]
    right_class = [v for v in range(g.n) if g.colors[v] == 1]
    if not g.edges:
        return ()
    # enumerate over the smaller side; the closure test makes each maximal
    # biclique appear exactly once
    base = left_class if len(left_class) <= len(right_class) else right_class
    if len(base) > BICLIQUE_MAX_SIDE:
        raise TooLarge("biclique enumeration supports color classes up to "
                       f"{BICLIQUE_MAX_SIDE} vertices")
    adj = g.adj_masks
    full = (1 << g.n) - 1
    found: set[tuple[int, int]] = set()
    m = len(base)
    for sub in range(1, 1 << m):
        tmask = 0
        common = full
        for i in iter_bits(sub):
            v = base[i]
            tmask |= 1 << v
            common &= adj[v]
        if not common:
            continue
        back = full
        for w in iter_bits(common):
            back &= adj[w]
        if back != tmask:
            continue
        found.add((tmask, common))
    out = []
    for tmask, zmask in found:
        side_a = frozenset(iter_bits(tmask))
        side_b = frozenset(iter_bits(zmask))
        if g.colors[next(iter(side_a))] == 0:
            out.append(Biclique(side_a, side_b))
        else:
            out.append(Biclique(side_b, side_a))
    out.sort(key=Biclique.sort_key)
    return tuple(out)


def find_dominating_biclique(g: UGraph) -> Biclique | None:
    """A biclique whose vertex set dominates the (connected) graph, or None.

    Candidates are the maximal bicliques in decreasing-size order; any
    dominating biclique extends to a dominating maximal one, so nothing is
    missed by stopping there.
    """
    if not g.is_connected():
        raise Disconnected("dominating-biclique search requires a connected graph")
    for b in maximal_bicliques(g):
        if is_dominating_set(g, b.vertices()):
            return b
    return None


def all_bicliques(g: UGraph) -> tuple[Biclique, ...]:
    """Every biclique (not only maximal ones), both sides nonempty."""
    left_class = [v for v in range(g.n) if g.colors[v] == 0]
    right_class = [v for v in range(g.n) if g.colors[v] == 1]
    if len(left_class) > BICLIQUE_MAX_SIDE or len(right_class) > BICLIQUE_MAX_SIDE:
        raise TooLarge("biclique enumeration bound exceeded")
    adj = g.adj_masks
    out = []
    m = len(left_class)
    for sub in range(1, 1 << m):
        tset = [left_class[i] for i in iter_bits(sub)]
        common = (1 << g.n) - 1
        for v in tset:
            common &= adj[v]
        if not common:
            continue
        rights = list(iter_bits(common))
        for rsub in range(1, 1 << len(rights)):
            zset = frozenset(rights[i] for i in iter_bits(rsub))
            out.append(Biclique(frozenset(tset), zset))
    out.sort(key=Biclique.sort_key)
    return tuple(out)
