"""Biclique-plus-stable-set structure and the vertex decomposition of
connected recognized graphs into parts of that shape.

A graph is K+S when its vertex set splits into a biclique and a stable set,
or degenerately when it has an isolated vertex.  A connected recognized
digraph is *type A* when its underlying graph is K+S.  ``decompose_type_a``
peels a dominating biclique together with the vertices whose whole
neighborhood lies inside it, then recurses on the remaining components;
every peeled part is connected and type A.
"""

from __future__ import annotations

from dataclasses import dataclass

from .axioms import recognize
from .bicliques import Biclique, find_dominating_biclique, maximal_bicliques
from .digraph import (
    Digraph,
    UGraph,
    induced_subdigraph,
    iter_bits,
    underlying,
    weak_components,
)
from .errors import Disconnected, NotQbmg


@dataclass(frozen=True)
class KosPartition:
    """Split into a biclique ``k`` and a stable set ``s``.

    ``degenerate`` is set exactly when the graph has an isolated vertex (in
    which case a k/s split may or may not also exist; ``k`` is None when no
    split was found).
    """

    k: Biclique | None
    s: frozenset[int]
    degenerate: bool


@dataclass(frozen=True)
class Decomposition:
    parts: tuple[frozenset[int], ...]


def _stable(g: UGraph, vertices: frozenset[int]) -> bool:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return all(not (g.adj_masks[v] & mask) for v in vertices)


def kos_partition(g: UGraph) -> KosPartition | None:
    """A biclique/stable-set split if one exists; degenerate flag for isolated
    vertices.  None when the graph is neither."""
    degenerate = any(g.adj_masks[v] == 0 for v in range(g.n))
    # a split using any biclique extends to one using a maximal biclique
    # (the stable remainder only shrinks), so maximal candidates suffice
    for b in maximal_bicliques(g):
        rest = frozenset(range(g.n)) - b.vertices()
        if _stable(g, rest):
            return KosPartition(b, rest, degenerate)
    if degenerate:
        return KosPartition(None, frozenset(), True)
    return None


def is_type_a(g: Digraph) -> bool:
    """Connected, passes recognition, and underlying graph is K+S."""
    if len(weak_components(g)) != 1:
        return False
    if not recognize(g).is_qbmg:
        return False
    return kos_partition(underlying(g)) is not None


def decompose_type_a(g: Digraph) -> Decomposition:
    """Vertex decomposition of a connected recognized digraph into parts whose
    induced sub-digraphs are connected and type A.

    Each step takes a dominating biclique of the current underlying graph,
    absorbs the vertices whose neighborhoods are contained in it, emits that
    set as a part, and recurses per connected component of the remainder.
    The decomposition is canonical for this package's deterministic biclique
    preference but not unique in general.
    """
    if not recognize(g).is_qbmg:
        raise NotQbmg("decomposition requires a recognized graph")
    if len(weak_components(g)) != 1:
        raise Disconnected("decomposition requires a connected graph")

    parts: list[frozenset[int]] = []

    def peel(vertex_ids: tuple[int, ...]) -> None:
        sub, old = induced_subdigraph(g, vertex_ids)
        if is_type_a(sub):
            parts.append(frozenset(vertex_ids))
            return
        und = underlying(sub)
        delta = find_dominating_biclique(und)
        if delta is None:  # cannot happen for recognized connected graphs
            raise AssertionError("connected recognized graph without dominating biclique")
        core = delta.vertices()
        absorbed = {
            v
            for v in range(sub.n)
            if v not in core and all(w in core for w in iter_bits(sub.adj_masks[v]))
        }
        sigma = core | absorbed
        assert _stable(und, frozenset(absorbed)), "absorbed set must be stable"
        first = frozenset(old[v] for v in sigma)
        part_graph, _ = induced_subdigraph(g, first)
        assert is_type_a(part_graph), "peeled part must be connected type A"
        parts.append(first)
        rest = [v for v in range(sub.n) if v not in sigma]
        if not rest:
            return
        rest_graph, rest_old = induced_subdigraph(sub, rest)
        assert all(
            rest_graph.adj_masks[v] for v in range(rest_graph.n)
        ), "remainder must have no isolated vertex"
        for comp in underlying(rest_graph).components():
            peel(tuple(old[rest_old[v]] for v in sorted(comp)))

    peel(tuple(range(g.n)))
    return Decomposition(tuple(parts))
