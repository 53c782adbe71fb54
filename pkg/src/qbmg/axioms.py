"""Recognition of two-colored quasi-best-match graphs.

A bipartite two-colored digraph passes recognition when all three of the
following hold:

* (N1) no two non-adjacent vertices u, v admit w, t with edges u->t, v->w, t->w;
* (N2) bi-transitivity: edges u->v, v->w, w->t force the edge u->t;
* (N3) vertices with a common out-neighbor have nested out-neighborhoods.

Violation finders return the lexicographically first witness tuple so reports
are deterministic.  ``is_qbmg_masks`` is a boolean-only fast path over
adjacency bitmasks used by the exhaustive generators; the test suite checks
it against ``recognize`` and against a naive quantifier scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .digraph import Digraph, induced_subdigraph, iter_bits
from .errors import NotQbmg, TooLarge

HEREDITARY_MAX_VERTICES = 10


@dataclass(frozen=True)
class AxiomWitness:
    """A concrete violation: which axiom failed and on which vertices.

    Vertex tuples read (u, t, w, v) for N1, (u, v, w, t) for N2 and
    (u, v, shared_out) for N3; replaying them against the graph confirms
    the violation.
    """

    axiom: str
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class RecognitionReport:
    is_qbmg: bool
    is_bmg: bool
    is_reciprocal: bool
    witness: AxiomWitness | None
    sinks: frozenset[int]
    symmetric_edge_count: int


def find_n1_violation(g: Digraph) -> AxiomWitness | None:
    """First (u, t, w, v) with u, v non-adjacent and edges u->t, v->w, t->w."""
    out, inn, adj = g.out_masks, g.in_masks, g.adj_masks
    for u in range(g.n):
        ou = out[u]
        if not ou:
            continue
        blocked = adj[u] | (1 << u)
        for t in iter_bits(ou):
            for w in iter_bits(out[t]):
                cand = inn[w] & ~blocked
                if cand:
                    v = (cand & -cand).bit_length() - 1
                    return AxiomWitness("N1", (u, t, w, v))
    return None


def find_n2_violation(g: Digraph) -> AxiomWitness | None:
    """First (u, v, w, t) with edges u->v, v->w, w->t but no edge u->t."""
    out = g.out_masks
    for u in range(g.n):
        ou = out[u]
        if not ou:
            continue
        for v in iter_bits(ou):
            for w in iter_bits(out[v]):
                missing = out[w] & ~ou
                if missing:
                    t = (missing & -missing).bit_length() - 1
                    return AxiomWitness("N2", (u, v, w, t))
    return None


def find_n3_violation(g: Digraph) -> AxiomWitness | None:
    """First (u, v, s) sharing out-neighbor s with incomparable out-neighborhoods."""
    out = g.out_masks
    for u in range(g.n - 1):
        ou = out[u]
        if not ou:
            continue
        for v in range(u + 1, g.n):
            ov = out[v]
            common = ou & ov
            if common and ou & ~ov and ov & ~ou:
                s = (common & -common).bit_length() - 1
                return AxiomWitness("N3", (u, v, s))
    return None


def recognize(g: Digraph) -> RecognitionReport:
    """Full recognition report; witness is the first violation in N1, N2, N3 order."""
    witness = find_n1_violation(g)
    if witness is None:
        witness = find_n2_violation(g)
    if witness is None:
        witness = find_n3_violation(g)
    sinks = frozenset(v for v in range(g.n) if g.out_masks[v] == 0)
    sym = len(g.symmetric_pairs)
    is_qbmg = witness is None
    is_bmg = is_qbmg and not sinks
    is_reciprocal = is_bmg and 2 * sym == len(g.edges)
    return RecognitionReport(is_qbmg, is_bmg, is_reciprocal, witness, sinks, sym)


def is_qbmg_masks(n: int, out: Sequence[int], inn: Sequence[int]) -> bool:
    """Boolean-only recognition over out/in adjacency bitmasks."""
    # (N3): cheapest reject on dense graphs
    for u in range(n - 1):
        ou = out[u]
        if not ou:
            continue
        for v in range(u + 1, n):
            ov = out[v]
            if ou & ov and ou & ~ov and ov & ~ou:
                return False
    # (N1)
    for t in range(n):
        it = inn[t]
        if not it:
            continue
        ot = out[t]
        while ot:
            lw = ot & -ot
            ot ^= lw
            iw = inn[lw.bit_length() - 1]
            m = it
            while m:
                lu = m & -m
                m ^= lu
                u = lu.bit_length() - 1
                if iw & ~(out[u] | inn[u] | lu):
                    return False
    # (N2)
    for u in range(n):
        ou = out[u]
        if not ou:
            continue
        two_step = 0
        m = ou
        while m:
            low = m & -m
            m ^= low
            two_step |= out[low.bit_length() - 1]
        while two_step:
            low = two_step & -two_step
            two_step ^= low
            if out[low.bit_length() - 1] & ~ou:
                return False
    return True


def is_qbmg(g: Digraph) -> bool:
    return is_qbmg_masks(g.n, g.out_masks, g.in_masks)


def n1_configurations(g: Digraph) -> tuple[tuple[int, int, int, int], ...]:
    """All (x1, x2, x3, y) on distinct vertices with edges x1->x2, x2->x3,
    y->x3 and x1, y adjacent in some direction, in lexicographic order.

    This is the adjacency-requiring pattern, distinct from an N1 violation
    (which requires x1 and y to be independent); see ``find_n1_violation``.
    """
    out, inn, adj = g.out_masks, g.in_masks, g.adj_masks
    found: list[tuple[int, int, int, int]] = []
    for x1 in range(g.n):
        if not out[x1]:
            continue
        for x2 in iter_bits(out[x1]):
            for x3 in iter_bits(out[x2]):
                if x3 == x1:
                    continue
                cand = inn[x3] & adj[x1] & ~(1 << x1) & ~(1 << x2)
                for y in iter_bits(cand):
                    found.append((x1, x2, x3, y))
    return tuple(found)


def is_hereditary_on(g: Digraph) -> frozenset[int] | None:
    """None if every induced sub-digraph passes recognition, else the smallest
    violating vertex subset.  A non-None answer falsifies the implementation,
    not the theory; the result is diagnostic."""
    if not recognize(g).is_qbmg:
        raise NotQbmg("hereditarity check requires a recognized graph")
    if g.n > HEREDITARY_MAX_VERTICES:
        raise TooLarge(f"hereditarity scan supports at most {HEREDITARY_MAX_VERTICES} vertices")
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            sub, _ = induced_subdigraph(g, subset)
            if not is_qbmg_masks(sub.n, sub.out_masks, sub.in_masks):
                return frozenset(subset)
    return None
