"""Core value types: two-colored bipartite digraphs and their undirected shadows.

Vertices are dense integer ids 0..n-1 with unique display names.  All values
are immutable after construction and all operations are pure functions, so
they are safe to share across concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import DuplicateEdge, LoopEdge, MonochromaticEdge, TooLarge

CANONICAL_MAX_VERTICES = 10


def default_names(n: int) -> tuple[str, ...]:
    """Display names v1..vn."""
    return tuple(f"v{i + 1}" for i in range(n))


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1


def _validate_vertex_table(n: int, colors: tuple[int, ...], names: tuple[str, ...]) -> None:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if len(colors) != n:
        raise ValueError(f"expected {n} colors, got {len(colors)}")
    if len(names) != n:
        raise ValueError(f"expected {n} names, got {len(names)}")
    for c in colors:
        if c not in (0, 1):
            raise ValueError(f"colors must be 0 or 1, got {c!r}")
    if len(set(names)) != n:
        raise ValueError("vertex names must be unique")


@dataclass(frozen=True)
class Digraph:
    """Bipartite two-colored digraph without loops or parallel edges.

    ``edges`` holds ordered pairs; the symmetric pair (u, v) and (v, u) may
    both be present.  Every edge joins vertices of different colors.
    """

    n: int
    colors: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        _validate_vertex_table(self.n, self.colors, self.names)
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise LoopEdge(f"loop at vertex {self.names[u]}")
            if self.colors[u] == self.colors[v]:
                raise MonochromaticEdge(
                    f"edge {self.names[u]} -> {self.names[v]} joins vertices of equal color"
                )

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        m = [0] * self.n
        for u, v in self.edges:
            m[u] |= 1 << v
        return tuple(m)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        m = [0] * self.n
        for u, v in self.edges:
            m[v] |= 1 << u
        return tuple(m)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        return tuple(o | i for o, i in zip(self.out_masks, self.in_masks))

    def out_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.out_masks[v]))

    def in_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.in_masks[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def is_sink(self, v: int) -> bool:
        return self.out_masks[v] == 0

    def is_source(self, v: int) -> bool:
        return self.in_masks[v] == 0

    @cached_property
    def symmetric_pairs(self) -> tuple[tuple[int, int], ...]:
        """Unordered pairs {u, v} (as u < v tuples) with both directions present."""
        return tuple(
            sorted((u, v) for u, v in self.edges if u < v and (v, u) in self.edges)
        )

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def named_edges(self) -> frozenset[tuple[str, str]]:
        return frozenset((self.names[u], self.names[v]) for u, v in self.edges)

    def id_of(self, name: str) -> int:
        return self._name_index[name]

    @cached_property
    def _name_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}


@dataclass(frozen=True)
class UGraph:
    """Undirected bipartite graph; edges are normalized (u, v) pairs with u < v."""

    n: int
    colors: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        _validate_vertex_table(self.n, self.colors, self.names)
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise LoopEdge(f"loop at vertex {self.names[u]}")
            if u > v:
                raise ValueError(f"undirected edge ({u}, {v}) not normalized")
            if self.colors[u] == self.colors[v]:
                raise MonochromaticEdge(
                    f"edge {self.names[u]} -- {self.names[v]} joins vertices of equal color"
                )

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        m = [0] * self.n
        for u, v in self.edges:
            m[u] |= 1 << v
            m[v] |= 1 << u
        return tuple(m)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.adj_masks[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return self.adj_masks[v].bit_count()

    def color_class(self, color: int) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.colors[v] == color)

    def components(self) -> tuple[frozenset[int], ...]:
        """Connected components ordered by smallest member id."""
        seen = 0
        out: list[frozenset[int]] = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = 1 << start
            frontier = [start]
            while frontier:
                v = frontier.pop()
                for w in iter_bits(self.adj_masks[v] & ~comp):
                    comp |= 1 << w
                    frontier.append(w)
            seen |= comp
            out.append(frozenset(iter_bits(comp)))
        return tuple(out)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> tuple["UGraph", tuple[int, ...]]:
        """Induced subgraph re-indexed densely; also returns old ids per new id."""
        old = tuple(sorted(set(vertices)))
        for v in old:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range")
        index = {v: i for i, v in enumerate(old)}
        keep = frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        sub = UGraph(
            n=len(old),
            colors=tuple(self.colors[v] for v in old),
            edges=keep,
            names=tuple(self.names[v] for v in old),
        )
        return sub, old

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


class Neighborhood(NamedTuple):
    out: frozenset[int]
    in_: frozenset[int]
    is_sink: bool
    is_source: bool


def build_digraph(
    n: int,
    colors: Sequence[int],
    edges: Iterable[tuple[int, int]],
    names: Sequence[str] | None = None,
) -> Digraph:
    """Validated digraph constructor; rejects loops, same-color and repeated edges."""
    seen: set[tuple[int, int]] = set()
    for e in edges:
        pair = (e[0], e[1])
        if pair in seen:
            raise DuplicateEdge(f"edge ({pair[0]}, {pair[1]}) given twice")
        seen.add(pair)
    return Digraph(
        n=n,
        colors=tuple(colors),
        edges=frozenset(seen),
        names=tuple(names) if names is not None else default_names(n),
    )


def build_ugraph(
    n: int,
    colors: Sequence[int],
    edges: Iterable[tuple[int, int]],
    names: Sequence[str] | None = None,
) -> UGraph:
    """Validated undirected constructor; pairs are unordered and normalized."""
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if u == v:
            # normalizing would hide the loop; let UGraph report it with its name
            pair = (u, v)
        else:
            pair = (min(u, v), max(u, v))
        if pair in seen:
            raise DuplicateEdge(f"edge {{{pair[0]}, {pair[1]}}} given twice")
        seen.add(pair)
    return UGraph(
        n=n,
        colors=tuple(colors),
        edges=frozenset(seen),
        names=tuple(names) if names is not None else default_names(n),
    )


def neighbors(g: Digraph, v: int) -> Neighborhood:
    """Out-/in-neighbor sets of v together with sink and source flags."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    out = g.out_neighbors(v)
    in_ = g.in_neighbors(v)
    return Neighborhood(out, in_, not out, not in_)


def underlying(g: Digraph) -> UGraph:
    """Forget edge directions; symmetric pairs collapse to one undirected edge."""
    und = frozenset((min(u, v), max(u, v)) for u, v in g.edges)
    return UGraph(n=g.n, colors=g.colors, edges=und, names=g.names)


def induced_subdigraph(g: Digraph, vertices: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Induced sub-digraph re-indexed densely; also returns old ids per new id."""
    old = tuple(sorted(set(vertices)))
    for v in old:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(old)}
    keep = frozenset((index[u], index[v]) for u, v in g.edges if u in index and v in index)
    sub = Digraph(
        n=len(old),
        colors=tuple(g.colors[v] for v in old),
        edges=keep,
        names=tuple(g.names[v] for v in old),
    )
    return sub, old


def weak_components(g: Digraph) -> tuple[frozenset[int], ...]:
    """Connected components of the underlying graph, ordered by smallest member."""
    return underlying(g).components()


def equivalent_vertex_pairs(g: Digraph) -> frozenset[tuple[int, int]]:
    """Unordered pairs of vertices with identical out- and in-neighborhoods."""
    out, inn = g.out_masks, g.in_masks
    return frozenset(
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if out[u] == out[v] and inn[u] == inn[v]
    )


def validate_digraph(g: Digraph) -> None:
    """Re-assert every constructor invariant on an existing value."""
    _validate_vertex_table(g.n, g.colors, g.names)
    for u, v in g.edges:
        if u == v:
            raise LoopEdge(f"loop at vertex {g.names[u]}")
        if g.colors[u] == g.colors[v]:
            raise MonochromaticEdge(f"edge {g.names[u]} -> {g.names[v]} joins equal colors")
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise ValueError(f"edge ({u}, {v}) out of range")


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism certificate for small digraphs.

    ``code`` packs, over the best vertex ordering, the layered adjacency
    border bits (for each position k: bits to/from all earlier positions),
    minimized lexicographically over all orderings.  Two graphs share a code
    iff some edge-preserving vertex bijection maps one onto the other;
    colors are ignored.
    """

    code: bytes


def _swappable_matrix(n: int, rows: Sequence[int], cols: Sequence[int]) -> list[list[bool]]:
    # swap[u][v]: transposing u and v is an automorphism fixing everything else
    swap = [[False] * n for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            mask = ~((1 << u) | (1 << v))
            if (rows[u] ^ rows[v]) & mask:
                continue
            if (cols[u] ^ cols[v]) & mask:
                continue
            if (rows[u] >> v & 1) != (rows[v] >> u & 1):
                continue
            swap[u][v] = swap[v][u] = True
    return swap


def _canonical_levels(n: int, rows: Sequence[int], cols: Sequence[int]) -> list[int]:
    """Lexicographically minimal layered border encoding over all orderings."""
    if n == 0:
        return []
    swap = _swappable_matrix(n, rows, cols)
    best: list[int] | None = None
    prefix: list[int] = []
    placed: list[int] = []
    used = 0

    def rec() -> None:
        nonlocal best, used
        k = len(placed)
        if k == n:
            if best is None or prefix < best:
                best = prefix.copy()
            return
        groups: dict[int, list[int]] = {}
        for v in range(n):
            if used >> v & 1:
                continue
            border = 0
            rv, cv = rows[v], cols[v]
            for p in placed:
                border = (border << 2) | ((rv >> p & 1) << 1) | (cv >> p & 1)
            groups.setdefault(border, []).append(v)
        for border in sorted(groups):
            prefix.append(border)
            if best is not None and prefix > best[: k + 1]:
                prefix.pop()
                break  # larger border prefix cannot improve; later borders only grow
            reps: list[int] = []
            for v in groups[border]:
                if any(swap[r][v] for r in reps):
                    continue
                reps.append(v)
            for v in reps:
                placed.append(v)
                used |= 1 << v
                rec()
                used &= ~(1 << v)
                placed.pop()
            prefix.pop()

    rec()
    assert best is not None
    return best


def _pack_levels(n: int, levels: Sequence[int]) -> bytes:
    acc = 0
    bits = 0
    for k, level in enumerate(levels):
        acc = (acc << (2 * k)) | level
        bits += 2 * k
    return bytes([n]) + acc.to_bytes((bits + 7) // 8 or 1, "big")


def identity_levels(g: Digraph) -> tuple[int, ...]:
    """Layered border encoding of the graph under its own vertex order."""
    rows = g.out_masks
    cols = g.in_masks
    out: list[int] = []
    for k in range(g.n):
        border = 0
        for p in range(k):
            border = (border << 2) | ((rows[k] >> p & 1) << 1) | (cols[k] >> p & 1)
        out.append(border)
    return tuple(out)


def canonical_form(g: Digraph) -> CanonicalForm:
    """Canonical certificate by pruned search over vertex orderings (n <= 10)."""
    if g.n > CANONICAL_MAX_VERTICES:
        raise TooLarge(f"canonical form supports at most {CANONICAL_MAX_VERTICES} vertices")
    levels = _canonical_levels(g.n, g.out_masks, g.in_masks)
    return CanonicalForm(_pack_levels(g.n, levels))


def isomorphic(g1: Digraph, g2: Digraph) -> bool:
    """Edge-preserving bijection test via canonical forms; ignores colors."""
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    return canonical_form(g1) == canonical_form(g2)


def symmetric_digraph(u: UGraph) -> Digraph:
    """Both directions of every undirected edge."""
    edges = frozenset((a, b) for a, b in u.edges) | frozenset((b, a) for a, b in u.edges)
    return Digraph(n=u.n, colors=u.colors, edges=edges, names=u.names)


def ugraph_canonical_form(u: UGraph) -> CanonicalForm:
    return canonical_form(symmetric_digraph(u))


def ugraphs_isomorphic(u1: UGraph, u2: UGraph) -> bool:
    if u1.n != u2.n or len(u1.edges) != len(u2.edges):
        return False
    return ugraph_canonical_form(u1) == ugraph_canonical_form(u2)


def relabel(g: Digraph, perm: Sequence[int]) -> Digraph:
    """Apply a permutation: new id perm[v] for old v.  Names follow vertices."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation")
    colors = [0] * g.n
    names = [""] * g.n
    for v in range(g.n):
        colors[perm[v]] = g.colors[v]
        names[perm[v]] = g.names[v]
    edges = frozenset((perm[u], perm[v]) for u, v in g.edges)
    return Digraph(n=g.n, colors=tuple(colors), edges=edges, names=tuple(names))


def infer_bipartition(n: int, edges: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Two-color vertices so every edge is bichromatic; smallest vertex of each
    component gets color 0.  Raises ValueError on odd cycles."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    colors = [-1] * n
    for start in range(n):
        if colors[start] != -1:
            continue
        colors[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if colors[w] == -1:
                    colors[w] = 1 - colors[v]
                    queue.append(w)
                elif colors[w] == colors[v]:
                    raise ValueError("graph is not bipartite")
    return tuple(colors)
