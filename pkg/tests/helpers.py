"""Shared test utilities: independent naive oracles, mask helpers, random
phylogenetic trees and the isomorphism-class generator for small connected
bipartite graphs."""

from __future__ import annotations

import random
from itertools import combinations, product

from qbmg.digraph import Digraph, UGraph, build_ugraph, iter_bits, ugraph_canonical_form
from qbmg.trees import Nested


# --- naive re-implementations of the recognition axioms (edge-set membership,
# --- no masks); deliberately direct translations of the quantifiers


def naive_violates_n1(g: Digraph) -> bool:
    E = g.edges
    V = range(g.n)
    for u in V:
        for v in V:
            if u == v or (u, v) in E or (v, u) in E:
                continue
            for t in V:
                if (u, t) not in E:
                    continue
                for w in V:
                    if (v, w) in E and (t, w) in E:
                        return True
    return False


def naive_violates_n2(g: Digraph) -> bool:
    E = g.edges
    V = range(g.n)
    for u, v, w, t in product(V, repeat=4):
        if (u, v) in E and (v, w) in E and (w, t) in E and (u, t) not in E:
            return True
    return False


def naive_violates_n3(g: Digraph) -> bool:
    V = range(g.n)
    out = {v: {w for w in V if (v, w) in g.edges} for v in V}
    for u, v in combinations(V, 2):
        if out[u] & out[v] and not (out[u] <= out[v] or out[v] <= out[u]):
            return True
    return False


def naive_is_qbmg(g: Digraph) -> bool:
    return not (naive_violates_n1(g) or naive_violates_n2(g) or naive_violates_n3(g))


# --- brute-force induced path / cycle / biclique oracles


def brute_has_induced_path(g: UGraph, k: int) -> bool:
    from itertools import permutations

    for seq in permutations(range(g.n), k):
        ok = True
        for i in range(k):
            for j in range(i + 1, k):
                adjacent = g.has_edge(seq[i], seq[j])
                if j == i + 1 and not adjacent:
                    ok = False
                elif j > i + 1 and adjacent:
                    ok = False
                if not ok:
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def brute_has_induced_cycle(g: UGraph, k: int) -> bool:
    from itertools import permutations

    for seq in permutations(range(g.n), k):
        ok = True
        for i in range(k):
            for j in range(i + 1, k):
                adjacent = g.has_edge(seq[i], seq[j])
                consecutive = j == i + 1 or (i == 0 and j == k - 1)
                if consecutive != adjacent:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def brute_maximal_bicliques(g: UGraph) -> set[tuple[frozenset[int], frozenset[int]]]:
    """All maximal bicliques by filtering every (left, right) subset pair."""
    left_class = [v for v in range(g.n) if g.colors[v] == 0]
    right_class = [v for v in range(g.n) if g.colors[v] == 1]
    all_pairs = []
    for lr in range(1, len(left_class) + 1):
        for ls in combinations(left_class, lr):
            for rr in range(1, len(right_class) + 1):
                for rs in combinations(right_class, rr):
                    if all(g.has_edge(a, b) for a in ls for b in rs):
                        all_pairs.append((frozenset(ls), frozenset(rs)))
    maximal = set()
    for ls, rs in all_pairs:
        if not any(
            (ls, rs) != (ls2, rs2) and ls <= ls2 and rs <= rs2 for ls2, rs2 in all_pairs
        ):
            maximal.add((ls, rs))
    return maximal


# --- mask utilities for sweep-based tests


def in_masks_from_out(n: int, out: tuple[int, ...]) -> list[int]:
    inn = [0] * n
    for u in range(n):
        for v in iter_bits(out[u]):
            inn[v] |= 1 << u
    return inn


def adj_masks_from_out(n: int, out: tuple[int, ...]) -> list[int]:
    adj = list(out)
    for u in range(n):
        for v in iter_bits(out[u]):
            adj[v] |= 1 << u
    return adj


def digraph_from_masks(n: int, out: tuple[int, ...], colors: tuple[int, ...]) -> Digraph:
    edges = frozenset((u, v) for u in range(n) for v in iter_bits(out[u]))
    return Digraph(n, colors, edges, tuple(f"v{i + 1}" for i in range(n)))


def masks_connected(n: int, adj: list[int]) -> bool:
    if n <= 1:
        return True
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        rest = adj[v] & ~seen
        while rest:
            low = rest & -rest
            rest ^= low
            seen |= low
            frontier.append(low.bit_length() - 1)
    return seen == (1 << n) - 1


# --- random phylogenetic trees with colorings and truncation maps


def random_nested(rng: random.Random, names: list[str]) -> Nested:
    group = list(names)
    rng.shuffle(group)

    def build(part: list[str]) -> Nested:
        if len(part) == 1:
            return part[0]
        k = rng.randint(2, min(len(part), 4))
        blocks: list[list[str]] = [[] for _ in range(k)]
        for i, item in enumerate(part):
            if i < k:
                blocks[i].append(item)
            else:
                blocks[rng.randrange(k)].append(item)
        return tuple(build(b) for b in blocks)

    return build(group)


def random_surjective_coloring(rng: random.Random, leaves: tuple[int, ...]) -> dict[int, int]:
    while True:
        sigma = {leaf: rng.randint(0, 1) for leaf in leaves}
        if set(sigma.values()) == {0, 1}:
            return sigma


def random_truncation(rng, tree, sigma) -> dict[tuple[int, int], int]:
    u: dict[tuple[int, int], int] = {}
    for x in tree.leaves:
        for s in (0, 1):
            if s == sigma[x]:
                u[(x, s)] = x
            else:
                u[(x, s)] = rng.choice(tree.root_path(x))
    return u


# --- connected bipartite undirected graphs with n <= max_n, one per
# --- isomorphism class, generated by single-vertex augmentation (every
# --- connected graph arises by re-attaching a removed spanning-tree leaf)


def connected_bipartite_reps(max_n: int) -> dict[int, list[UGraph]]:
    levels: dict[int, list[UGraph]] = {1: [build_ugraph(1, (0,), [])]}
    for n in range(2, max_n + 1):
        seen: dict[bytes, UGraph] = {}
        for g in levels[n - 1]:
            for new_color in (0, 1):
                attach_to = [v for v in range(g.n) if g.colors[v] != new_color]
                for r in range(1, len(attach_to) + 1):
                    for subset in combinations(attach_to, r):
                        edges = list(g.edges) + [(v, g.n) for v in subset]
                        cand = build_ugraph(n, g.colors + (new_color,), edges)
                        code = ugraph_canonical_form(cand).code
                        if code not in seen:
                            seen[code] = cand
        levels[n] = list(seen.values())
    return levels
