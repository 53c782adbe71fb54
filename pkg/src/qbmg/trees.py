"""Rooted phylogenetic trees, leaf colorings, truncation maps and the graphs
they explain.

A tree is phylogenetic when every internal node has at least two children.
For leaves x, y the order ``a <= b`` used below means "b is an ancestor of a
or a itself".  A leaf y of the opposite color is a *best match* of x when
lca(x, y) is deepest among lca(x, z) over all z of y's color; a truncation
map u assigns to every (leaf, color) a node on the root-to-leaf path (with
u(x, color-of-x) = x) and keeps a best-match edge x -> y only when
u(x, color-of-y) is an ancestor-or-equal of lca(x, y).

Trees are addressed by preorder node ids with the root at 0.  Leaf colorings
and truncation maps are plain dicts keyed by leaf node id and by
(leaf node id, color).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, Sequence

from .digraph import Digraph, build_digraph
from .errors import (
    InvalidTruncation,
    NoIntegerSuffix,
    NotPhylogenetic,
    NotSurjective,
    ParseError,
    TooLarge,
)

LeafColoring = dict[int, int]
TruncationMap = dict[tuple[int, int], int]

Nested = str | tuple  # leaf name, or tuple of child Nested values

EXPLAIN_MAX_LEAVES = 6


@dataclass(frozen=True)
class PhyloTree:
    """Rooted phylogenetic tree in preorder; ``names`` holds leaf names
    (internal nodes carry None)."""

    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]
    names: tuple[str | None, ...]

    def __post_init__(self) -> None:
        size = len(self.parent)
        if not (size == len(self.children) == len(self.names)):
            raise ValueError("parent, children and names must align")
        if size == 0:
            raise ValueError("empty tree")
        if self.parent[0] is not None:
            raise ValueError("node 0 must be the root")
        for node in range(1, size):
            p = self.parent[node]
            if p is None or not (0 <= p < node):
                raise ValueError("nodes must be in preorder with parents before children")
        for node in range(size):
            kids = self.children[node]
            if len(kids) == 1:
                raise NotPhylogenetic(f"internal node {node} has a single child")
            if not kids and self.names[node] is None:
                raise ValueError(f"leaf {node} has no name")
            if kids and self.names[node] is not None:
                raise ValueError(f"internal node {node} must not carry a name")

    @property
    def size(self) -> int:
        return len(self.parent)

    @cached_property
    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.size) if not self.children[v])

    @cached_property
    def depth(self) -> tuple[int, ...]:
        d = [0] * self.size
        for v in range(1, self.size):
            d[v] = d[self.parent[v]] + 1
        return tuple(d)

    def is_ancestor(self, a: int, b: int) -> bool:
        """True iff a is b or lies on the path from the root to b."""
        while b is not None and self.depth[b] >= self.depth[a]:
            if b == a:
                return True
            b = self.parent[b]  # type: ignore[assignment]
        return False

    def root_path(self, x: int) -> tuple[int, ...]:
        """Nodes from the root down to x, inclusive."""
        path = []
        node: int | None = x
        while node is not None:
            path.append(node)
            node = self.parent[node]
        return tuple(reversed(path))

    def leaf_by_name(self, name: str) -> int:
        for v in self.leaves:
            if self.names[v] == name:
                return v
        raise KeyError(name)


def tree_from_nested(nested: Nested) -> PhyloTree:
    """Build a tree from nested tuples of leaf names, e.g. (("a", "b"), "c")."""
    parent: list[int | None] = []
    children: list[list[int]] = []
    names: list[str | None] = []

    def walk(node: Nested, par: int | None) -> int:
        idx = len(parent)
        parent.append(par)
        children.append([])
        if isinstance(node, str):
            names.append(node)
        else:
            names.append(None)
            for child in node:
                children[idx].append(walk(child, idx))
        return idx

    walk(nested, None)
    return PhyloTree(tuple(parent), tuple(tuple(c) for c in children), tuple(names))


def lca(t: PhyloTree, x: int, y: int) -> int:
    """Deepest common ancestor; lca(x, x) = x."""
    while x != y:
        if t.depth[x] < t.depth[y]:
            y = t.parent[y]  # type: ignore[assignment]
        else:
            x = t.parent[x]  # type: ignore[assignment]
    return x


_LEAF_TOKEN = re.compile(r"([A-Za-z0-9_.+-]+)=([A-Za-z0-9_.+-]*)")


def parse_tree(text: str) -> tuple[PhyloTree, LeafColoring]:
    """Parse the Newick subset ``((a=0,b=1),c=1);`` into a tree and coloring.

    Leaves are ``name=color``; internal nodes are parenthesized groups; the
    string ends with a semicolon.  Whitespace between tokens is ignored.
    """
    pos = 0

    def skip_ws() -> None:
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def fail(message: str) -> ParseError:
        return ParseError(message, line=1, column=pos + 1)

    colors_by_name: dict[str, int] = {}

    def parse_node() -> Nested:
        nonlocal pos
        skip_ws()
        if pos >= len(text):
            raise fail("unexpected end of input")
        if text[pos] == "(":
            pos += 1
            kids = [parse_node()]
            skip_ws()
            while pos < len(text) and text[pos] == ",":
                pos += 1
                kids.append(parse_node())
                skip_ws()
            if pos >= len(text) or text[pos] != ")":
                raise fail("expected ',' or ')'")
            pos += 1
            return tuple(kids)
        m = _LEAF_TOKEN.match(text, pos)
        if not m:
            raise fail(f"expected a name=color leaf or '(' at {text[pos]!r}")
        name, color_text = m.group(1), m.group(2)
        pos = m.end()
        if color_text not in ("0", "1"):
            raise fail(f"leaf color must be 0 or 1, got {color_text!r}")
        if name in colors_by_name:
            raise fail(f"leaf {name!r} declared twice")
        colors_by_name[name] = int(color_text)
        return name

    nested = parse_node()
    skip_ws()
    if pos >= len(text) or text[pos] != ";":
        raise fail("expected ';'")
    pos += 1
    skip_ws()
    if pos != len(text):
        raise fail("trailing characters after ';'")

    tree = tree_from_nested(nested)
    sigma = {leaf: colors_by_name[tree.names[leaf]] for leaf in tree.leaves}
    if set(sigma.values()) != {0, 1}:
        raise NotSurjective("leaf coloring must use both colors")
    return tree, sigma


def _check_coloring(t: PhyloTree, sigma: Mapping[int, int]) -> None:
    if set(sigma) != set(t.leaves):
        raise ValueError("coloring must cover exactly the leaves")
    if set(sigma.values()) != {0, 1}:
        raise NotSurjective("leaf coloring must use both colors")


def _deepest_lca_per_color(t: PhyloTree, sigma: Mapping[int, int], x: int) -> dict[int, int]:
    """For each color s, the deepest lca(x, z) over leaves z != x of color s."""
    best: dict[int, int] = {}
    for z in t.leaves:
        if z == x:
            continue
        a = lca(t, x, z)
        s = sigma[z]
        if s not in best or t.depth[a] > t.depth[best[s]]:
            best[s] = a
    return best


def best_match_graph(t: PhyloTree, sigma: Mapping[int, int]) -> Digraph:
    """Digraph on the leaves: x -> y iff y has the other color and lca(x, y)
    is deepest among all leaves of y's color."""
    _check_coloring(t, sigma)
    leaves = t.leaves
    index = {leaf: i for i, leaf in enumerate(leaves)}
    edges = []
    for x in leaves:
        target = _deepest_lca_per_color(t, sigma, x)
        s = 1 - sigma[x]
        if s not in target:
            continue
        for y in leaves:
            if sigma[y] == sigma[x]:
                continue
            if lca(t, x, y) == target[s]:
                edges.append((index[x], index[y]))
    return build_digraph(
        len(leaves),
        [sigma[leaf] for leaf in leaves],
        edges,
        [t.names[leaf] for leaf in leaves],
    )


def root_truncation(t: PhyloTree, sigma: Mapping[int, int]) -> TruncationMap:
    """No truncation: the opposite color maps to the root for every leaf."""
    u: TruncationMap = {}
    for x in t.leaves:
        for s in (0, 1):
            u[(x, s)] = x if s == sigma[x] else 0
    return u


def validate_truncation(t: PhyloTree, sigma: Mapping[int, int], u: Mapping[tuple[int, int], int]) -> None:
    for x in t.leaves:
        for s in (0, 1):
            if (x, s) not in u:
                raise InvalidTruncation(f"missing truncation entry for leaf {x}, color {s}")
            node = u[(x, s)]
            if not (0 <= node < t.size) or not t.is_ancestor(node, x):
                raise InvalidTruncation(
                    f"truncation node {node} is off the root path of leaf {x}")
            if s == sigma[x] and node != x:
                raise InvalidTruncation(
                    f"truncation of leaf {x} at its own color must be the leaf itself")


def qbmg_from_tree(
    t: PhyloTree, sigma: Mapping[int, int], u: Mapping[tuple[int, int], int]
) -> Digraph:
    """Best-match edges surviving the truncation gate: keep x -> y iff
    u(x, color-of-y) is an ancestor-or-equal of lca(x, y)."""
    _check_coloring(t, sigma)
    validate_truncation(t, sigma, u)
    leaves = t.leaves
    index = {leaf: i for i, leaf in enumerate(leaves)}
    edges = []
    for x in leaves:
        target = _deepest_lca_per_color(t, sigma, x)
        s = 1 - sigma[x]
        if s not in target:
            continue
        gate = u[(x, s)]
        for y in leaves:
            if sigma[y] == sigma[x]:
                continue
            a = lca(t, x, y)
            if a == target[s] and t.is_ancestor(gate, a):
                edges.append((index[x], index[y]))
    return build_digraph(
        len(leaves),
        [sigma[leaf] for leaf in leaves],
        edges,
        [t.names[leaf] for leaf in leaves],
    )


_SUFFIX = re.compile(r"(\d+)$")


def parity_coloring(t: PhyloTree) -> LeafColoring:
    """Color each leaf by the parity of the integer suffix of its name."""
    sigma: LeafColoring = {}
    for leaf in t.leaves:
        name = t.names[leaf]
        m = _SUFFIX.search(name or "")
        if not m:
            raise NoIntegerSuffix(f"leaf name {name!r} has no trailing integer")
        sigma[leaf] = int(m.group(1)) % 2
    return sigma


def _set_partitions(items: tuple[str, ...]) -> Iterator[list[list[str]]]:
    # items arrive sorted; the first element is prepended, keeping blocks sorted
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def phylogenetic_topologies(names: Sequence[str]) -> Iterator[Nested]:
    """All rooted phylogenetic trees on the given (labeled) leaf set,
    as nested tuples, in a deterministic order."""
    ordered = tuple(sorted(names))

    def gen(leafset: tuple[str, ...]) -> Iterator[Nested]:
        if len(leafset) == 1:
            yield leafset[0]
            return
        for part in _set_partitions(leafset):
            if len(part) < 2:
                continue
            blocks = sorted((tuple(b) for b in part), key=lambda b: b[0])

            def expand(i: int, acc: list[Nested]) -> Iterator[Nested]:
                if i == len(blocks):
                    yield tuple(acc)
                    return
                for sub in gen(blocks[i]):
                    acc.append(sub)
                    yield from expand(i + 1, acc)
                    acc.pop()

            yield from expand(0, [])

    yield from gen(ordered)


def search_explanation(
    g: Digraph, max_leaves: int
) -> tuple[PhyloTree, LeafColoring, TruncationMap] | None:
    """Exhaustive search for a (tree, coloring, truncation) triple whose
    constructed graph equals g with matching vertex names.

    Uses the structural fact that all best matches of a leaf toward one color
    share the same lca, so a truncation entry either keeps that whole edge
    bundle or drops it; a tree explains g iff every out-neighborhood equals
    the tree's best-match set or is empty.
    """
    if max_leaves > EXPLAIN_MAX_LEAVES:
        raise TooLarge(f"explanation search supports at most {EXPLAIN_MAX_LEAVES} leaves")
    if g.n > max_leaves:
        raise TooLarge(f"graph has {g.n} vertices, budget is {max_leaves}")
    if set(g.colors) != {0, 1}:
        return None  # a leaf coloring must use both colors
    for nested in phylogenetic_topologies(g.names):
        tree = tree_from_nested(nested)
        sigma = {leaf: g.colors[g.id_of(tree.names[leaf])] for leaf in tree.leaves}
        trunc: TruncationMap = {}
        ok = True
        for x in tree.leaves:
            trunc[(x, sigma[x])] = x
            s = 1 - sigma[x]
            vx = g.id_of(tree.names[x])
            wanted = frozenset(g.names[w] for w in g.out_neighbors(vx))
            target = _deepest_lca_per_color(tree, sigma, x)
            if s not in target:
                if wanted:
                    ok = False
                    break
                trunc[(x, s)] = x
                continue
            matches = frozenset(
                tree.names[y]
                for y in tree.leaves
                if sigma[y] == s and lca(tree, x, y) == target[s]
            )
            if wanted == matches:
                trunc[(x, s)] = target[s]
            elif not wanted:
                trunc[(x, s)] = x
            else:
                ok = False
                break
        if ok:
            return tree, sigma, trunc
    return None
