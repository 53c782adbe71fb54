from itertools import product

import pytest

from helpers import brute_has_induced_cycle, brute_has_induced_path
from qbmg.digraph import build_ugraph, underlying
from qbmg.enumeration import cycle_template, path_template
from qbmg.fixtures import C4_3, EX7, EX10, P5A
from qbmg.paths import find_induced_cycle, find_induced_path, is_cograph


def test_p5_fixture_contains_induced_p5():
    hit = find_induced_path(underlying(P5A), 5)
    assert hit is not None
    assert hit.vertices == (0, 1, 2, 3, 4)


def test_all_six_p5_fixtures_are_sharp():
    # recognized graphs whose underlying graphs nevertheless contain an
    # induced P5 (so P6-freeness is the best possible path bound)
    from qbmg.fixtures import P5_CLASSES

    for name, g in P5_CLASSES.items():
        assert find_induced_path(underlying(g), 5) is not None, name


def test_recognized_graphs_are_p6_free():
    assert find_induced_path(underlying(EX7), 6) is None
    assert find_induced_path(underlying(EX10), 6) is None


def test_complete_bipartite_has_no_induced_p4():
    k22 = build_ugraph(4, (0, 0, 1, 1), [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert find_induced_path(k22, 4) is None


def test_c4_fixture_contains_induced_c4():
    hit = find_induced_cycle(underlying(C4_3), 4)
    assert hit is not None
    assert hit.vertices == (0, 1, 2, 3)


def test_bipartite_graphs_have_no_odd_cycles():
    for colors in product((0, 1), repeat=5):
        pairs = [
            (u, v) for u in range(5) for v in range(u + 1, 5) if colors[u] != colors[v]
        ]
        # densest bipartite graph for this coloring; subgraphs can only
        # lose cycles
        g = build_ugraph(5, colors, pairs)
        assert find_induced_cycle(g, 3) is None
        assert find_induced_cycle(g, 5) is None


def test_six_cycle_found_whole():
    hit = find_induced_cycle(cycle_template(6), 6)
    assert hit is not None
    assert hit.vertices == (0, 1, 2, 3, 4, 5)


def test_cycle_witness_is_chordless():
    # 4-cycle plus a chord pair leaves no induced C6 in the 6-cycle-plus-chord
    g = build_ugraph(6, (0, 1, 0, 1, 0, 1), [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3)])
    assert find_induced_cycle(g, 6) is None
    assert find_induced_cycle(g, 4) is not None


def test_is_cograph():
    k22 = build_ugraph(4, (0, 0, 1, 1), [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert is_cograph(k22)
    assert not is_cograph(underlying(P5A))
    assert is_cograph(build_ugraph(2, (0, 1), [(0, 1)]))


def test_path_length_validation():
    g = build_ugraph(2, (0, 1), [(0, 1)])
    with pytest.raises(ValueError):
        find_induced_path(g, 1)
    with pytest.raises(ValueError):
        find_induced_cycle(g, 2)


def test_against_brute_force_exhaustive_n5():
    # every bipartite undirected graph on 5 labeled vertices (one coloring
    # per complement pair), all meaningful path/cycle lengths
    for colors in product((0, 1), repeat=4):
        colors = (0, *colors)
        pairs = [
            (u, v) for u in range(5) for v in range(u + 1, 5) if colors[u] != colors[v]
        ]
        for picks in product((0, 1), repeat=len(pairs)):
            edges = [p for p, on in zip(pairs, picks) if on]
            g = build_ugraph(5, colors, edges)
            for k in (2, 3, 4, 5):
                assert (find_induced_path(g, k) is not None) == brute_has_induced_path(g, k)
            for k in (3, 4, 5):
                assert (find_induced_cycle(g, k) is not None) == brute_has_induced_cycle(g, k)


def test_witnesses_replay():
    g = path_template(6)
    hit = find_induced_path(g, 4)
    assert hit is not None
    seq = hit.vertices
    for i in range(4):
        for j in range(i + 1, 4):
            assert g.has_edge(seq[i], seq[j]) == (j == i + 1)
    c4 = cycle_template(4)
    cyc = find_induced_cycle(c4, 4)
    assert cyc is not None
    seq = cyc.vertices
    for i in range(4):
        for j in range(i + 1, 4):
            consecutive = j == i + 1 or (i == 0 and j == 3)
            assert c4.has_edge(seq[i], seq[j]) == consecutive
