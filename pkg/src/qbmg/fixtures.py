"""Built-in reference graphs used by the verification report and the tests.

Edges are written 1-based (v1, v2, ...) to match the display names.  The
five-vertex path family, the four-vertex path family, the ten four-vertex
cycle digraphs, the seven- and ten-vertex worked examples and the short-path
example R4 are the classification witnesses the ``verify`` report checks
against.
"""

from __future__ import annotations

from .digraph import Digraph, build_digraph


def _dg(n: int, colors: tuple[int, ...], pairs: list[tuple[int, int]]) -> Digraph:
    return build_digraph(n, colors, [(u - 1, v - 1) for u, v in pairs])


_P5_COLORS = (1, 0, 1, 0, 1)
_P4_COLORS = (1, 0, 1, 0)

P5A = _dg(5, _P5_COLORS, [(1, 2), (3, 2), (3, 4), (4, 5)])
P5B = _dg(5, _P5_COLORS, [(1, 2), (3, 2), (3, 4), (5, 4)])
P5C = _dg(5, _P5_COLORS, [(2, 1), (3, 2), (3, 4), (4, 5)])
P5A1 = _dg(5, _P5_COLORS, [(1, 2), (2, 1), (3, 2), (3, 4), (4, 5)])
P5B1 = _dg(5, _P5_COLORS, [(1, 2), (2, 1), (3, 2), (3, 4), (5, 4)])
P5AB = _dg(5, _P5_COLORS, [(1, 2), (2, 1), (3, 2), (3, 4), (4, 5), (5, 4)])

P5_CLASSES = {
    "P5a": P5A,
    "P5b": P5B,
    "P5c": P5C,
    "P5a1": P5A1,
    "P5b1": P5B1,
    "P5ab": P5AB,
}

P4_1 = _dg(4, _P4_COLORS, [(1, 2), (1, 4), (2, 3)])
P4_2 = _dg(4, _P4_COLORS, [(1, 2), (1, 4), (3, 4)])
P4_3 = _dg(4, _P4_COLORS, [(1, 2), (1, 4), (2, 1), (2, 3)])
P4_4 = _dg(4, _P4_COLORS, [(1, 2), (2, 1), (4, 1), (4, 3)])

P4_CLASSES = {"P4_1": P4_1, "P4_2": P4_2, "P4_3": P4_3, "P4_4": P4_4}

C4_1 = _dg(4, _P4_COLORS, [(1, 2), (1, 4), (2, 1), (2, 3), (3, 4), (4, 3)])
C4_2 = _dg(4, _P4_COLORS, [(1, 2), (1, 4), (2, 3), (3, 2), (3, 4), (4, 3)])
C4_3 = _dg(4, _P4_COLORS, [(1, 2), (1, 4), (3, 2), (3, 4)])
C4_4 = _dg(4, _P4_COLORS, [(1, 2), (1, 4), (3, 2), (4, 3)])
C4_5 = _dg(4, _P4_COLORS, [(1, 2), (2, 1), (3, 2), (3, 4), (4, 1)])
C4_6 = _dg(4, _P4_COLORS, [(1, 2), (1, 4), (3, 2), (4, 1), (4, 3)])
C4_7 = _dg(4, _P4_COLORS, [(1, 2), (1, 4), (2, 3), (4, 3)])
C4_8 = _dg(4, _P4_COLORS, [(1, 2), (1, 4), (3, 2), (3, 4), (4, 3)])
C4_9 = _dg(4, _P4_COLORS, [(1, 2), (1, 4), (2, 1), (2, 3), (3, 2), (3, 4)])
C4_10 = _dg(
    4, _P4_COLORS, [(1, 2), (1, 4), (3, 2), (3, 4), (2, 1), (2, 3), (4, 1), (4, 3)]
)

C4_CLASSES = {
    "C4_1": C4_1,
    "C4_2": C4_2,
    "C4_3": C4_3,
    "C4_4": C4_4,
    "C4_5": C4_5,
    "C4_6": C4_6,
    "C4_7": C4_7,
    "C4_8": C4_8,
    "C4_9": C4_9,
    "C4_10": C4_10,
}

EX7 = _dg(
    7,
    (1, 0, 1, 0, 1, 0, 1),
    [(5, 4), (2, 1), (3, 4), (3, 2), (4, 7), (1, 6), (3, 6), (6, 1), (7, 4)],
)

EX10 = _dg(
    10,
    (0, 0, 0, 0, 1, 1, 1, 1, 0, 1),
    [
        (1, 5), (1, 6), (1, 7), (1, 8),
        (5, 2), (6, 2), (2, 7), (2, 8),
        (5, 3), (6, 3), (3, 7), (3, 8),
        (5, 4), (6, 4), (7, 4), (4, 8),
        (5, 9), (1, 10), (2, 10),
    ],
)

R4 = _dg(4, _P4_COLORS, [(2, 1), (2, 3), (3, 4)])

ALL_FIXTURES: dict[str, Digraph] = {
    **P5_CLASSES,
    **P4_CLASSES,
    **C4_CLASSES,
    "EX7": EX7,
    "EX10": EX10,
    "R4": R4,
}
