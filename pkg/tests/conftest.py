"""Session-scoped fixtures shared by the acceptance suite.

The expensive artifact is the exhaustive sweep over every bipartite digraph
on at most six labeled vertices.  Color-swapped twins carry identical edge
sets, so the sweep walks one coloring per complement pair; recognized graphs
are recorded once per distinct (n, edge-set) pair together with the first
coloring that produced them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import pytest

from qbmg.axioms import is_qbmg_masks
from qbmg.enumeration import halved_colorings, run_mask_sweep

SWEEP_MAX_N = 6


@dataclass(frozen=True)
class SweepRecord:
    n: int
    out: tuple[int, ...]
    colors: tuple[int, ...]


@dataclass(frozen=True)
class SweepData:
    total_graphs: int
    recognized_labeled: int
    records: tuple[SweepRecord, ...]  # one per distinct recognized edge set
    elapsed_seconds: float

    def by_n(self, *sizes: int) -> list[SweepRecord]:
        wanted = set(sizes)
        return [r for r in self.records if r.n in wanted]


@pytest.fixture(scope="session")
def sweep() -> SweepData:
    started = time.monotonic()
    total = 0
    recognized = 0
    distinct: dict[tuple[int, tuple[int, ...]], tuple[int, ...]] = {}
    for n in range(1, SWEEP_MAX_N + 1):
        for colors in halved_colorings(n):

            def visit(out, inn, n=n, colors=colors):
                nonlocal recognized
                if is_qbmg_masks(n, out, inn):
                    recognized += 1
                    key = (n, tuple(out))
                    if key not in distinct:
                        distinct[key] = colors

            total += run_mask_sweep(colors, visit)
    records = tuple(
        SweepRecord(n, out, colors) for (n, out), colors in distinct.items()
    )
    return SweepData(total, recognized, records, time.monotonic() - started)
