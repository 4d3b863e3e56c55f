"""Shared test utilities: seeded random graphs and small named fixtures."""

from __future__ import annotations

import itertools

import pspectral as ps


def random_graph(rng, r=None, n_lo=3, n_hi=7, density=None, weighted=False,
                 ensure_edges=True) -> ps.WeightedHypergraph:
    """A seeded random graph with rank in {2, 3, 4} and a few edges."""
    r = int(rng.integers(2, 5)) if r is None else r
    n = int(rng.integers(max(n_lo, r), n_hi + 1))
    density = float(rng.uniform(0.3, 0.8)) if density is None else density
    while True:
        edges = {}
        for e in itertools.combinations(range(n), r):
            if rng.random() < density:
                edges[e] = float(rng.uniform(0.2, 2.0)) if weighted else 1.0
        if edges or not ensure_edges:
            return ps.WeightedHypergraph(r, n, edges)
        density = min(1.0, density + 0.2)


def fano() -> ps.WeightedHypergraph:
    """The 7-point, 7-line Steiner triple system."""
    lines = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5),
             (1, 4, 6), (2, 3, 6), (2, 4, 5)]
    return ps.from_edge_list(3, 7, lines)


def path(n: int) -> ps.WeightedHypergraph:
    return ps.from_edge_list(2, n, [(i, i + 1) for i in range(n - 1)])


FAST = ps.SolveOptions(tol=1e-10, restarts=8, seed=11)
TIGHT = ps.SolveOptions(tol=1e-11, restarts=16, seed=11)
