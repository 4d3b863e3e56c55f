"""The degree-r edge polynomial of a weighted hypergraph and its gradient.

For a rank-r graph the polynomial is r! * sum over edges of weight times the
product of the edge's coordinates.  Both the value and every gradient
component are accumulated with exact compensated summation (math.fsum) in
sorted edge order, so results are reproducible and safe for tight bound
checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .hypergraph import WeightedHypergraph


def check_exponent(p: float) -> float:
    p = float(p)
    if not math.isfinite(p) or p < 1.0:
        raise ValueError(f"sphere exponent must be a finite real >= 1, got {p}")
    return p


def lp_norm(x: np.ndarray, p: float) -> float:
    x = np.asarray(x, dtype=np.float64)
    if x.size == 0:
        return 0.0
    return float(np.sum(np.abs(x) ** p) ** (1.0 / p))


def normalize_lp(x: np.ndarray, p: float) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    nrm = lp_norm(x, p)
    if nrm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return x / nrm


@dataclass(frozen=True)
class PointOnSphere:
    """A coordinate vector together with the exponent of its unit sphere."""

    coords: np.ndarray
    p: float
    normalized: bool = field(default=True)

    def __post_init__(self):
        object.__setattr__(self, "coords", np.asarray(self.coords, dtype=np.float64))
        check_exponent(self.p)
        if self.normalized and self.coords.size:
            defect = abs(lp_norm(self.coords, self.p) - 1.0)
            if defect > 1e-12:
                raise ValueError(f"vector is off the unit sphere by {defect:.3e}")

    @classmethod
    def project(cls, coords: np.ndarray, p: float) -> "PointOnSphere":
        return cls(normalize_lp(coords, p), p)


def _check_length(G: WeightedHypergraph, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (G.n_vertices,):
        raise ValueError(f"vector has shape {x.shape}, expected ({G.n_vertices},)")
    return x


def evaluate(G: WeightedHypergraph, x: np.ndarray) -> float:
    """Value of the edge polynomial at x, including the r! coefficient."""
    x = _check_length(G, x)
    if G.num_edges == 0:
        return 0.0
    idx, w = G.arrays()
    terms = w * np.prod(x[idx], axis=1)
    return math.factorial(G.rank) * math.fsum(terms.tolist())


def gradient(G: WeightedHypergraph, x: np.ndarray) -> np.ndarray:
    """Gradient of the edge polynomial; component k sums over edges through k."""
    x = _check_length(G, x)
    n = G.n_vertices
    if G.num_edges == 0:
        return np.zeros(n)
    idx, w = G.arrays()
    X = x[idx]
    m, r = X.shape
    # leave-one-out products via prefix/suffix scans along each edge
    pref = np.ones_like(X)
    suf = np.ones_like(X)
    for j in range(1, r):
        pref[:, j] = pref[:, j - 1] * X[:, j - 1]
        suf[:, r - 1 - j] = suf[:, r - j] * X[:, r - j]
    contrib = (w[:, None] * pref * suf).ravel()
    verts = idx.ravel()
    order = np.argsort(verts, kind="stable")
    sv = verts[order]
    sc = contrib[order]
    grad = np.zeros(n)
    bounds = np.searchsorted(sv, np.arange(n + 1))
    fact = float(math.factorial(r))
    for v in range(n):
        lo, hi = bounds[v], bounds[v + 1]
        if lo < hi:
            grad[v] = fact * math.fsum(sc[lo:hi].tolist())
    return grad


def evaluate_many(G: WeightedHypergraph, X: np.ndarray) -> np.ndarray:
    """Polynomial values for a batch of row vectors (plain numpy accumulation).

    This is the sampling-oracle path and deliberately shares no accumulation
    code with evaluate().
    """
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != G.n_vertices:
        raise ValueError(f"batch has shape {X.shape}, expected (*, {G.n_vertices})")
    if G.num_edges == 0:
        return np.zeros(X.shape[0])
    idx, w = G.arrays()
    prods = np.prod(X[:, idx], axis=2)
    return math.factorial(G.rank) * (prods @ w)
