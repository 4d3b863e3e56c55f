"""Multi-start solvers for the extremal values of the edge polynomial on the
l^p unit sphere, with certified stationarity residuals, a sampling oracle,
and Collatz-Wielandt style envelopes.

Algorithm map
  target max, p > 1: shifted fixed-point iteration on the nonnegative part
    of the sphere, x <- normalize((grad/r + shift * x^(p-1))^(1/(p-1))),
    default shift (r-1)! * max degree.  Restarts from the uniform point,
    per-edge indicators, and random simplex points; the best value wins.
  target max, p = 1: projected gradient ascent on the standard simplex
    (the sphere quadrant in l^1), multi-start.  No stationarity residual is
    defined at p = 1.
  target min, odd rank: the negated maximizer, with signs flipped on an odd
    transversal of the support when one exists.
  target min, even rank: projected gradient descent on the full sphere with
    sign-randomized restarts; when the support has an odd transversal the
    sign-flipped maximizer is an additional seed and attains the optimum.

For 1 < p < r several distinct positive stationary points may exist, so the
best-of-restarts value is reported with status "best-effort"; "converged"
is reserved for runs whose stationarity tolerance was met and whose regime
(p >= r, or p = 1, or an odd-transversal minimum) pins the global optimum.

Restarts are independent given the seed; serial and parallel execution
reduce candidates identically (largest value wins, ties broken toward the
lexicographically smallest vector), so outputs are bit-identical.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .combinatorics import equivalence_classes, odd_transversal
from .hypergraph import WeightedHypergraph
from .polyform import (PointOnSphere, check_exponent, evaluate, evaluate_many,
                       gradient, lp_norm, normalize_lp)

_STABLE_ITERS = 10
_MAX_EDGE_STARTS = 8


@dataclass(frozen=True)
class SolveOptions:
    """Knobs shared by every solve; defaults favor accuracy over speed."""

    tol: float = 1e-10
    max_iter: int = 100_000
    restarts: int = 32
    shift: float | None = None
    seed: int = 0
    mode: str = "auto"            # auto | fixed-point | projected-gradient
    parallel: bool = False

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"tolerance must be positive, got {self.tol}")
        if self.restarts < 1:
            raise ValueError(f"restarts must be at least 1, got {self.restarts}")
        if self.max_iter < 1:
            raise ValueError(f"iteration cap must be positive, got {self.max_iter}")
        if self.mode not in ("auto", "fixed-point", "projected-gradient"):
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class EigenResult:
    """Solver output: extremal value, unit vector, stationarity defect, diagnostics."""

    value: float
    vector: PointOnSphere
    residual: float               # NaN at p = 1, where no defect is defined
    iterations: int
    restarts_used: int
    status: str                   # "converged" | "best-effort"
    p: float
    target: str                   # "max" | "min"


@dataclass(frozen=True)
class CurvePoint:
    # h is lam_max * n^(r/p): nonincreasing in p with limit r!|G|.  (With the
    # n-factor inverted the quantity is not monotone; the 4-cycle gives
    # 2^(3-8/p), strictly increasing.)
    p: float
    lam_max: float
    lam_min: float
    h: float                      # lam_max * n^(r/p)
    f: float                      # (lam_max / (r! |G|))^p


def _signed_power(x: np.ndarray, q: float) -> np.ndarray:
    return np.sign(x) * np.abs(x) ** q


def eigen_residual(G: WeightedHypergraph, p: float, lam: float, x: np.ndarray) -> float:
    """Max-norm defect of the stationarity system lam*x_k|x_k|^(p-2) = grad_k/r.

    Zero exactly when (lam, x) solves the system.  Undefined at p = 1.
    """
    p = check_exponent(p)
    if p == 1.0:
        raise ValueError("stationarity residual is undefined at p = 1")
    x = np.asarray(x, dtype=np.float64)
    if abs(lp_norm(x, p) - 1.0) > 1e-9:
        raise ValueError("residual requires a unit vector in the l^p norm")
    g = gradient(G, x)
    return float(np.max(np.abs(lam * _signed_power(x, p - 1.0) - g / G.rank)))


def _residual_from_grad(rank: int, p: float, lam: float, x, g) -> float:
    return float(np.max(np.abs(lam * _signed_power(x, p - 1.0) - g / rank)))


def default_shift(G: WeightedHypergraph) -> float:
    """(r-1)! times the maximum weighted degree; keeps the iteration map isotone."""
    return math.factorial(G.rank - 1) * G.max_degree()


# ---------------------------------------------------------------------------
# single-start iterations
# ---------------------------------------------------------------------------

@dataclass
class _Cand:
    x: np.ndarray
    lam: float
    res: float
    iters: int
    tol_met: bool


def _fixed_point_ascent(G, p, x0, rho, tol, max_iter) -> _Cand:
    x = normalize_lp(np.maximum(np.asarray(x0, dtype=np.float64), 0.0), p)
    invq = 1.0 / (p - 1.0)
    pm1 = p - 1.0
    lam_prev = None
    stable = 0
    stalled = 0
    res = math.inf
    lam = 0.0
    it = 0

    def finish(tol_met, fresh=False):
        # report the exactly accumulated value at the final iterate
        lam_f = evaluate(G, x)
        res_f = _residual_from_grad(G.rank, p, lam_f, x, gradient(G, x)) if fresh else res
        return _Cand(x, lam_f, res_f, it, tol_met)

    for it in range(1, max_iter + 1):
        g = gradient(G, x)
        lam = float(x @ g) / G.rank  # Euler identity: value at the iterate
        res = _residual_from_grad(G.rank, p, lam, x, g)
        if lam_prev is not None and abs(lam - lam_prev) <= tol * max(1.0, abs(lam)):
            if res <= tol:
                stable += 1
                if stable >= _STABLE_ITERS:
                    return finish(True)
            if abs(lam - lam_prev) <= 0.01 * tol * max(1.0, abs(lam)):
                stalled += 1
                if stalled >= 5 * _STABLE_ITERS:
                    return finish(res <= tol)
            else:
                stalled = 0
        else:
            stable = 0
            stalled = 0
        step = g / G.rank + rho * x ** pm1
        top = step.max()
        if top <= 0.0:
            return finish(res <= tol)
        lam_prev = lam
        x = normalize_lp((step / top) ** invq, p)
    return finish(False, fresh=True)


def _pgd_sphere(G, p, x0, tol, max_iter, sense, nonneg) -> _Cand:
    """Projected gradient with renormalization retraction and Armijo halving.

    The step direction is the gradient projected onto the sphere's tangent
    space (normal direction sign(x)|x|^(p-1)), which makes the retracted
    step a guaranteed ascent/descent direction away from stationary points.
    """
    x = np.asarray(x0, dtype=np.float64)
    if nonneg:
        x = np.maximum(x, 0.0)
    x = normalize_lp(x, p)
    eta = None
    lam_prev = None
    stable = 0
    stalled = 0
    it = 0
    lam = evaluate(G, x)
    res = math.inf
    for it in range(1, max_iter + 1):
        g = gradient(G, x)
        res = _residual_from_grad(G.rank, p, lam, x, g)
        if lam_prev is not None and abs(lam - lam_prev) <= tol * max(1.0, abs(lam)):
            if res <= tol:
                stable += 1
                if stable >= _STABLE_ITERS:
                    return _Cand(x, lam, res, it, True)
            if abs(lam - lam_prev) <= 0.01 * tol * max(1.0, abs(lam)):
                stalled += 1
                if stalled >= 5 * _STABLE_ITERS:
                    return _Cand(x, lam, res, it, res <= tol)
            else:
                stalled = 0
        else:
            stable = 0
            stalled = 0
        normal = _signed_power(x, p - 1.0)
        nn = float(normal @ normal)
        d = g - (float(g @ normal) / nn) * normal if nn > 0 else g
        if eta is None:
            eta = 1.0 / max(1.0, float(np.abs(d).max()))
        accepted = False
        first_try = True
        for _ in range(60):
            trial = x + sense * eta * d
            if nonneg:
                trial = np.maximum(trial, 0.0)
            nrm = lp_norm(trial, p)
            if nrm > 0.0:
                trial = trial / nrm
                lam_t = evaluate(G, trial)
                # require progress above the float-noise floor, else the
                # iteration churns at a stationary point
                if sense * (lam_t - lam) > 1e-14 * max(1.0, abs(lam)):
                    lam_prev, x, lam = lam, trial, lam_t
                    accepted = True
                    if first_try:
                        eta *= 1.5
                    break
            eta *= 0.5
            first_try = False
        if not accepted:
            return _Cand(x, lam, res, it, res <= tol)
    res = _residual_from_grad(G.rank, p, lam, x, gradient(G, x))
    return _Cand(x, lam, res, it, False)


def _project_simplex(v: np.ndarray) -> np.ndarray:
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    ks = np.arange(1, v.size + 1)
    mask = u - css / ks > 0
    rho = int(np.nonzero(mask)[0][-1])
    theta = css[rho] / (rho + 1)
    return np.maximum(v - theta, 0.0)


def _pgd_simplex(n, rank, idx, w, y0, tol, max_iter, sense) -> _Cand:
    """Projected gradient over the probability simplex; weights may be signed."""
    fact = float(math.factorial(rank))

    def f(y):
        if idx.shape[0] == 0:
            return 0.0
        return fact * float(np.prod(y[idx], axis=1) @ w)

    def grad(y):
        g = np.zeros(n)
        if idx.shape[0] == 0:
            return g
        Y = y[idx]
        m, r = Y.shape
        pref = np.ones_like(Y)
        suf = np.ones_like(Y)
        for j in range(1, r):
            pref[:, j] = pref[:, j - 1] * Y[:, j - 1]
            suf[:, r - 1 - j] = suf[:, r - j] * Y[:, r - j]
        np.add.at(g, idx.ravel(), (w[:, None] * pref * suf).ravel())
        return fact * g

    y = _project_simplex(np.asarray(y0, dtype=np.float64))
    val = f(y)
    val_prev = None
    eta = None
    stable = 0
    it = 0
    for it in range(1, max_iter + 1):
        g = grad(y)
        if val_prev is not None and abs(val - val_prev) <= tol * max(1.0, abs(val)):
            stable += 1
            if stable >= _STABLE_ITERS:
                return _Cand(y, val, math.nan, it, True)
        else:
            stable = 0
        if eta is None:
            eta = 1.0 / max(1.0, float(np.abs(g).max()))
        accepted = False
        first_try = True
        for _ in range(60):
            trial = _project_simplex(y + sense * eta * g)
            val_t = f(trial)
            if sense * (val_t - val) > 1e-14 * max(1.0, abs(val)):
                val_prev, y, val = val, trial, val_t
                accepted = True
                if first_try:
                    eta *= 1.5
                break
            eta *= 0.5
            first_try = False
        if not accepted:
            return _Cand(y, val, math.nan, it, True)
    return _Cand(y, val, math.nan, it, False)


# ---------------------------------------------------------------------------
# restart orchestration
# ---------------------------------------------------------------------------

def _slsqp_simplex_refine(n, rank, idx, w, y0, sense) -> _Cand | None:
    """Quadratic-rate cleanup of a simplex solution; the first-order method
    leaves entry errors near the square root of the value tolerance."""
    from scipy.optimize import minimize

    fact = float(math.factorial(rank))

    def f(y):
        if idx.shape[0] == 0:
            return 0.0
        return fact * float(np.prod(y[idx], axis=1) @ w)

    def grad(y):
        g = np.zeros(n)
        if idx.shape[0] == 0:
            return g
        Y = y[idx]
        m, r = Y.shape
        pref = np.ones_like(Y)
        suf = np.ones_like(Y)
        for j in range(1, r):
            pref[:, j] = pref[:, j - 1] * Y[:, j - 1]
            suf[:, r - 1 - j] = suf[:, r - j] * Y[:, r - j]
        np.add.at(g, idx.ravel(), (w[:, None] * pref * suf).ravel())
        return fact * g

    out = minimize(lambda y: -sense * f(y), y0, jac=lambda y: -sense * grad(y),
                   method="SLSQP", bounds=[(0.0, 1.0)] * n,
                   constraints=[{"type": "eq", "fun": lambda y: y.sum() - 1.0,
                                 "jac": lambda y: np.ones(n)}],
                   options={"maxiter": 300, "ftol": 1e-14})
    y = np.maximum(out.x, 0.0)
    s = y.sum()
    if s <= 0:
        return None
    y = y / s
    return _Cand(y, f(y), math.nan, 0, True)


def _refine_tied_simplex(cands, n, rank, idx, w, sense, tol):
    """Replace every value-tied candidate by its quadratic-rate refinement."""
    best = max(sense * c.lam for c in cands)
    out = []
    for c in cands:
        if sense * c.lam >= best - tol:
            refined = _slsqp_simplex_refine(n, rank, idx, w, np.abs(c.x), sense)
            if refined is not None and sense * refined.lam >= sense * c.lam - 1e-12:
                out.append(_Cand(refined.x, refined.lam, math.nan, c.iters, True))
                continue
        out.append(c)
    return out


def _random_simplex_points(rng, count, n):
    pts = []
    for _ in range(count):
        y = rng.exponential(1.0, n)
        s = y.sum()
        pts.append(y / s if s > 0 else np.full(n, 1.0 / n))
    return pts


def _edge_start_budget(opts, n_structured, m):
    """Cap edge-indicator starts so random restarts always keep a share."""
    reserve = max(1, opts.restarts // 3)
    room = opts.restarts - n_structured - reserve
    return max(min(m, _MAX_EDGE_STARTS, room), 0)


def _max_starts(G, p, opts, extra):
    """Start vectors on the nonnegative sphere: uniform, warm, edges, randoms."""
    n = G.n_vertices
    starts = [np.full(n, n ** (-1.0 / p))]
    for v in extra:
        v = np.abs(np.asarray(v, dtype=np.float64))
        if v.shape == (n,) and lp_norm(v, p) > 0:
            starts.append(normalize_lp(v, p))
    for e in G.edges()[:_edge_start_budget(opts, len(starts), G.num_edges)]:
        x = np.zeros(n)
        x[list(e)] = 1.0
        starts.append(normalize_lp(x, p))
    rng = np.random.default_rng(np.random.SeedSequence(opts.seed))
    n_random = max(opts.restarts - len(starts), 1)
    starts.extend(y ** (1.0 / p) for y in _random_simplex_points(rng, n_random, n))
    return starts[:max(opts.restarts, 1 + len(extra))]


def _min_starts(G, p, opts, extra, flip_seed):
    n = G.n_vertices
    starts = []
    if flip_seed is not None:
        starts.append(flip_seed)
    for v in extra:
        v = np.asarray(v, dtype=np.float64)
        if v.shape == (n,) and lp_norm(v, p) > 0:
            starts.append(normalize_lp(v, p))
    n_structured = len(starts)
    for e in G.edges()[:_edge_start_budget(opts, n_structured, G.num_edges)]:
        x = np.zeros(n)
        x[list(e)] = 1.0
        x[e[0]] = -1.0
        starts.append(normalize_lp(x, p))
    rng = np.random.default_rng(np.random.SeedSequence([opts.seed, 1]))
    n_random = max(opts.restarts - len(starts), 1)
    for y in _random_simplex_points(rng, n_random, n):
        signs = rng.integers(0, 2, n) * 2 - 1
        starts.append(signs * y ** (1.0 / p))
    return starts[:max(opts.restarts, n_structured + 1)]


def _run_candidates(jobs, parallel):
    if parallel and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=min(8, len(jobs))) as ex:
            return list(ex.map(lambda fn: fn(), jobs))
    return [fn() for fn in jobs]


def _class_polish(G, p, cand: _Cand, sense, tol) -> _Cand:
    """Average the vector over vertex-equivalence classes, keep if not worse.

    Stationary vectors are constant on the classes, so for a converged run
    this is a no-op up to roundoff; it removes restart-to-restart jitter.
    """
    classes = equivalence_classes(G)
    if all(len(c) == 1 for c in classes):
        return cand
    y = cand.x.copy()
    for cls in classes:
        if len(cls) > 1:
            y[list(cls)] = y[list(cls)].mean()
    if lp_norm(y, p) == 0.0:
        return cand
    y = normalize_lp(y, p)
    lam_y = evaluate(G, y)
    g = gradient(G, y)
    res_y = _residual_from_grad(G.rank, p, lam_y, y, g)
    if sense * (lam_y - cand.lam) >= -10 * tol * max(1.0, abs(cand.lam)) \
            and res_y <= max(cand.res, tol):
        return _Cand(y, lam_y, res_y, cand.iters, cand.tol_met)
    return cand


def _pick(cands: list[_Cand], sense: float, tol: float) -> _Cand:
    best = max(sense * c.lam for c in cands)
    pool = [c for c in cands if sense * c.lam >= best - tol]
    if any(c.tol_met for c in pool):
        pool = [c for c in pool if c.tol_met]
    return min(pool, key=lambda c: tuple(c.x.tolist()))


def _zero_result(G, p, target) -> EigenResult:
    vec = PointOnSphere(np.zeros(G.n_vertices), p, normalized=False)
    return EigenResult(0.0, vec, 0.0, 0, 0, "converged", p, target)


def solve_restarts(G: WeightedHypergraph, p: float, target: str = "max",
                   opts: SolveOptions | None = None,
                   initial_vectors=()) -> list[tuple[float, np.ndarray, float]]:
    """All per-restart outcomes (value, vector, residual), for diagnostics."""
    opts = opts or SolveOptions()
    if target == "max":
        cands = _max_candidates(G, check_exponent(p), opts, initial_vectors)
    elif target == "min":
        cands = _min_candidates(G, check_exponent(p), opts, initial_vectors)[0]
    else:
        raise ValueError(f"target must be 'max' or 'min', got {target!r}")
    return [(c.lam, c.x, c.res) for c in cands]


def _max_candidates(G, p, opts, extra) -> list[_Cand]:
    if p == 1.0:
        idx, w = G.arrays()
        n = G.n_vertices
        starts = [np.full(n, 1.0 / n)]
        for v in extra:
            v = np.abs(np.asarray(v, dtype=np.float64))
            if v.shape == (n,) and v.sum() > 0:
                starts.append(v / v.sum())
        for e in G.edges()[:_edge_start_budget(opts, len(starts), G.num_edges)]:
            y = np.zeros(n)
            y[list(e)] = 1.0 / G.rank
            starts.append(y)
        rng = np.random.default_rng(np.random.SeedSequence(opts.seed))
        starts.extend(_random_simplex_points(rng, max(opts.restarts - len(starts), 1), n))
        starts = starts[:max(opts.restarts, 1 + len(extra))]
        jobs = [lambda y0=y0: _pgd_simplex(n, G.rank, idx, w, y0,
                                           opts.tol, opts.max_iter, +1.0)
                for y0 in starts]
        cands = _run_candidates(jobs, opts.parallel)
        return _refine_tied_simplex(cands, n, G.rank, idx, w, +1.0, opts.tol)
    rho = default_shift(G) if opts.shift is None else float(opts.shift)
    starts = _max_starts(G, p, opts, extra)
    if opts.mode == "projected-gradient":
        jobs = [lambda x0=x0: _pgd_sphere(G, p, x0, opts.tol, opts.max_iter, +1.0, True)
                for x0 in starts]
    else:
        jobs = [lambda x0=x0: _fixed_point_ascent(G, p, x0, rho, opts.tol, opts.max_iter)
                for x0 in starts]
    cands = _run_candidates(jobs, opts.parallel)
    return [_class_polish(G, p, c, +1.0, opts.tol) for c in cands]


def lambda_max(G: WeightedHypergraph, p: float, opts: SolveOptions | None = None,
               initial_vectors=()) -> EigenResult:
    """Best maximizer of the edge polynomial over the unit l^p sphere."""
    p = check_exponent(p)
    opts = opts or SolveOptions()
    if G.n_vertices == 0 or G.num_edges == 0:
        return _zero_result(G, p, "max")
    cands = _max_candidates(G, p, opts, initial_vectors)
    win = _pick(cands, +1.0, opts.tol)
    certified = p == 1.0 or p >= G.rank
    status = "converged" if (win.tol_met and certified) else "best-effort"
    return EigenResult(win.lam, PointOnSphere(win.x, p, normalized=False),
                       win.res, win.iters, len(cands), status, p, "max")


def _flip_on_odd_transversal(G, x):
    ot = odd_transversal(G)
    y = -np.asarray(x, dtype=np.float64)
    if ot is not None:
        y = np.asarray(x, dtype=np.float64).copy()
        y[list(ot)] = -y[list(ot)]
    return y, ot


def _min_candidates(G, p, opts, extra):
    """Candidates for the minimum; also returns the certification flag."""
    r = G.rank
    if r % 2 == 1:
        top = lambda_max(G, p, opts, initial_vectors=extra)
        y, _ = _flip_on_odd_transversal(G, top.vector.coords)
        lam = evaluate(G, y)
        res = top.residual if p > 1.0 else math.nan
        cand = _Cand(y, lam, res, top.iterations, top.status == "converged")
        return [cand], top.status == "converged"
    ot = odd_transversal(G)
    flip_seed = None
    certified = False
    extra = list(extra)
    if ot is not None:
        top = lambda_max(G, p, opts)
        flipped = top.vector.coords.copy()
        flipped[list(ot)] = -flipped[list(ot)]
        flip_seed = flipped
        certified = top.status == "converged"
    if p == 1.0:
        cands = _min_candidates_p1(G, opts, flip_seed)
        return cands, certified
    starts = _min_starts(G, p, opts, extra, flip_seed)
    jobs = [lambda x0=x0: _pgd_sphere(G, p, x0, opts.tol, opts.max_iter, -1.0, False)
            for x0 in starts]
    cands = _run_candidates(jobs, opts.parallel)
    return [_class_polish(G, p, c, -1.0, opts.tol) for c in cands], certified


def _min_candidates_p1(G, opts, flip_seed):
    """Even-rank minimum at p = 1: sign patterns times a simplex ascent.

    All sign patterns are enumerated for n <= 6 (up to global sign);
    otherwise random patterns plus the odd-transversal pattern are used.
    """
    n = G.n_vertices
    idx, w = G.arrays()
    patterns = set()
    if flip_seed is not None:
        patterns.add(tuple(-1 if v < 0 else 1 for v in flip_seed))
    if n <= 6:
        for bits in range(1 << (n - 1)):
            patterns.add((1,) + tuple(1 - 2 * (bits >> i & 1) for i in range(n - 1)))
    else:
        rng = np.random.default_rng(np.random.SeedSequence([opts.seed, 2]))
        for _ in range(max(opts.restarts, 4)):
            patterns.add(tuple(int(s) for s in rng.integers(0, 2, n) * 2 - 1))
        for e in G.edges()[:_MAX_EDGE_STARTS]:
            s = [1] * n
            s[e[0]] = -1
            patterns.add(tuple(s))
    rng2 = np.random.default_rng(np.random.SeedSequence([opts.seed, 3]))
    raw = []
    for s in sorted(patterns):
        sv = np.array(s, dtype=np.float64)
        sw = w * np.prod(sv[idx], axis=1)
        starts = [np.full(n, 1.0 / n)] + _random_simplex_points(rng2, 1, n)
        if flip_seed is not None and tuple(-1 if v < 0 else 1 for v in flip_seed) == s:
            starts.insert(0, np.abs(flip_seed) / np.abs(flip_seed).sum())
        for y0 in starts:
            c = _pgd_simplex(n, G.rank, idx, sw, y0, opts.tol, opts.max_iter, -1.0)
            raw.append((c, sv, sw))
    best = min(c.lam for c, _, _ in raw)
    cands = []
    for c, sv, sw in raw:
        if c.lam <= best + opts.tol:
            refined = _slsqp_simplex_refine(n, G.rank, idx, sw, c.x, -1.0)
            if refined is not None and refined.lam <= c.lam + 1e-12:
                cands.append(_Cand(sv * refined.x, refined.lam, math.nan,
                                   c.iters, True))
                continue
        cands.append(_Cand(sv * c.x, c.lam, math.nan, c.iters, c.tol_met))
    return cands


def lambda_min(G: WeightedHypergraph, p: float, opts: SolveOptions | None = None,
               initial_vectors=()) -> EigenResult:
    """Best minimizer of the edge polynomial over the unit l^p sphere.

    Odd rank reduces to the negated maximum.  Even rank runs sign-randomized
    descent; an odd transversal of the support certifies the optimum as the
    negated maximum.
    """
    p = check_exponent(p)
    opts = opts or SolveOptions()
    if G.n_vertices == 0 or G.num_edges == 0:
        return _zero_result(G, p, "min")
    cands, certified = _min_candidates(G, p, opts, initial_vectors)
    win = _pick(cands, -1.0, opts.tol)
    status = "converged" if (win.tol_met and certified) else "best-effort"
    return EigenResult(win.lam, PointOnSphere(win.x, p, normalized=False),
                       win.res, win.iters, len(cands), status, p, "min")


# ---------------------------------------------------------------------------
# sampling oracle
# ---------------------------------------------------------------------------

def brute_force_lambda(G: WeightedHypergraph, p: float, target: str = "max",
                       samples: int = 10_000, seed: int = 0) -> float:
    """Independent sampling-plus-polish estimate of the extremal value.

    Draws sign-symmetric points on the l^p sphere, adds every -1/0/+1
    support pattern (small n), then locally polishes the best 100 points
    with a derivative-free method applied to the normalized objective.
    The result is a one-sided certificate: a lower bound for the maximum,
    an upper bound for the minimum.
    """
    from scipy.optimize import minimize

    p = check_exponent(p)
    if target not in ("max", "min"):
        raise ValueError(f"target must be 'max' or 'min', got {target!r}")
    n = G.n_vertices
    if n == 0 or G.num_edges == 0:
        return 0.0
    sense = 1.0 if target == "max" else -1.0
    rng = np.random.default_rng(seed)
    S = max(int(samples), 100)
    mags = rng.gamma(1.0 / p, 1.0, size=(S, n)) ** (1.0 / p)
    signs = rng.integers(0, 2, size=(S, n)) * 2.0 - 1.0
    X = mags * signs
    norms = np.sum(np.abs(X) ** p, axis=1) ** (1.0 / p)
    X /= norms[:, None]
    if n <= 8:
        pats = np.array([v for v in np.ndindex((3,) * n)], dtype=np.float64) - 1.0
        pats = pats[np.any(pats != 0.0, axis=1)]
        pnorm = np.sum(np.abs(pats) ** p, axis=1) ** (1.0 / p)
        X = np.vstack([X, pats / pnorm[:, None]])
    vals = evaluate_many(G, X)
    order = np.argsort(-sense * vals, kind="stable")

    def objective(z):
        nrm = lp_norm(z, p)
        if nrm == 0.0:
            return 0.0
        return -sense * evaluate(G, z / nrm)

    best = float(sense * vals[order[0]])
    for i in order[:100]:
        out = minimize(objective, X[i], method="Powell",
                       options={"maxiter": 10, "xtol": 1e-10, "ftol": 1e-12})
        best = max(best, -float(out.fun))
    return sense * best


# ---------------------------------------------------------------------------
# envelopes, curves, modulus check
# ---------------------------------------------------------------------------

def collatz_wielandt(G: WeightedHypergraph, p: float, x: np.ndarray) -> tuple[float, float]:
    """Envelope (min_k, max_k) of grad_k/(r * x_k^(p-1)) for a positive unit vector.

    The lower end never exceeds the maximum value; the upper end bounds it
    from above for connected graphs when p >= r.
    """
    p = check_exponent(p)
    if p == 1.0:
        raise ValueError("the envelope requires p > 1")
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (G.n_vertices,):
        raise ValueError(f"vector has shape {x.shape}, expected ({G.n_vertices},)")
    if np.any(x <= 0.0):
        raise ValueError("the envelope requires a strictly positive vector")
    if abs(lp_norm(x, p) - 1.0) > 1e-9:
        raise ValueError("the envelope requires a unit vector in the l^p norm")
    quot = gradient(G, x) / G.rank * x ** (1.0 - p)
    return float(quot.min()), float(quot.max())


def lambda_curve(G: WeightedHypergraph, p_grid, opts: SolveOptions | None = None
                 ) -> list[CurvePoint]:
    """Solve along an ascending grid of exponents with warm starts."""
    grid = [check_exponent(q) for q in p_grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("exponent grid must be strictly ascending")
    opts = opts or SolveOptions()
    n, r = G.n_vertices, G.rank
    size = G.size()
    rows: list[CurvePoint] = []
    warm_max: list[np.ndarray] = []
    warm_min: list[np.ndarray] = []
    for q in grid:
        top = lambda_max(G, q, opts, initial_vectors=warm_max)
        bot = lambda_min(G, q, opts, initial_vectors=warm_min)
        warm_max = [top.vector.coords]
        warm_min = [bot.vector.coords]
        h = top.value * n ** (r / q) if n else 0.0
        f = (top.value / (math.factorial(r) * size)) ** q if size > 0 else 0.0
        rows.append(CurvePoint(q, top.value, bot.value, h, f))
    return rows


def algebraic_modulus_check(G: WeightedHypergraph, lam: float, x: np.ndarray,
                            opts: SolveOptions | None = None,
                            residual_tol: float = 1e-6) -> bool:
    """True when |lam| is at most the solved maximum at p = r, plus 1e-6.

    The pair (lam, x) must satisfy the p = r stationarity system to within
    residual_tol; any such modulus is dominated by the maximum value.
    """
    res = eigen_residual(G, float(G.rank), lam, x)
    if res > residual_tol:
        raise ValueError(f"(lam, x) is not an approximate stationary pair "
                         f"(residual {res:.3e} > {residual_tol:g})")
    top = lambda_max(G, float(G.rank), opts)
    return abs(lam) <= top.value + 1e-6
