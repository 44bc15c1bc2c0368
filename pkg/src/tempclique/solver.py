"""Maximum delta-temporal-clique solvers.

Three routes with one contract: find a largest vertex set that is complete in
the underlying graph with all internal labels inside a closed width-delta
window.

* bruteforce: subset enumeration, guarded to n <= 20; the reference oracle.
* exact: every optimum's label interval starts at some edge label, so sweep
  the windows [label(e), label(e) + delta] anchored at each edge e in label
  order, maintaining the window graph incrementally as a bitset adjacency,
  and inside each window search only cliques containing the anchor edge's
  endpoints with a branch-and-bound using greedy-coloring upper bounds.
* heuristic: randomized greedy plus (1,2)-swap local search over a spread of
  anchored windows, vectorized with numpy; valid but not necessarily optimal.

All routes re-validate their witness through `delta_clique_check` before
returning, so a returned clique is always sound.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb

import numpy as np

from .graphs import (
    CliqueResult,
    StaticGraph,
    TemporalGraph,
    delta_clique_check,
)
from .seeds import derive_seed

BRUTEFORCE_MAX_N = 20

_VALID_MODES = ("bruteforce", "exact", "heuristic")


class InfeasibleConfigError(ValueError):
    """The requested configuration cannot be run within its guard rails."""


@dataclass
class SolverConfig:
    """Knobs shared by the solve entry points.

    The heuristic defaults were tuned on complete instances with n = 1000,
    delta = 0.5 (they reliably reach size >= 12 there); smaller instances
    are insensitive to them.
    """

    mode: str = "exact"
    time_budget: float | None = None
    restarts: int = 8
    anchors: int = 24
    improve_rounds: int = 120
    plateau_moves: int = 30
    greedy_pool: int = 3
    allow_oversize_bruteforce: bool = False

    def __post_init__(self) -> None:
        if self.mode not in _VALID_MODES:
            raise ValueError(f"mode must be one of {_VALID_MODES}")
        if self.time_budget is not None and self.time_budget < 0:
            raise ValueError("time_budget must be nonnegative")
        for name in ("restarts", "anchors", "improve_rounds", "plateau_moves", "greedy_pool"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")


@dataclass(frozen=True)
class SolveResult:
    """A witnessed clique plus run metadata."""

    clique: CliqueResult
    optimal: bool
    mode: str
    wall_time: float


class _SearchState:
    __slots__ = ("best_size", "best", "deadline", "timed_out", "tick")

    def __init__(self, best_size: int, deadline: float | None):
        self.best_size = best_size
        self.best: tuple[int, ...] | None = None
        self.deadline = deadline
        self.timed_out = False
        self.tick = 0


def _color_order(adj: list[int], P: int) -> tuple[list[int], list[int]]:
    """Greedy coloring of the candidate set P; vertices sorted by color class.

    bounds[i] is an upper bound on the largest clique inside order[:i + 1].
    """
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    rest = P
    while rest:
        color += 1
        Q = rest
        while Q:
            b = Q & -Q
            w = b.bit_length() - 1
            rest ^= b
            Q = (Q ^ b) & ~adj[w]
            order.append(w)
            bounds.append(color)
    return order, bounds


def _expand(adj: list[int], P: int, rstack: list[int], state: _SearchState) -> None:
    """Tomita-style branch and bound over candidates P extending clique rstack."""
    if state.deadline is not None:
        state.tick += 1
        if state.tick >= 1024:
            state.tick = 0
            if time.perf_counter() > state.deadline:
                state.timed_out = True
        if state.timed_out:
            return
    rsize = len(rstack)
    order, bounds = _color_order(adj, P)
    for i in range(len(order) - 1, -1, -1):
        if rsize + bounds[i] <= state.best_size:
            return
        w = order[i]
        rstack.append(w)
        newP = P & adj[w]
        if newP:
            _expand(adj, newP, rstack, state)
        elif rsize + 1 > state.best_size:
            state.best_size = rsize + 1
            state.best = tuple(rstack)
        rstack.pop()
        P &= ~(1 << w)
        if state.timed_out:
            return


def _peel_degeneracy(adj: list[int], n: int) -> int:
    """Graph degeneracy by repeated min-degree peeling (quadratic, small n)."""
    alive = (1 << n) - 1
    deg = [adj[v].bit_count() for v in range(n)]
    best = 0
    for _ in range(n):
        vmin, dmin = -1, n + 1
        Q = alive
        while Q:
            b = Q & -Q
            w = b.bit_length() - 1
            Q ^= b
            if deg[w] < dmin:
                vmin, dmin = w, deg[w]
        best = max(best, dmin)
        alive ^= 1 << vmin
        Q = adj[vmin] & alive
        while Q:
            b = Q & -Q
            w = b.bit_length() - 1
            Q ^= b
            deg[w] -= 1
    return best


def greedy_static_clique(g: StaticGraph) -> tuple[int, ...]:
    """Deterministic greedy clique: repeatedly take the candidate of maximum
    degree within the remaining candidate set (smallest id on ties)."""
    adj = g.adjacency_masks
    cand = (1 << g.n) - 1
    clique: list[int] = []
    while cand:
        best_v, best_d = -1, -1
        Q = cand
        while Q:
            b = Q & -Q
            w = b.bit_length() - 1
            Q ^= b
            d = (adj[w] & cand).bit_count()
            if d > best_d:
                best_v, best_d = w, d
        clique.append(best_v)
        cand &= adj[best_v]
    return tuple(sorted(clique))


def static_max_clique(
    g: StaticGraph, lower_bound: int = 0, time_budget: float | None = None
) -> tuple[tuple[int, ...], bool]:
    """Exact maximum clique of a static graph (branch and bound with coloring).

    Returns (vertices, optimal).  With a nonzero `lower_bound` the search only
    reports cliques strictly larger than the bound and returns () when none
    exists; `optimal` is False only when the time budget truncated the search.
    """
    if g.n == 0:
        return (), True
    adj = g.adjacency_masks
    deadline = time.perf_counter() + time_budget if time_budget is not None else None
    if lower_bound > 0 and _peel_degeneracy(adj, g.n) + 1 <= lower_bound:
        return (), True
    state = _SearchState(lower_bound, deadline)
    seed_clique = greedy_static_clique(g)
    if len(seed_clique) > state.best_size:
        state.best_size = len(seed_clique)
        state.best = seed_clique
    _expand(adj, (1 << g.n) - 1, [], state)
    if state.best is None:
        return (), not state.timed_out
    return tuple(sorted(state.best)), not state.timed_out


def _mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def max_delta_clique_bruteforce(
    tg: TemporalGraph, delta: float, config: SolverConfig | None = None
) -> CliqueResult:
    """Reference solver: enumerate all vertex subsets.

    Ties on size break to the lexicographically smallest sorted vertex tuple.
    Refuses n > 20 unless config.allow_oversize_bruteforce is set.
    """
    cfg = config or SolverConfig(mode="bruteforce")
    if tg.n > BRUTEFORCE_MAX_N and not cfg.allow_oversize_bruteforce:
        raise InfeasibleConfigError(
            f"bruteforce subset enumeration refuses n={tg.n} > {BRUTEFORCE_MAX_N}"
        )
    if not 0.0 <= delta <= 1.0:
        raise ValueError("delta must lie in [0, 1]")
    n = tg.n
    adj = [0] * n
    lab: dict[int, float] = {}  # keyed by the two-bit mask of the pair
    for a, b, t in tg.edge_list():
        adj[a] |= 1 << b
        adj[b] |= 1 << a
        lab[(1 << a) | (1 << b)] = t
    best_verts: tuple[int, ...] = (0,)
    best_size = 1
    best_lo = best_hi = 0.0
    for mask in range(3, 1 << n):
        size = mask.bit_count()
        if size < 2 or size < best_size:
            continue
        rest = mask
        ok = True
        while rest:
            b = rest & -rest
            a = b.bit_length() - 1
            rest ^= b
            if (mask ^ b) & ~adj[a]:
                ok = False
                break
        if not ok:
            continue
        verts = _mask_vertices(mask)
        lo, hi = 2.0, -1.0
        for i, a in enumerate(verts):
            for b in verts[i + 1 :]:
                t = lab[(1 << a) | (1 << b)]
                if t < lo:
                    lo = t
                if t > hi:
                    hi = t
            if hi - lo > delta:
                ok = False
                break
        if not ok:
            continue
        if size > best_size or (size == best_size and verts < best_verts):
            best_verts, best_size = verts, size
            best_lo, best_hi = lo, hi
    return CliqueResult(best_verts, best_size, best_lo, best_hi)


def max_delta_clique_exact(
    tg: TemporalGraph, delta: float, config: SolverConfig | None = None
) -> SolveResult:
    """Exact solver via the anchored-window sweep.

    Any delta-clique's smallest internal label is itself an edge label, so
    sweeping the closed windows [label(e), label(e) + delta] over all edges e
    (in label order) and searching, inside each window, only cliques that
    contain e's endpoints visits every optimum at least once.  The window
    graph is maintained incrementally as edges enter and leave.
    """
    cfg = config or SolverConfig(mode="exact")
    if not 0.0 <= delta <= 1.0:
        raise ValueError("delta must lie in [0, 1]")
    t_start = time.perf_counter()
    n, m = tg.n, tg.m
    deadline = t_start + cfg.time_budget if cfg.time_budget is not None else None
    best_verts: tuple[int, ...] = (0,)
    best_size = 1
    optimal = True
    if m > 0:
        order = np.argsort(tg.labels, kind="stable")
        su = tg.u[order].tolist()
        sv = tg.v[order].tolist()
        slab = tg.labels[order].tolist()
        adj = [0] * n
        hi = 0
        state = _SearchState(best_size, deadline)
        for a in range(m):
            limit = slab[a] + delta
            while hi < m and slab[hi] <= limit:
                adj[su[hi]] |= 1 << sv[hi]
                adj[sv[hi]] |= 1 << su[hi]
                hi += 1
            if a > 0:
                adj[su[a - 1]] &= ~(1 << sv[a - 1])
                adj[sv[a - 1]] &= ~(1 << su[a - 1])
            if deadline is not None and time.perf_counter() > deadline:
                optimal = False
                break
            u0, v0 = su[a], sv[a]
            if state.best_size < 2:
                state.best_size = 2
                state.best = (u0, v0)
            # a clique of size s+1 needs C(s+1, 2) edges inside the window
            if hi - a < comb(state.best_size + 1, 2):
                continue
            cands = adj[u0] & adj[v0]
            if cands.bit_count() + 2 <= state.best_size:
                continue
            _expand(adj, cands, [u0, v0], state)
            if state.timed_out:
                optimal = False
                break
        if state.best is not None:
            best_verts = tuple(sorted(state.best))
            best_size = state.best_size
    witness = delta_clique_check(tg, best_verts, delta)
    return SolveResult(witness, optimal, "exact", time.perf_counter() - t_start)


def _pick_anchor_rows(counts: np.ndarray, cap: int) -> np.ndarray:
    """Spread `cap` anchor indices over the sorted-label range, taking the
    densest window start inside each slice."""
    m = counts.size
    if m <= cap:
        return np.arange(m)
    edges = np.linspace(0, m, cap + 1).astype(int)
    picks = []
    for j in range(cap):
        lo, hi = edges[j], edges[j + 1]
        if lo >= hi:
            continue
        picks.append(lo + int(np.argmax(counts[lo:hi])))
    return np.unique(np.array(picks, dtype=np.int64))


def _greedy_in_window(
    W: np.ndarray, deg: np.ndarray, rng: np.random.Generator, pool_size: int
) -> list[int]:
    n = deg.size
    start = int(rng.integers(n))
    clique = [start]
    cand = W[start].copy()
    while True:
        idxs = np.flatnonzero(cand)
        if idxs.size == 0:
            return clique
        if idxs.size <= 96:
            score = W[np.ix_(idxs, idxs)].sum(1)
        else:
            score = deg[idxs]
        p = min(pool_size, idxs.size)
        cutoff = np.partition(score, idxs.size - p)[idxs.size - p]
        pool = idxs[score >= cutoff]
        v = int(pool[rng.integers(pool.size)])
        clique.append(v)
        cand &= W[v]


def _local_improve(
    W: np.ndarray,
    deg: np.ndarray,
    clique: list[int],
    rng: np.random.Generator,
    cfg: SolverConfig,
) -> list[int]:
    """Add-moves, (1,2)-swaps, and bounded plateau (1,1)-swaps on the window graph."""
    n = deg.size
    in_c = np.zeros(n, dtype=bool)
    in_c[clique] = True
    cnt = W[clique].sum(0)
    plateau_left = cfg.plateau_moves
    for _ in range(cfg.improve_rounds):
        k = len(clique)
        addable = np.flatnonzero(~in_c & (cnt == k))
        if addable.size:
            v = int(addable[np.argmax(deg[addable])])
            clique.append(v)
            in_c[v] = True
            cnt = cnt + W[v]
            continue
        near = np.flatnonzero(~in_c & (cnt == k - 1))
        if near.size == 0:
            break
        mem = np.array(clique)
        missed = np.argmin(W[np.ix_(near, mem)], axis=1)
        swapped = False
        for pos in np.unique(missed):
            grp = near[missed == pos]
            if grp.size < 2:
                continue
            hit = np.argwhere(W[np.ix_(grp, grp)])
            if hit.size:
                x, y = int(grp[hit[0][0]]), int(grp[hit[0][1]])
                v = int(mem[pos])
                clique.remove(v)
                in_c[v] = False
                clique.extend([x, y])
                in_c[x] = in_c[y] = True
                cnt = cnt - W[v] + W[x] + W[y]
                swapped = True
                break
        if swapped:
            continue
        if plateau_left > 0:
            plateau_left -= 1
            x = int(near[rng.integers(near.size)])
            v = int(mem[np.argmin(W[x, mem])])
            clique.remove(v)
            in_c[v] = False
            clique.append(x)
            in_c[x] = True
            cnt = cnt - W[v] + W[x]
            continue
        break
    return clique


def max_delta_clique_heuristic(
    tg: TemporalGraph, delta: float, config: SolverConfig | None = None, seed: int = 0
) -> SolveResult:
    """Randomized greedy + local search; valid witness, no optimality claim.

    Deterministic given (graph, delta, config, seed).
    """
    cfg = config or SolverConfig(mode="heuristic")
    if not 0.0 <= delta <= 1.0:
        raise ValueError("delta must lie in [0, 1]")
    t_start = time.perf_counter()
    n, m = tg.n, tg.m
    if m == 0:
        # no edges: a single vertex is trivially the optimum
        witness = delta_clique_check(tg, (0,), delta)
        return SolveResult(witness, True, "heuristic", time.perf_counter() - t_start)
    L = np.full((n, n), np.nan)
    L[tg.u, tg.v] = tg.labels
    L[tg.v, tg.u] = tg.labels
    slab = np.sort(tg.labels, kind="stable")
    counts = np.searchsorted(slab, slab + delta, side="right") - np.arange(m)
    anchor_rows = _pick_anchor_rows(counts, cfg.anchors)
    deadline = t_start + cfg.time_budget if cfg.time_budget is not None else None
    best: list[int] = []
    rng_counter = 0
    stop = False
    with np.errstate(invalid="ignore"):
        for ai in anchor_rows.tolist():
            t = slab[ai]
            W = (L >= t) & (L <= t + delta)
            deg = W.sum(1)
            for _ in range(cfg.restarts):
                rng = np.random.default_rng(derive_seed(seed, rng_counter))
                rng_counter += 1
                c = _greedy_in_window(W, deg, rng, cfg.greedy_pool)
                c = _local_improve(W, deg, c, rng, cfg)
                if len(c) > len(best):
                    best = c
                if deadline is not None and time.perf_counter() > deadline:
                    stop = True
                    break
            if stop:
                break
    if not best:
        best = [0]
    witness = delta_clique_check(tg, sorted(best), delta)
    return SolveResult(witness, False, "heuristic", time.perf_counter() - t_start)


def solve_max_delta_clique(
    tg: TemporalGraph, delta: float, config: SolverConfig | None = None, seed: int = 0
) -> SolveResult:
    """Dispatch on config.mode; bruteforce results are wrapped with optimal=True."""
    cfg = config or SolverConfig()
    if cfg.mode == "bruteforce":
        t_start = time.perf_counter()
        witness = max_delta_clique_bruteforce(tg, delta, cfg)
        return SolveResult(witness, True, "bruteforce", time.perf_counter() - t_start)
    if cfg.mode == "exact":
        return max_delta_clique_exact(tg, delta, cfg)
    return max_delta_clique_heuristic(tg, delta, cfg, seed=seed)
