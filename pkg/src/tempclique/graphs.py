"""Temporal/static graph types, seeded generators, and the delta-clique predicate.

Vertices are 0-indexed.  Edges are canonical pairs (u, v) with u < v, stored
as parallel numpy arrays sorted lexicographically by (u, v).  A temporal graph
carries one real label per edge in [0, 1]; a vertex set Q is a delta-temporal
clique when Q is complete in the underlying graph and the labels of its
internal edges all fit in a closed window of width delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class NotADeltaClique(ValueError):
    """A vertex set failed the delta-clique predicate."""

    reason = "not-a-delta-clique"


class MissingEdge(NotADeltaClique):
    """The set is not complete in the underlying graph."""

    reason = "missing-edge"


class IntervalTooWide(NotADeltaClique):
    """The set is complete but its label interval exceeds delta."""

    reason = "interval-too-wide"


def _as_edge_arrays(n: int, u, v) -> tuple[np.ndarray, np.ndarray]:
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if u.ndim != 1 or v.ndim != 1 or u.shape != v.shape:
        raise ValueError("edge endpoint arrays must be 1-d and equal length")
    if u.size:
        if u.min() < 0 or v.max() >= n:
            raise ValueError("vertex ids must lie in [0, n)")
        if not (u < v).all():
            raise ValueError("edges must be canonical pairs with u < v")
        key = u * n + v
        dk = np.diff(key)
        if (dk <= 0).any():
            if (dk == 0).any():
                raise ValueError("duplicate edge in edge list")
            raise ValueError("edges must be sorted lexicographically by (u, v)")
    return u, v


def _sort_key(n: int, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.argsort(u * n + v, kind="stable")


@dataclass(frozen=True, eq=False)
class TemporalGraph:
    """A simple graph with one label in [0, 1] per edge, canonically ordered."""

    n: int
    u: np.ndarray
    v: np.ndarray
    labels: np.ndarray

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        u, v = _as_edge_arrays(self.n, self.u, self.v)
        labels = np.asarray(self.labels, dtype=np.float64)
        if labels.shape != u.shape:
            raise ValueError("labels must align with edges")
        if labels.size and (labels.min() < 0.0 or labels.max() > 1.0):
            raise ValueError("labels must lie in [0, 1]")
        for name, arr in (("u", u), ("v", v), ("labels", labels)):
            arr = arr.copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, float]]) -> "TemporalGraph":
        """Build from (u, v, label) triples in any order; pairs are canonicalized."""
        rows = list(edges)
        if not rows:
            return cls(n, np.empty(0, np.int64), np.empty(0, np.int64), np.empty(0))
        u = np.array([min(r[0], r[1]) for r in rows], dtype=np.int64)
        v = np.array([max(r[0], r[1]) for r in rows], dtype=np.int64)
        lab = np.array([r[2] for r in rows], dtype=np.float64)
        if (u == v).any():
            raise ValueError("self-loops are not allowed")
        order = _sort_key(n, u, v)
        return cls(n, u[order], v[order], lab[order])

    @property
    def m(self) -> int:
        return int(self.u.size)

    @property
    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def edge_list(self) -> list[tuple[int, int, float]]:
        return [
            (int(a), int(b), float(t))
            for a, b, t in zip(self.u, self.v, self.labels)
        ]

    @cached_property
    def _label_map(self) -> dict[tuple[int, int], float]:
        return {
            (int(a), int(b)): float(t)
            for a, b, t in zip(self.u, self.v, self.labels)
        }

    def label_of(self, a: int, b: int) -> float:
        """The label of edge {a, b}; raises KeyError when absent."""
        if a > b:
            a, b = b, a
        if self.is_complete:
            if not (0 <= a < b < self.n):
                raise KeyError((a, b))
            return float(self.labels[_pair_index(self.n, a, b)])
        return self._label_map[(a, b)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TemporalGraph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.u, other.u)
            and np.array_equal(self.v, other.v)
            and np.array_equal(self.labels, other.labels)
        )


def _pair_index(n: int, a: int, b: int) -> int:
    """Row-major index of canonical pair (a, b), a < b, in the complete edge order."""
    return a * (2 * n - a - 1) // 2 + (b - a - 1)


@dataclass(frozen=True, eq=False)
class StaticGraph:
    """An unlabeled simple graph in the same canonical edge order."""

    n: int
    u: np.ndarray
    v: np.ndarray

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        u, v = _as_edge_arrays(self.n, self.u, self.v)
        for name, arr in (("u", u), ("v", v)):
            arr = arr.copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "StaticGraph":
        rows = list(edges)
        if not rows:
            return cls(n, np.empty(0, np.int64), np.empty(0, np.int64))
        u = np.array([min(a, b) for a, b in rows], dtype=np.int64)
        v = np.array([max(a, b) for a, b in rows], dtype=np.int64)
        if (u == v).any():
            raise ValueError("self-loops are not allowed")
        order = _sort_key(n, u, v)
        return cls(n, u[order], v[order])

    @property
    def m(self) -> int:
        return int(self.u.size)

    def edge_list(self) -> list[tuple[int, int]]:
        return [(int(a), int(b)) for a, b in zip(self.u, self.v)]

    @cached_property
    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighbor bitmasks (arbitrary-width Python ints)."""
        adj = [0] * self.n
        for a, b in zip(self.u.tolist(), self.v.tolist()):
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return adj

    def has_edge(self, a: int, b: int) -> bool:
        if not (0 <= a < self.n and 0 <= b < self.n) or a == b:
            return False
        return bool(self.adjacency_masks[a] >> b & 1)

    def degree(self, a: int) -> int:
        return self.adjacency_masks[a].bit_count()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StaticGraph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.u, other.u)
            and np.array_equal(self.v, other.v)
        )


@dataclass(frozen=True)
class Window:
    """A closed label window [start, start + width]."""

    start: float
    width: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.start <= 1.0:
            raise ValueError("window start must lie in [0, 1]")
        if self.width < 0.0:
            raise ValueError("window width must be nonnegative")

    @property
    def end(self) -> float:
        return self.start + self.width

    def contains(self, label: float) -> bool:
        return self.start <= label <= self.end


@dataclass(frozen=True)
class CliqueResult:
    """A witnessed clique: sorted vertices plus its label interval."""

    vertices: tuple[int, ...]
    size: int
    interval_min: float
    interval_max: float

    def __post_init__(self) -> None:
        if self.size != len(self.vertices):
            raise ValueError("size must equal the number of vertices")
        if list(self.vertices) != sorted(set(self.vertices)):
            raise ValueError("vertices must be sorted and distinct")
        if self.interval_min > self.interval_max:
            raise ValueError("interval_min must not exceed interval_max")

    @property
    def width(self) -> float:
        return self.interval_max - self.interval_min


def generate_random_complete(n: int, seed: int) -> TemporalGraph:
    """Complete graph on n vertices with i.i.d. uniform-[0,1) edge labels.

    Deterministic in (n, seed); the labels come from one numpy PCG64 stream
    in canonical edge order.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    iu, iv = np.triu_indices(n, k=1)
    rng = np.random.default_rng(seed)
    labels = rng.random(iu.size)
    return TemporalGraph(n, iu.astype(np.int64), iv.astype(np.int64), labels)


def generate_er(n: int, p: float, seed: int) -> StaticGraph:
    """Erdos-Renyi G(n, p): each canonical pair kept independently with prob p."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    iu, iv = np.triu_indices(n, k=1)
    rng = np.random.default_rng(seed)
    keep = rng.random(iu.size) < p
    return StaticGraph(n, iu[keep].astype(np.int64), iv[keep].astype(np.int64))


def window_graph(tg: TemporalGraph, window: Window) -> StaticGraph:
    """The static graph of edges whose labels fall in the closed window."""
    keep = (tg.labels >= window.start) & (tg.labels <= window.end)
    return StaticGraph(tg.n, tg.u[keep], tg.v[keep])


def _clique_labels(tg: TemporalGraph, verts: Sequence[int]) -> np.ndarray:
    """Labels of all internal edges of `verts`; raises MissingEdge if incomplete."""
    k = len(verts)
    if tg.is_complete:
        a = np.repeat(np.asarray(verts, dtype=np.int64), np.arange(k - 1, -1, -1))
        b = np.concatenate(
            [np.asarray(verts[i + 1 :], dtype=np.int64) for i in range(k)]
        ) if k > 1 else np.empty(0, np.int64)
        lo = np.minimum(a, b)
        hi = np.maximum(a, b)
        idx = lo * (2 * tg.n - lo - 1) // 2 + (hi - lo - 1)
        return tg.labels[idx]
    lm = tg._label_map
    out = np.empty(k * (k - 1) // 2)
    pos = 0
    for i in range(k):
        for j in range(i + 1, k):
            a, b = verts[i], verts[j]
            if a > b:
                a, b = b, a
            try:
                out[pos] = lm[(a, b)]
            except KeyError:
                raise MissingEdge(f"missing edge ({a}, {b})") from None
            pos += 1
    return out


def delta_clique_check(tg: TemporalGraph, vertices, delta: float) -> CliqueResult:
    """Validate a delta-temporal clique and return its witnessed interval.

    Raises MissingEdge when the set is not complete in the underlying graph
    and IntervalTooWide when its label interval exceeds delta.  Sets of size
    0 or 1 vacuously pass with the degenerate interval [0, 0].
    """
    if not 0.0 <= delta <= 1.0:
        raise ValueError("delta must lie in [0, 1]")
    verts = sorted(int(x) for x in vertices)
    if len(set(verts)) != len(verts):
        raise ValueError("vertex set contains duplicates")
    if verts and not (0 <= verts[0] and verts[-1] < tg.n):
        raise ValueError("vertex ids must lie in [0, n)")
    if len(verts) <= 1:
        return CliqueResult(tuple(verts), len(verts), 0.0, 0.0)
    labels = _clique_labels(tg, verts)
    lo = float(labels.min())
    hi = float(labels.max())
    if hi - lo > delta:
        raise IntervalTooWide(
            f"label interval [{lo}, {hi}] has width {hi - lo} > delta={delta}"
        )
    return CliqueResult(tuple(verts), len(verts), lo, hi)


def is_delta_clique(tg: TemporalGraph, vertices, delta: float) -> bool:
    """Boolean form of `delta_clique_check`."""
    try:
        delta_clique_check(tg, vertices, delta)
    except NotADeltaClique:
        return False
    return True
