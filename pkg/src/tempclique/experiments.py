"""Monte Carlo experiments for the clique-threshold closed forms.

Every experiment takes one master seed and derives per-trial sub-seeds with
`derive_seed`, so trial i's record is a pure function of (parameters, master
seed, i) and runs are byte-identical no matter how many worker threads are
used.  Each run produces an ExperimentReport: per-trial records (always
including the trial seed and a "value" column) plus mean / sample variance /
standard error aggregates that can be recomputed from the records.  Reports
serialize to a per-trial CSV and a JSON aggregate named
<name>_<params-hash>_<seed>.{csv,json}.

Acceptance bands (e.g. three-standard-error envelopes) are computed by the
callers that assert them; nothing here hard-codes a band.
"""

from __future__ import annotations

import csv
import hashlib
import io as _io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import ceil, comb, floor
from pathlib import Path

import numpy as np
from scipy import stats

from .analytics import k0_threshold, window_probability
from .graphs import StaticGraph, TemporalGraph, generate_er, generate_random_complete
from .io import atomic_write_text
from .seeds import derive_seed, uniform_block
from .solver import (
    InfeasibleConfigError,
    SolverConfig,
    greedy_static_clique,
    solve_max_delta_clique,
)

EXACT_SWEEP_MAX_N = 300
CLIQUE_COUNT_MAX_SUBSETS = 10**6
_SUBSET_CHUNK = 100_000


def run_indexed(count: int, fn, threads: int = 1) -> list:
    """Evaluate fn(0..count-1), returning results in index order.

    fn must be a pure function of its index; with that contract the output
    is identical for any thread count or schedule.
    """
    if threads <= 1:
        return [fn(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, range(count)))


def _clean_record(rec: dict) -> dict:
    """Normalize a trial record to plain Python scalars (bools become ints)."""
    out = {}
    for key, val in rec.items():
        if isinstance(val, (bool, np.bool_)):
            out[key] = int(val)
        elif isinstance(val, (int, np.integer)):
            out[key] = int(val)
        elif isinstance(val, (float, np.floating)):
            out[key] = float(val)
        else:
            out[key] = val
    return out


def _aggregate(values: list[float]) -> tuple[float, float, float, int]:
    """(mean, sample variance with ddof=1, standard error, count)."""
    count = len(values)
    if count == 0:
        raise ValueError("cannot aggregate zero trials")
    mean = math.fsum(values) / count
    if count > 1:
        variance = math.fsum((v - mean) ** 2 for v in values) / (count - 1)
    else:
        variance = 0.0
    stderr = math.sqrt(variance / count)
    return mean, variance, stderr, count


@dataclass
class ExperimentReport:
    """Per-trial records plus their aggregate for one experiment run."""

    name: str
    params: dict
    trials: list[dict]
    mean: float
    variance: float
    stderr: float
    count: int
    extras: dict = field(default_factory=dict)

    @classmethod
    def from_trials(
        cls, name: str, params: dict, trials: list[dict], extras: dict | None = None
    ) -> "ExperimentReport":
        records = [_clean_record(t) for t in trials]
        mean, variance, stderr, count = _aggregate([t["value"] for t in records])
        return cls(name, dict(params), records, mean, variance, stderr, count, extras or {})

    def recompute_aggregate(self) -> tuple[float, float, float, int]:
        """Re-derive the aggregate from the trial records (validation hook)."""
        return _aggregate([t["value"] for t in self.trials])

    def csv_text(self) -> str:
        """The per-trial records as CSV with a header row."""
        buf = _io.StringIO()
        fields = list(self.trials[0].keys())
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.trials)
        return buf.getvalue()

    def json_text(self) -> str:
        """The aggregate report as JSON (no per-trial records)."""
        doc = {
            "name": self.name,
            "params": self.params,
            "count": self.count,
            "mean": self.mean,
            "variance": self.variance,
            "stderr": self.stderr,
            "extras": self.extras,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def file_stem(self) -> str:
        digest = hashlib.sha1(
            json.dumps(self.params, sort_keys=True, default=str).encode()
        ).hexdigest()[:10]
        return f"{self.name}_{digest}_{self.params.get('seed', 0)}"

    def write(self, outdir: str | Path) -> tuple[Path, Path]:
        outdir = Path(outdir)
        outdir.mkdir(parents=True, exist_ok=True)
        csv_path = outdir / (self.file_stem() + ".csv")
        json_path = outdir / (self.file_stem() + ".json")
        atomic_write_text(csv_path, self.csv_text())
        atomic_write_text(json_path, self.json_text())
        return csv_path, json_path


def estimate_window_probability(
    h: int, delta: float, trials: int, seed: int, threads: int = 1
) -> ExperimentReport:
    """Monte Carlo estimate of P(h uniform labels fit in a width-delta window).

    Draws trial i's h uniforms in counter mode from derive_seed(seed, i), so
    the whole block is computed vectorized yet equals what any threaded
    per-trial schedule would produce (the threads argument is accepted for
    interface symmetry and does not affect the records).
    """
    if trials < 100:
        raise ValueError("need at least 100 trials")
    if h < 0:
        raise ValueError("h must be nonnegative")
    if not 0.0 <= delta <= 1.0:
        raise ValueError("delta must lie in [0, 1]")
    if h <= 1:
        hits = np.ones(trials, dtype=np.int64)
    else:
        block = uniform_block(seed, trials, h)
        widths = block.max(axis=1) - block.min(axis=1)
        hits = (widths <= delta).astype(np.int64)
    records = [
        {"trial": i, "seed": derive_seed(seed, i), "value": int(hits[i])}
        for i in range(trials)
    ]
    params = {"h": h, "delta": delta, "trials": trials, "seed": seed}
    extras = {"closed_form": window_probability(h, delta)}
    return ExperimentReport.from_trials("window_prob", params, records, extras)


def _subset_edge_indices(n: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    """All k-subsets of range(n) and the canonical edge index of each internal pair."""
    subsets = np.array(list(combinations(range(n), k)), dtype=np.int64)
    if k < 2:
        return subsets, np.empty((subsets.shape[0], 0), dtype=np.int64)
    ii, jj = zip(*combinations(range(k), 2))
    a = subsets[:, list(ii)]
    b = subsets[:, list(jj)]
    return subsets, a * (2 * n - a - 1) // 2 + (b - a - 1)


def estimate_clique_count(
    n: int, k: int, delta: float, trials: int, seed: int, threads: int = 1
) -> ExperimentReport:
    """Monte Carlo mean of the number of delta-temporal k-cliques in K_n.

    Each trial generates a fresh labeled instance and counts, over all C(n ,k)
    vertex subsets, those whose internal labels span at most delta.  Guarded
    to C(n, k) <= 10^6 subsets.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if not 1 <= k <= n:
        raise ValueError("require 1 <= k <= n")
    if not 0.0 <= delta <= 1.0:
        raise ValueError("delta must lie in [0, 1]")
    n_subsets = comb(n, k)
    if n_subsets > CLIQUE_COUNT_MAX_SUBSETS:
        raise InfeasibleConfigError(
            f"C({n}, {k}) = {n_subsets} exceeds the {CLIQUE_COUNT_MAX_SUBSETS} subset guard"
        )
    _, edge_idx = _subset_edge_indices(n, k)

    def one_trial(i: int) -> dict:
        s = derive_seed(seed, i)
        tg = generate_random_complete(n, s)
        if edge_idx.shape[1] == 0:
            count = n_subsets
        else:
            count = 0
            for lo in range(0, n_subsets, _SUBSET_CHUNK):
                sub = tg.labels[edge_idx[lo : lo + _SUBSET_CHUNK]]
                count += int((sub.max(axis=1) - sub.min(axis=1) <= delta).sum())
        return {"trial": i, "seed": s, "value": count}

    records = run_indexed(trials, one_trial, threads)
    params = {"n": n, "k": k, "delta": delta, "trials": trials, "seed": seed}
    extras = {"subsets": n_subsets}
    return ExperimentReport.from_trials("clique_count", params, records, extras)


def _check_sweep_config(ns, cfg: SolverConfig) -> None:
    for n in ns:
        if n < 2:
            raise ValueError("threshold sweeps need n >= 2")
        if cfg.mode == "exact" and n > EXACT_SWEEP_MAX_N:
            raise InfeasibleConfigError(
                f"exact sweeps are guarded to n <= {EXACT_SWEEP_MAX_N}; "
                "request the heuristic for larger n"
            )
        if cfg.mode == "bruteforce":
            raise InfeasibleConfigError("sweeps do not run the bruteforce solver")


def _sweep_delta(n: int, delta: float, delta_scaling: str) -> float:
    if delta_scaling == "fixed":
        return delta
    # shrinking-window regime delta(n) = 1 / ln(ln(n)); exploratory only
    return 1.0 / math.log(math.log(n))


def threshold_sweep(
    ns: list[int],
    delta: float,
    trials: int,
    cfg: SolverConfig | None = None,
    seed: int = 0,
    threads: int = 1,
    delta_scaling: str = "fixed",
) -> ExperimentReport:
    """Measure omega(n) against the threshold 2 ln n / ln(1/delta).

    One record per (n, trial) with the ratio omega/k0 as the value, plus
    per-trial band indicators omega <= ceil(1.25 k0) and omega >= floor(0.5
    k0).  Trials truncated by a time budget keep optimal = 0 so callers can
    exclude them from upper-bound assertions (a truncated omega still lower-
    bounds the true one).  delta_scaling="invloglog" replaces the fixed delta
    with delta(n) = 1/ln(ln n) (needs n >= 16); this regime is exploratory
    and carries no band guarantees.
    """
    cfg = cfg or SolverConfig()
    if trials < 1:
        raise ValueError("need at least one trial")
    if delta_scaling not in ("fixed", "invloglog"):
        raise ValueError("delta_scaling must be 'fixed' or 'invloglog'")
    if delta_scaling == "fixed" and not 0.0 < delta < 1.0:
        raise ValueError("delta must lie strictly in (0, 1)")
    ns = [int(n) for n in ns]
    if delta_scaling == "invloglog" and min(ns) < 16:
        raise ValueError("invloglog scaling needs n >= 16 to keep delta < 1")
    _check_sweep_config(ns, cfg)

    def one_trial(idx: int) -> dict:
        n = ns[idx // trials]
        t = idx % trials
        d = _sweep_delta(n, delta, delta_scaling)
        s = derive_seed(derive_seed(seed, n), t)
        tg = generate_random_complete(n, s)
        res = solve_max_delta_clique(tg, d, cfg, seed=derive_seed(s, 1))
        omega = res.clique.size
        k0 = k0_threshold(n, d)
        return {
            "n": n,
            "trial": t,
            "seed": s,
            "delta": d,
            "value": omega / k0,
            "omega": omega,
            "k0": k0,
            "upper_ok": omega <= ceil(1.25 * k0),
            "lower_ok": omega >= floor(0.5 * k0),
            "optimal": res.optimal,
        }

    records = run_indexed(len(ns) * trials, one_trial, threads)
    params = {
        "ns": ns,
        "delta": delta,
        "trials": trials,
        "seed": seed,
        "mode": cfg.mode,
        "delta_scaling": delta_scaling,
    }
    extras = {
        "median_omega": {
            str(n): float(np.median([r["omega"] for r in records if r["n"] == n]))
            for n in ns
        },
        "median_ratio": {
            str(n): float(np.median([r["value"] for r in records if r["n"] == n]))
            for n in ns
        },
        "k0": {
            str(n): k0_threshold(n, _sweep_delta(n, delta, delta_scaling)) for n in ns
        },
    }
    return ExperimentReport.from_trials("threshold_sweep", params, records, extras)


def interval_width_experiment(
    n: int,
    delta: float,
    trials: int,
    cfg: SolverConfig | None = None,
    seed: int = 0,
    threads: int = 1,
) -> ExperimentReport:
    """Distribution of the optimum clique's label-interval width, as a share of delta."""
    cfg = cfg or SolverConfig()
    if trials < 1:
        raise ValueError("need at least one trial")
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie strictly in (0, 1)")
    _check_sweep_config([n], cfg)

    def one_trial(t: int) -> dict:
        s = derive_seed(derive_seed(seed, n), t)
        tg = generate_random_complete(n, s)
        res = solve_max_delta_clique(tg, delta, cfg, seed=derive_seed(s, 1))
        width = res.clique.width
        return {
            "trial": t,
            "seed": s,
            "value": width / delta,
            "omega": res.clique.size,
            "width": width,
            "optimal": res.optimal,
        }

    records = run_indexed(trials, one_trial, threads)
    params = {"n": n, "delta": delta, "trials": trials, "seed": seed, "mode": cfg.mode}
    extras = {"median_ratio": float(np.median([r["value"] for r in records]))}
    return ExperimentReport.from_trials("interval_width", params, records, extras)


@dataclass(frozen=True)
class PlantedInstance:
    """A complete labeled instance hiding a static base graph.

    Base edges carry labels from `planted_range`; all other pairs carry
    labels from `filler_range`, which starts at delta so no filler label can
    fall inside a planted window that starts below it.
    """

    base: StaticGraph
    temporal: TemporalGraph
    mode: str
    planted_range: tuple[float, float]
    filler_range: tuple[float, float]


def build_planted_instance(
    base: StaticGraph, delta: float, mode: str, seed: int
) -> PlantedInstance:
    """Embed `base` into a complete labeled instance.

    mode="half": base labels uniform on [0, delta/2), filler on [delta, 1) —
    solving at delta/2 then separates base cliques from any mixed set.
    mode="full": base labels uniform on [0, delta), filler on [delta, 1).
    """
    if mode not in ("half", "full"):
        raise ValueError("mode must be 'half' or 'full'")
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie strictly in (0, 1)")
    n = base.n
    if n < 2:
        raise ValueError("base graph needs at least 2 vertices")
    planted_hi = delta / 2.0 if mode == "half" else delta
    iu, iv = np.triu_indices(n, k=1)
    m = iu.size
    mask = np.zeros(m, dtype=bool)
    if base.m:
        mask[base.u * (2 * n - base.u - 1) // 2 + (base.v - base.u - 1)] = True
    rng = np.random.default_rng(seed)
    labels = np.empty(m)
    labels[mask] = rng.random(int(mask.sum())) * planted_hi
    labels[~mask] = delta + rng.random(int(m - mask.sum())) * (1.0 - delta)
    tg = TemporalGraph(n, iu.astype(np.int64), iv.astype(np.int64), labels)
    return PlantedInstance(base, tg, mode, (0.0, planted_hi), (delta, 1.0))


def reduction_experiment(
    n: int,
    delta: float,
    trials: int,
    cfg: SolverConfig | None = None,
    seed: int = 0,
    threads: int = 1,
) -> ExperimentReport:
    """Static-max-clique reduction check on planted instances.

    Per trial: draw a G(n, delta) base, plant it with mode="half", solve the
    temporal instance at delta/2, and record whether the witness is a clique
    of the base graph, whether its interval sits inside the planted window,
    and how it compares to a greedy static clique of the base.
    """
    cfg = cfg or SolverConfig()
    if trials < 1:
        raise ValueError("need at least one trial")
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie strictly in (0, 1)")
    _check_sweep_config([n], cfg)

    def one_trial(t: int) -> dict:
        s = derive_seed(derive_seed(seed, n), t)
        base = generate_er(n, delta, derive_seed(s, 0))
        planted = build_planted_instance(base, delta, "half", derive_seed(s, 1))
        res = solve_max_delta_clique(
            planted.temporal, delta / 2.0, cfg, seed=derive_seed(s, 2)
        )
        verts = res.clique.vertices
        in_base = all(
            base.has_edge(a, b) for i, a in enumerate(verts) for b in verts[i + 1 :]
        )
        in_window = res.clique.interval_max <= planted.planted_range[1]
        greedy_size = len(greedy_static_clique(base))
        return {
            "trial": t,
            "seed": s,
            "value": res.clique.size,
            "base_clique": in_base,
            "in_planted_window": in_window,
            "greedy_size": greedy_size,
            "beats_greedy": res.clique.size >= greedy_size,
            "optimal": res.optimal,
        }

    records = run_indexed(trials, one_trial, threads)
    params = {"n": n, "delta": delta, "trials": trials, "seed": seed, "mode": cfg.mode}
    return ExperimentReport.from_trials("reduction", params, records)


def conjecture2_probe(
    n: int,
    delta: float,
    trials: int,
    cfg: SolverConfig | None = None,
    seed: int = 0,
    threads: int = 1,
) -> ExperimentReport:
    """Where does the optimum clique's interval sit inside [0, delta]?

    Uses mode="full" planted instances so the optimum's interval lands in
    [0, delta); records the left endpoint (the value column), the width, and
    the left endpoint normalized by its feasible range delta - width.  The
    extras carry a 10-bin histogram of left endpoints and the KS statistic
    of the normalized endpoints against uniform[0, 1] — reported, never
    asserted.
    """
    cfg = cfg or SolverConfig()
    if trials < 1:
        raise ValueError("need at least one trial")
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie strictly in (0, 1)")
    _check_sweep_config([n], cfg)

    def one_trial(t: int) -> dict:
        s = derive_seed(derive_seed(seed, n), t)
        base = generate_er(n, delta, derive_seed(s, 0))
        planted = build_planted_instance(base, delta, "full", derive_seed(s, 1))
        res = solve_max_delta_clique(
            planted.temporal, delta, cfg, seed=derive_seed(s, 2)
        )
        left = res.clique.interval_min
        width = res.clique.width
        slack = delta - width
        return {
            "trial": t,
            "seed": s,
            "value": left,
            "width": width,
            "normalized_left": left / slack if slack > 1e-12 else 0.0,
            "size": res.clique.size,
            "in_planted_window": res.clique.interval_max <= delta,
            "optimal": res.optimal,
        }

    records = run_indexed(trials, one_trial, threads)
    lefts = [r["value"] for r in records]
    normalized = [
        r["normalized_left"]
        for r in records
        if delta - r["width"] > 1e-12 and r["in_planted_window"]
    ]
    # bins cover [0, 1] so the counts always sum to the trial count, even on
    # the rare trials where a filler-range clique wins (left endpoint > delta)
    hist, edges = np.histogram(lefts, bins=10, range=(0.0, 1.0))
    if normalized:
        ks_stat = float(stats.kstest(normalized, "uniform").statistic)
    else:
        ks_stat = float("nan")
    params = {"n": n, "delta": delta, "trials": trials, "seed": seed, "mode": cfg.mode}
    extras = {
        "histogram_counts": hist.tolist(),
        "histogram_edges": edges.tolist(),
        "ks_statistic": ks_stat,
        "normalized_count": len(normalized),
    }
    return ExperimentReport.from_trials("conjecture2", params, records, extras)
