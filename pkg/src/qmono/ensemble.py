"""Ensemble engine: sampled monogamy records, f(alpha) curves, criticalities,
area scores, moments and histograms.

Sampling is deterministic per (base_seed, sample index), so results are
independent of the worker count and of scheduling; parallel chunks are always
merged in index order.
"""

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .measures import Measure
from .monogamy import ALPHA_MAX, SCORE_EPS, alpha_crossing, measure_state
from .states import sample_haar_pure, sample_w_class

__all__ = [
    "EnsembleSpec",
    "EnsembleSummary",
    "EnsembleError",
    "Moments",
    "default_alpha_grid",
    "crossing_grid",
    "run_ensemble",
    "scores_at",
    "fraction_nonmonogamous",
    "build_f_curve",
    "estimate_alpha_p",
    "estimate_alpha_c",
    "estimate_alpha_c_scan",
    "integrate_m",
    "distribution_stats",
    "histogram",
    "summarize",
    "summary_to_dict",
    "write_summary_json",
    "write_summary_csv",
    "write_scores_csv",
]

STATE_CLASSES = ("haar", "w-class")


def default_alpha_grid():
    """Geometric 1e-3..0.05, then 0.05..4 by 0.01, then 4..20 by 0.25.

    Resolves both the small-alpha frozen region and the large-alpha tail.
    """
    small = np.geomspace(1e-3, 0.05, 16)
    mid = 0.05 + 0.01 * np.arange(1, 396)
    large = 4.0 + 0.25 * np.arange(1, 65)
    return np.concatenate([small, mid, large])


def crossing_grid():
    """Geometric bracketing grid shared by the crossing-based estimators."""
    return np.geomspace(1e-3, ALPHA_MAX, 64)


@dataclass
class EnsembleSpec:
    """What to sample and how."""

    state_class: str
    n_qubits: int
    n_samples: int
    measure: Measure
    base_seed: int = 0
    alpha_grid: Optional[np.ndarray] = None
    workers: int = 1

    def __post_init__(self):
        if self.state_class == "w":
            self.state_class = "w-class"
        if self.state_class not in STATE_CLASSES:
            raise ValueError(f"state_class must be one of {STATE_CLASSES}")
        if self.state_class == "w-class" and self.n_qubits != 3:
            raise ValueError("w-class sampling is defined for 3 qubits")
        if self.n_samples < 0:
            raise ValueError("n_samples must be non-negative")
        if not isinstance(self.measure, Measure):
            self.measure = Measure.parse(self.measure)
        if self.alpha_grid is None:
            self.alpha_grid = default_alpha_grid()
        self.alpha_grid = np.asarray(self.alpha_grid, dtype=float)
        if self.alpha_grid.ndim != 1 or len(self.alpha_grid) < 2:
            raise ValueError("alpha_grid must hold at least two points")
        if self.alpha_grid[0] <= 0.0 or (np.diff(self.alpha_grid) <= 0.0).any():
            raise ValueError("alpha_grid must be strictly increasing and positive")
        if self.workers < 1:
            raise ValueError("workers must be positive")

    def sample(self, index):
        if self.state_class == "haar":
            return sample_haar_pure(self.n_qubits, self.base_seed, index)
        return sample_w_class(self.base_seed, index)


class EnsembleError(RuntimeError):
    """Raised when an ensemble run dies part way; carries the completed count."""

    def __init__(self, message, completed):
        super().__init__(f"{message} (completed {completed} samples)")
        self.completed = completed


def _chunk_records(spec, lo, hi):
    return [measure_state(spec.sample(k), spec.measure) for k in range(lo, hi)]


def run_ensemble(spec):
    """Monogamy records for sample indices 0..n_samples-1, in index order."""
    n = spec.n_samples
    if n == 0:
        return []
    if spec.workers == 1:
        return _chunk_records(spec, 0, n)
    bounds = np.linspace(0, n, 4 * spec.workers + 1).astype(int)
    chunks = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if a < b]
    records = []
    try:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            futures = [pool.submit(_chunk_records, spec, a, b) for a, b in chunks]
            for fut in futures:  # futures kept in chunk (index) order
                records.extend(fut.result())
    except Exception as exc:
        raise EnsembleError(str(exc), completed=len(records)) from exc
    return records


def _record_arrays(records):
    q = np.array([r.q_rest for r in records])
    p = np.array([r.q_pair for r in records])
    return q, p


def scores_at(records, alpha):
    """Vector of monogamy scores at one alpha."""
    if not records:
        raise ValueError("no records")
    if alpha <= 0.0:
        raise ValueError("alpha must be positive")
    q, p = _record_arrays(records)
    return q ** alpha - (p ** alpha).sum(axis=1)


def fraction_nonmonogamous(records, alpha):
    """Fraction of records with score below -1e-10."""
    return float((scores_at(records, alpha) < -SCORE_EPS).mean())


def build_f_curve(records, alpha_grid=None, refine_jumps=True,
                  jump=0.25, min_spacing=2e-4):
    """(alpha, f) samples of the nonmonogamous fraction.

    Where f drops by more than ``jump`` between neighboring grid points the
    interval is bisected down to ``min_spacing``, so discontinuities (the
    W-class concurrence step) cost the trapezoidal area integral less than
    jump * min_spacing rather than half a grid cell.
    """
    if alpha_grid is None:
        alpha_grid = default_alpha_grid()
    q, p = _record_arrays(records)

    def f_at(alpha):
        s = q ** alpha - (p ** alpha).sum(axis=1)
        return float((s < -SCORE_EPS).mean())

    alphas = list(np.asarray(alpha_grid, dtype=float))
    fs = [f_at(a) for a in alphas]
    if refine_jumps:
        i = 0
        while i < len(alphas) - 1:
            width = alphas[i + 1] - alphas[i]
            if abs(fs[i + 1] - fs[i]) > jump and width > min_spacing:
                mid = 0.5 * (alphas[i] + alphas[i + 1])
                alphas.insert(i + 1, mid)
                fs.insert(i + 1, f_at(mid))
            else:
                i += 1
    return np.column_stack([alphas, fs])


def estimate_alpha_p(records, tol=1e-3, alpha_grid=None):
    """Largest alpha up to which every sampled state is nonmonogamous.

    Locates the end of the f = 1 plateau on the grid and bisects the last
    plateau cell. Returns 0 when f < 1 already at the smallest grid alpha and
    the grid end when the plateau never breaks.
    """
    if alpha_grid is None:
        alpha_grid = default_alpha_grid()
    alpha_grid = np.asarray(alpha_grid, dtype=float)
    q, p = _record_arrays(records)

    def all_nonmono(alpha):
        s = q ** alpha - (p ** alpha).sum(axis=1)
        return bool((s < -SCORE_EPS).all())

    if not all_nonmono(alpha_grid[0]):
        return 0.0
    below = None
    for a in alpha_grid[1:]:
        if not all_nonmono(a):
            below = a
            break
    else:
        return float(alpha_grid[-1])
    lo = alpha_grid[np.searchsorted(alpha_grid, below) - 1]
    hi = below
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if all_nonmono(mid):
            lo = mid
        else:
            hi = mid
    return float(0.5 * (lo + hi))


def estimate_alpha_c(records, tol=1e-3):
    """Maximum over records of the last nonmonogamy crossing.

    Returns +inf ("exceeds the search window") when any record is still
    nonmonogamous at alpha = 20. Only records whose last nonmonogamous grid
    point is maximal can carry the maximum crossing, so only those are
    bisected.
    """
    if not records:
        raise ValueError("no records")
    grid = crossing_grid()
    q, p = _record_arrays(records)
    s = q[:, None] ** grid[None, :] - np.einsum("nkg->ng", p[:, :, None] ** grid[None, None, :])
    nonmono = s < -SCORE_EPS
    if nonmono[:, -1].any():
        return np.inf
    any_nonmono = nonmono.any(axis=1)
    if not any_nonmono.any():
        return None
    last_idx = np.where(any_nonmono, nonmono.shape[1] - 1 - np.argmax(nonmono[:, ::-1], axis=1), -1)
    top = int(last_idx.max())
    best = -np.inf
    for k in np.nonzero(last_idx == top)[0]:
        c = alpha_crossing(records[k], tol=tol)
        if c is not None and c > best:
            best = c
    return float(best)


def estimate_alpha_c_scan(records, tol=1e-3):
    """f-curve route to the critical power: largest alpha with f > 0.

    Must agree with estimate_alpha_c within the bisection tolerances; the two
    paths differ only in bracketing per record versus on the pooled fraction.
    """
    if not records:
        raise ValueError("no records")
    grid = crossing_grid()
    q, p = _record_arrays(records)

    def any_nonmono(alpha):
        s = q ** alpha - (p ** alpha).sum(axis=1)
        return bool((s < -SCORE_EPS).any())

    flags = [any_nonmono(a) for a in grid]
    if flags[-1]:
        return np.inf
    if not any(flags):
        return None
    last = max(i for i, fl in enumerate(flags) if fl)
    lo, hi = grid[last], grid[last + 1]
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if any_nonmono(mid):
            lo = mid
        else:
            hi = mid
    return float(0.5 * (lo + hi))


def integrate_m(f_curve, alpha_c):
    """Trapezoidal area under f over [0, alpha_c], with f(0) := 1."""
    if alpha_c is None or not np.isfinite(alpha_c):
        raise ValueError("the area score needs a finite critical power")
    curve = np.asarray(f_curve, dtype=float)
    if curve.ndim != 2 or curve.shape[1] != 2:
        raise ValueError("f_curve must be (alpha, f) pairs")
    alphas, fs = curve[:, 0], curve[:, 1]
    if alphas[-1] < alpha_c:
        raise ValueError(f"f_curve ends at {alphas[-1]}, before alpha_c = {alpha_c}")
    keep = alphas <= alpha_c
    xs = np.concatenate([[0.0], alphas[keep], [alpha_c]])
    ys = np.concatenate([[1.0], fs[keep], [np.interp(alpha_c, alphas, fs)]])
    return float(np.trapezoid(ys, xs))


class Moments(NamedTuple):
    mean: float
    variance: float
    skewness: float  # NaN when the variance is numerically zero


def distribution_stats(records, alpha):
    """Population mean, variance and skewness of the scores at one alpha."""
    s = scores_at(records, alpha)
    if len(s) < 2:
        raise ValueError("need at least two records")
    mu = float(s.mean())
    var = float((s * s).mean() - mu * mu)
    sigma = np.sqrt(max(var, 0.0))
    if sigma < 1e-12:
        return Moments(mu, var, float("nan"))
    kappa = float((((s - mu) / sigma) ** 3).mean())
    return Moments(mu, var, kappa)


def histogram(records, alpha, bins, lo, hi):
    """Relative frequencies over equal-width bins; out-of-range scores are
    counted in the edge bins. Rows are (bin_left, bin_right, rel_freq)."""
    if bins < 1:
        raise ValueError("bins must be >= 1")
    if not lo < hi:
        raise ValueError(f"invalid range ({lo}, {hi})")
    s = np.clip(scores_at(records, alpha), lo, hi)
    counts, edges = np.histogram(s, bins=bins, range=(lo, hi))
    freq = counts / len(s)
    return np.column_stack([edges[:-1], edges[1:], freq])


@dataclass
class EnsembleSummary:
    """Everything derived from one ensemble, with the spec echoed."""

    state_class: str
    n_qubits: int
    n_samples: int
    base_seed: int
    measure: Measure
    f_curve: np.ndarray
    alpha_p: float
    alpha_c: float  # +inf encodes "exceeds the search window"
    m_q: Optional[float]
    moments: dict  # alpha -> Moments
    hist: Optional[np.ndarray] = None
    hist_alpha: Optional[float] = None


def summarize(spec, records=None, moment_alphas=(1.0, 2.0),
              hist_alpha=None, hist_bins=50, hist_range=(-1.0, 1.0), tol=1e-3):
    """Run (or reuse) an ensemble and assemble its summary."""
    if records is None:
        records = run_ensemble(spec)
    if not records:
        raise ValueError("cannot summarize an empty ensemble")
    curve = build_f_curve(records, spec.alpha_grid)
    alpha_p = estimate_alpha_p(records, tol=tol, alpha_grid=spec.alpha_grid)
    alpha_c = estimate_alpha_c(records, tol=tol)
    if alpha_c is None:
        alpha_c = 0.0  # no sampled state is ever nonmonogamous
    m_q = integrate_m(curve, alpha_c) if np.isfinite(alpha_c) else None
    moments = {a: distribution_stats(records, a) for a in moment_alphas}
    hist = None
    if hist_alpha is not None:
        hist = histogram(records, hist_alpha, hist_bins, *hist_range)
    return EnsembleSummary(
        state_class=spec.state_class, n_qubits=spec.n_qubits,
        n_samples=spec.n_samples, base_seed=spec.base_seed, measure=spec.measure,
        f_curve=curve, alpha_p=alpha_p, alpha_c=alpha_c, m_q=m_q,
        moments=moments, hist=hist, hist_alpha=hist_alpha,
    )


def _alpha_c_json(alpha_c):
    return f"exceeds {ALPHA_MAX:g}" if np.isinf(alpha_c) else alpha_c


def summary_to_dict(summary, version=None):
    out = {
        "state_class": summary.state_class,
        "n_qubits": summary.n_qubits,
        "n_samples": summary.n_samples,
        "base_seed": summary.base_seed,
        "measure": summary.measure.value,
        "alpha_p": summary.alpha_p,
        "alpha_c": _alpha_c_json(summary.alpha_c),
        "m_q": summary.m_q,
        "moments": [
            {"alpha": a, "mean": m.mean, "variance": m.variance,
             "skewness": None if np.isnan(m.skewness) else m.skewness}
            for a, m in summary.moments.items()
        ],
        "f_curve": [[float(a), float(f)] for a, f in summary.f_curve],
    }
    if version is not None:
        out["version"] = version
    if summary.hist is not None:
        out["histogram"] = {
            "alpha": summary.hist_alpha,
            "bins": [[float(l), float(r), float(f)] for l, r, f in summary.hist],
        }
    return out


def write_summary_json(summary, fh, version=None):
    json.dump(summary_to_dict(summary, version), fh, indent=2, sort_keys=True)
    fh.write("\n")


def _csv_num(x):
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    return format(x, ".6g")


def write_summary_csv(summary, fh, version=None):
    """f-curve as (alpha, f) rows under a self-describing '#' header."""
    fh.write(f"# state_class={summary.state_class} n_qubits={summary.n_qubits} "
             f"n_samples={summary.n_samples} base_seed={summary.base_seed} "
             f"measure={summary.measure.value}"
             + (f" version={version}" if version else "") + "\n")
    fh.write(f"# alpha_p={_csv_num(summary.alpha_p)} "
             f"alpha_c={_csv_num(_alpha_c_json(summary.alpha_c))} "
             f"m_q={_csv_num(summary.m_q)}\n")
    for a, m in summary.moments.items():
        fh.write(f"# moments alpha={_csv_num(a)} mean={_csv_num(m.mean)} "
                 f"variance={_csv_num(m.variance)} "
                 f"skewness={_csv_num(None if np.isnan(m.skewness) else m.skewness)}\n")
    fh.write("alpha,f\n")
    for a, f in summary.f_curve:
        fh.write(f"{_csv_num(a)},{_csv_num(f)}\n")
    if summary.hist is not None:
        fh.write("bin_left,bin_right,rel_freq\n")
        for l, r, f in summary.hist:
            fh.write(f"{_csv_num(l)},{_csv_num(r)},{_csv_num(f)}\n")


def write_scores_csv(records, alpha, fh, state_class, n_qubits, measure, seed):
    """One score per row with the generating context in the header."""
    fh.write(f"# class={state_class} n_qubits={n_qubits} measure={measure.value} "
             f"alpha={_csv_num(alpha)} seed={seed}\n")
    fh.write("score\n")
    for s in scores_at(records, alpha):
        fh.write(f"{_csv_num(s)}\n")
