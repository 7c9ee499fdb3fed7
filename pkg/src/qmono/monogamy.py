"""Monogamy scores: nodal-vs-rest value minus the sum of powered pairwise values."""

from dataclasses import dataclass

import numpy as np

from .measures import Measure, pure_bipartite_value, two_qubit_value
from .states import PureState, partial_trace, permute_qubits

__all__ = ["MonogamyRecord", "measure_state", "score", "alpha_crossing", "ALPHA_MAX"]

ALPHA_MAX = 20.0
SCORE_EPS = 1e-10       # scores above -SCORE_EPS count as monogamous
ENTRY_SLACK = 1e-8      # measure values may stray this far outside [0, 1]


@dataclass
class MonogamyRecord:
    """Per-state ingredients of the monogamy score for one measure.

    ``q_rest`` is the measure across the nodal:rest cut, ``q_pair[i]`` the
    two-qubit value between the nodal qubit and the i-th other qubit. All
    entries are clamped into [0, 1]; values outside by more than 1e-8 are
    rejected as computation bugs rather than round-off.
    """

    q_rest: float
    q_pair: np.ndarray
    measure: Measure
    nodal: int = 1

    def __post_init__(self):
        self.q_pair = np.asarray(self.q_pair, dtype=float)
        vals = np.append(self.q_pair, self.q_rest)
        if vals.min() < -ENTRY_SLACK or vals.max() > 1.0 + ENTRY_SLACK:
            raise ValueError(f"measure value outside [0, 1] beyond slack: {vals}")
        self.q_rest = float(min(max(self.q_rest, 0.0), 1.0))
        self.q_pair = np.clip(self.q_pair, 0.0, 1.0)

    @property
    def n_qubits(self):
        return len(self.q_pair) + 1


def measure_state(state, measure, nodal=1):
    """Evaluate one measure on the nodal:rest cut and on every nodal pair.

    The register is relabeled so the nodal qubit is first; for discord and
    work deficit with right direction the measured party of each pair is
    therefore the non-nodal qubit.
    """
    if not isinstance(state, PureState):
        raise TypeError("expected a PureState")
    n = state.n_qubits
    if n < 3:
        raise ValueError("monogamy scores need at least 3 qubits")
    if not 1 <= nodal <= n:
        raise ValueError(f"nodal qubit {nodal} outside register 1..{n}")
    if nodal != 1:
        order = [nodal] + [q for q in range(1, n + 1) if q != nodal]
        state = permute_qubits(state, order)
    q_rest = pure_bipartite_value(state, measure)
    q_pair = np.empty(n - 1)
    for k, i in enumerate(range(2, n + 1)):
        rho = partial_trace(state, {1, i})
        q_pair[k] = two_qubit_value(rho, measure)
    return MonogamyRecord(q_rest, q_pair, measure, nodal)


def score(record, alpha):
    """q_rest^alpha - sum_i q_pair[i]^alpha for a positive power alpha."""
    if alpha <= 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return float(record.q_rest ** alpha - (record.q_pair ** alpha).sum())


def _score_on_grid(record, alphas):
    return record.q_rest ** alphas - (record.q_pair[None, :] ** alphas[:, None]).sum(axis=1)


def alpha_crossing(record, tol=1e-9, alpha_max=ALPHA_MAX, grid_points=64):
    """Largest alpha where the score turns non-negative, or None / inf.

    Scans a geometric alpha grid for sign changes of the score and bisects
    the last bracket to ``tol``. Returns None when the score is never below
    -1e-10 on the grid (the state is monogamous throughout) and +inf when it
    is still negative at ``alpha_max`` (no crossing inside the window).
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    grid = np.geomspace(1e-3, alpha_max, grid_points)
    nonmono = _score_on_grid(record, grid) < -SCORE_EPS
    if not nonmono.any():
        return None
    if nonmono[-1]:
        return np.inf
    crossing = None
    for i in range(len(grid) - 1):
        if nonmono[i] and not nonmono[i + 1]:
            lo, hi = grid[i], grid[i + 1]
            while hi - lo > tol:
                mid = 0.5 * (lo + hi)
                if score(record, mid) < -SCORE_EPS:
                    lo = mid
                else:
                    hi = mid
            crossing = 0.5 * (lo + hi)
    return crossing
