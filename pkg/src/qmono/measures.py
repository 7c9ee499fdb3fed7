"""Bipartite quantum-correlation measures for two-qubit states and 1:rest cuts.

Six measures are implemented: concurrence, entanglement of formation,
negativity, logarithmic negativity, quantum discord and quantum work deficit.
All are normalized to 1 on the two-qubit maximally entangled state. Discord
and work deficit carry a measurement direction: "right" measures the second
party, "left" the first.
"""

import enum
from typing import NamedTuple

import numpy as np

from .linalg import (
    binary_entropy,
    entropy_of_spectrum,
    psd_sqrt,
    trace_norm_hermitian,
)
from .states import DensityMatrix, PureState, partial_trace, partial_transpose

__all__ = [
    "Measure",
    "MeasurementSetting",
    "concurrence_2q",
    "concurrence_2q_from_r",
    "eof_2q",
    "negativity",
    "log_negativity",
    "optimal_qubit_measurement",
    "discord_2q",
    "work_deficit_2q",
    "pure_bipartite_value",
    "two_qubit_value",
]

_SYY = np.diag([-1.0, 1.0, 1.0, -1.0])[::-1].copy()  # sigma_y (x) sigma_y
_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0
_DISCORD_CLAMP = 1e-6


class Measure(enum.Enum):
    """The six measures, with explicit direction where one applies."""

    CONCURRENCE = "concurrence"
    EOF = "eof"
    NEGATIVITY = "negativity"
    LOG_NEGATIVITY = "log-negativity"
    DISCORD_LEFT = "discord-left"
    DISCORD_RIGHT = "discord-right"
    WORK_DEFICIT_LEFT = "work-deficit-left"
    WORK_DEFICIT_RIGHT = "work-deficit-right"

    @property
    def directional(self):
        return self.value.startswith(("discord", "work-deficit"))

    @property
    def family(self):
        if self.directional:
            return self.value.rsplit("-", 1)[0]
        return self.value

    @property
    def direction(self):
        if self.directional:
            return self.value.rsplit("-", 1)[1]
        return None

    @classmethod
    def parse(cls, name, direction=None):
        """Resolve a measure name, defaulting discord/work deficit to right.

        ``direction`` ("left"/"right") is only meaningful for discord and
        work deficit; passing it for other families or for an already
        direction-suffixed name is rejected.
        """
        key = name.strip().lower().replace("_", "-")
        bare = {"concurrence", "eof", "negativity", "log-negativity"}
        if key in bare:
            if direction is not None:
                raise ValueError(f"{name!r} does not take a measurement direction")
            return cls(key)
        if key in ("discord", "work-deficit"):
            return cls(f"{key}-{direction or 'right'}")
        try:
            m = cls(key)
        except ValueError:
            raise ValueError(f"unknown measure {name!r}") from None
        if direction is not None and m.direction != direction:
            raise ValueError(f"direction {direction!r} conflicts with {name!r}")
        return m


class MeasurementSetting(NamedTuple):
    """Bloch angles of a projective qubit measurement basis."""

    theta: float
    phi: float

    def projectors(self):
        """The two rank-1 projectors; they sum to the identity."""
        v0, v1 = _basis_pair(self.theta, self.phi)
        return np.outer(v0, v0.conj()), np.outer(v1, v1.conj())


def _basis_pair(theta, phi):
    half = theta / 2.0
    e = np.exp(1j * phi)
    v0 = np.array([np.cos(half), e * np.sin(half)])
    v1 = np.array([np.sin(half), -e * np.cos(half)])
    return v0, v1


def _as_two_qubit(rho):
    """Coerce to a validated 4x4 density matrix array."""
    if isinstance(rho, DensityMatrix):
        if len(rho.labels) != 2:
            raise ValueError(f"expected a two-qubit state, got labels {rho.labels}")
        m = rho.mat
    else:
        m = np.asarray(rho, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    dev = np.abs(m - m.conj().T).max()
    if dev > 1e-8:
        raise ValueError(f"not Hermitian: max|M - M^dag| = {dev:.3e}")
    tr = np.trace(m).real
    if abs(tr - 1.0) > 1e-8:
        raise ValueError(f"trace deviates from 1 by {abs(tr - 1.0):.3e}")
    lo = np.linalg.eigvalsh(m).min()
    if lo < -1e-8:
        raise ValueError(f"not positive semidefinite: min eigenvalue = {lo:.3e}")
    return m


def _wootters_lambdas(rho):
    """Descending square roots of the eigenvalues of rho * rho_tilde.

    Eigenvalues below 1e-14 are zeroed before the square root; they are pure
    round-off for the rank-deficient products arising from pure-state
    reductions and would otherwise leak O(1e-8) noise into the concurrence.
    """
    tilde = _SYY @ rho.conj() @ _SYY
    ev = np.linalg.eigvals(rho @ tilde).real
    ev[ev < 1e-14] = 0.0
    return np.sort(np.sqrt(ev))[::-1]


def concurrence_2q(rho):
    """Wootters concurrence of a two-qubit density matrix."""
    rho = _as_two_qubit(rho)
    lam = _wootters_lambdas(rho)
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])


def concurrence_2q_from_r(rho):
    """Concurrence via the spectrum of R = sqrt(sqrt(rho) rho_tilde sqrt(rho)).

    Numerically heavier than concurrence_2q but follows the textbook operator
    construction; the two must agree to high accuracy.
    """
    rho = _as_two_qubit(rho)
    tilde = _SYY @ rho.conj() @ _SYY
    root = psd_sqrt(rho)
    r = psd_sqrt(root @ tilde @ root)
    lam = np.sort(np.linalg.eigvalsh(r))[::-1]
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])


def eof_2q(rho):
    """Entanglement of formation from the concurrence."""
    c = concurrence_2q(rho)
    return binary_entropy((1.0 + np.sqrt(max(0.0, 1.0 - c * c))) / 2.0)


def negativity(dm, cut=None):
    """Trace norm of the partial transpose minus one, clamped at zero.

    ``cut = (first_labels, second_labels)`` must partition the labels of
    ``dm``; the transpose acts on the second side. For a two-qubit input the
    cut defaults to first-vs-second party.
    """
    if not isinstance(dm, DensityMatrix):
        dm = DensityMatrix((1, 2), _as_two_qubit(dm))
    if cut is None:
        if len(dm.labels) != 2:
            raise ValueError("cut is required for more than two qubits")
        cut = ((dm.labels[0],), (dm.labels[1],))
    first, second = (sorted(set(side)) for side in cut)
    if sorted(first + second) != sorted(dm.labels) or not first or not second:
        raise ValueError(f"cut {cut} does not partition labels {dm.labels}")
    pt = partial_transpose(dm, second)
    return max(0.0, trace_norm_hermitian(pt) - 1.0)


def log_negativity(dm, cut=None):
    """log2(negativity + 1)."""
    return float(np.log2(negativity(dm, cut) + 1.0))


def _measurement_objective(rho4, thetas, phis, post):
    """Objective over measurement angles, vectorized over a flat angle grid.

    ``rho4`` is the 4x4 state reshaped to (2, 2, 2, 2) with axis order
    (a, b, a', b'); the measurement acts on the b axes. For each basis vector
    v the unnormalized branch block is M_v[a, a'] = sum_{b b'} v*_b rho v_b',
    whose trace is the outcome probability. The post-measurement (dephased)
    state is block diagonal in the measurement basis, so both objectives
    reduce to closed-form eigenvalues of the two 2x2 branch blocks:

    - conditional entropy  sum_i p_i S(M_i / p_i)
    - dephased entropy     S of the pooled branch spectra
    """
    half = thetas / 2.0
    ct, st = np.cos(half), np.sin(half)
    e = np.exp(1j * phis)
    ct2, st2, cs = ct * ct, st * st, ct * st * e
    r00 = rho4[:, 0, :, 0]
    r01 = rho4[:, 0, :, 1]
    r10 = rho4[:, 1, :, 0]
    r11 = rho4[:, 1, :, 1]
    m0 = (np.multiply.outer(ct2, r00) + np.multiply.outer(cs, r01)
          + np.multiply.outer(cs.conj(), r10) + np.multiply.outer(st2, r11))
    m1 = (np.multiply.outer(st2, r00) - np.multiply.outer(cs, r01)
          - np.multiply.outer(cs.conj(), r10) + np.multiply.outer(ct2, r11))

    def eig2(m):
        t = (m[..., 0, 0] + m[..., 1, 1]).real
        det = (m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]).real
        disc = np.sqrt(np.maximum(t * t - 4.0 * det, 0.0))
        return np.stack([(t + disc) / 2.0, (t - disc) / 2.0], axis=-1)

    def xlg(x):
        safe = np.where(x > 1e-14, x, 1.0)
        return -safe * np.log2(safe)

    l0 = np.clip(eig2(m0), 0.0, None)
    l1 = np.clip(eig2(m1), 0.0, None)
    branch = xlg(l0).sum(-1) + xlg(l1).sum(-1)
    if post:
        return branch
    return branch - xlg(l0.sum(-1)) - xlg(l1.sum(-1))


def optimal_qubit_measurement(rho, measured_party="second",
                              objective="conditional_entropy",
                              n_theta=64, n_phi=128, tol=1e-6):
    """Minimize a measurement objective over projective qubit bases.

    Two stages: a coarse (n_theta x n_phi) Bloch-angle grid, then batched
    coordinate-wise golden-section refinement of the four best coarse cells
    down to step ``tol``. Returns (MeasurementSetting, minimum value).
    """
    if objective not in ("conditional_entropy", "post_measurement_entropy"):
        raise ValueError(f"unknown objective {objective!r}")
    if measured_party not in ("first", "second"):
        raise ValueError("measured_party must be 'first' or 'second'")
    rho = _as_two_qubit(rho)
    post = objective == "post_measurement_entropy"
    rho4 = rho.reshape(2, 2, 2, 2)
    if measured_party == "first":
        rho4 = rho4.transpose(1, 0, 3, 2)

    th = np.linspace(0.0, np.pi, n_theta)
    ph = np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False)
    tg, pg = (x.ravel() for x in np.meshgrid(th, ph, indexing="ij"))
    vals = _measurement_objective(rho4, tg, pg, post)
    top = np.argpartition(vals, 4)[:4]
    best_val = float(vals[top].min())
    best_arg = top[np.argmin(vals[top])]
    best_t, best_p = float(tg[best_arg]), float(pg[best_arg])

    t, p = tg[top].copy(), pg[top].copy()
    dt = np.pi / (n_theta - 1)
    dp = 2.0 * np.pi / n_phi
    for _ in range(3):
        for coord, h in ((0, dt), (1, dp)):
            x = t if coord == 0 else p

            def f(xv):
                return (_measurement_objective(rho4, xv, p, post) if coord == 0
                        else _measurement_objective(rho4, t, xv, post))

            a, b = x - h, x + h
            c = b - _INVPHI * (b - a)
            d = a + _INVPHI * (b - a)
            fc, fd = f(c), f(d)
            while np.max(b - a) > tol:
                move = fc < fd  # keep [a, d], else keep [c, b]
                a, b = np.where(move, a, c), np.where(move, d, b)
                span = _INVPHI * (b - a)
                c2 = np.where(move, b - span, d)
                d2 = np.where(move, c, a + span)
                probe = f(np.where(move, c2, d2))
                fc, fd = np.where(move, probe, fd), np.where(move, fc, probe)
                c, d = c2, d2
            if coord == 0:
                t = (a + b) / 2.0
            else:
                p = (a + b) / 2.0
    refined = _measurement_objective(rho4, t, p, post)
    k = int(np.argmin(refined))
    if refined[k] < best_val:
        best_val = float(refined[k])
        best_t, best_p = float(t[k]), float(p[k])
    if not np.isfinite(best_val):
        raise ArithmeticError("measurement objective is not finite")
    theta, phi = _canonical_angles(best_t, best_p)
    return MeasurementSetting(theta, phi), best_val


def _canonical_angles(theta, phi):
    theta = theta % (2.0 * np.pi)
    if theta > np.pi:
        theta = 2.0 * np.pi - theta
        phi = phi + np.pi
    return theta, phi % (2.0 * np.pi)


def _measured_party(direction):
    if direction not in ("left", "right"):
        raise ValueError("direction must be 'left' or 'right'")
    return "second" if direction == "right" else "first"


def _marginal_entropies(rho):
    r4 = rho.reshape(2, 2, 2, 2)
    rho_a = np.einsum("abcb->ac", r4)
    rho_b = np.einsum("abad->bd", r4)
    s_a = entropy_of_spectrum(np.clip(np.linalg.eigvalsh(rho_a), 0.0, None))
    s_b = entropy_of_spectrum(np.clip(np.linalg.eigvalsh(rho_b), 0.0, None))
    s_ab = entropy_of_spectrum(np.clip(np.linalg.eigvalsh(rho), 0.0, None))
    return s_a, s_b, s_ab


def discord_2q(rho, direction="right"):
    """Quantum discord; "right" measures the second party, "left" the first.

    D_right = S(rho_B) - S(rho_AB) + min over B-measurements of the averaged
    conditional entropy of A (roles mirrored for "left"). Values within
    -1e-6 of zero are clamped to 0.
    """
    rho = _as_two_qubit(rho)
    s_a, s_b, s_ab = _marginal_entropies(rho)
    measured = _measured_party(direction)
    _, cond = optimal_qubit_measurement(rho, measured, "conditional_entropy")
    val = (s_b if direction == "right" else s_a) - s_ab + cond
    if val < -_DISCORD_CLAMP:
        raise ArithmeticError(f"discord evaluated to {val:.3e} < -1e-6")
    return max(0.0, val)


def work_deficit_2q(rho, direction="right"):
    """One-way quantum work deficit.

    The CLOCC side dephases the measured party: the post-measurement state is
    sum_i (1 x Pi_i) rho (1 x Pi_i) and the deficit is the entropy gain
    min_Pi S(rho') - S(rho_AB).
    """
    rho = _as_two_qubit(rho)
    _, _, s_ab = _marginal_entropies(rho)
    measured = _measured_party(direction)
    _, dephased = optimal_qubit_measurement(rho, measured, "post_measurement_entropy")
    val = dephased - s_ab
    if val < -_DISCORD_CLAMP:
        raise ArithmeticError(f"work deficit evaluated to {val:.3e} < -1e-6")
    return max(0.0, val)


def two_qubit_value(rho, measure):
    """Dispatch a Measure on a two-qubit density matrix."""
    fam = measure.family
    if fam == "concurrence":
        return concurrence_2q(rho)
    if fam == "eof":
        return eof_2q(rho)
    if fam == "negativity":
        return negativity(rho)
    if fam == "log-negativity":
        return log_negativity(rho)
    if fam == "discord":
        return discord_2q(rho, measure.direction)
    if fam == "work-deficit":
        return work_deficit_2q(rho, measure.direction)
    raise ValueError(f"unknown measure {measure}")


def pure_bipartite_value(state, measure):
    """Measure value across the qubit-1 : rest cut of a pure state.

    For EoF, discord and work deficit this is the entropy of the single-qubit
    marginal (the measurement optimum sits in the Schmidt basis for pure
    states, so no optimization is needed). Concurrence uses
    sqrt(2 (1 - tr rho_1^2)); negativity uses the trace norm of the partial
    transpose of the full projector over the rest.
    """
    if not isinstance(state, PureState):
        raise TypeError("expected a PureState")
    if state.n_qubits < 2:
        raise ValueError("need at least two qubits for a 1:rest cut")
    if abs(state.norm - 1.0) > 1e-8:
        raise ValueError(f"state norm deviates from 1 by {abs(state.norm - 1.0):.3e}")
    fam = measure.family
    if fam in ("eof", "discord", "work-deficit"):
        rho_1 = partial_trace(state, {1}).mat
        ev = np.clip(np.linalg.eigvalsh(rho_1), 0.0, None)
        return entropy_of_spectrum(ev)
    if fam == "concurrence":
        rho_1 = partial_trace(state, {1}).mat
        purity = np.trace(rho_1 @ rho_1).real
        return float(np.sqrt(max(0.0, 2.0 * (1.0 - purity))))
    if fam == "negativity":
        return _pure_rest_negativity(state)
    if fam == "log-negativity":
        return float(np.log2(_pure_rest_negativity(state) + 1.0))
    raise ValueError(f"unknown measure {measure}")


def _pure_rest_negativity(state):
    rest = tuple(range(2, state.n_qubits + 1))
    pt = partial_transpose(state.projector(), rest)
    ev = np.linalg.eigvalsh(pt)
    return max(0.0, float(np.abs(ev).sum()) - 1.0)
