"""Shared test helpers: random-state factories and independent oracles.

The oracles deliberately avoid the package's computational shortcuts: the
measurement-grid oracle builds explicit projectors and post-measurement
states and diagonalizes them with LAPACK, and the crossing oracle is a dense
linear scan. They exist to check the production paths from a different route.
"""

import numpy as np
import pytest


def rand_unitary(rng, d=2):
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r))).conj()


def rand_dm(rng, d=4, rank=None):
    """Full-rank (or fixed-rank) density matrix from a Ginibre factor."""
    k = rank or d
    g = rng.standard_normal((d, k)) + 1j * rng.standard_normal((d, k))
    m = g @ g.conj().T
    return m / np.trace(m).real


def rand_pure(rng, d):
    z = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return z / np.linalg.norm(z)


def _entropy(vals):
    p = vals[vals > 1e-14]
    return float(-(p * np.log2(p)).sum())


def measurement_grid_oracle(rho, measured_party, objective,
                            n_theta=720, n_phi=1440, chunk=120000):
    """Brute-force minimum of a measurement objective over a Bloch grid.

    Builds the two projectors and the projected 4x4 states explicitly for
    every grid point; entropies come from numpy's eigvalsh.
    """
    rho = np.asarray(rho, dtype=complex)
    th = np.linspace(0.0, np.pi, n_theta)
    ph = np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False)
    tg, pg = (x.ravel() for x in np.meshgrid(th, ph, indexing="ij"))
    eye = np.eye(2)
    best = np.inf
    for lo in range(0, tg.size, chunk):
        t = tg[lo:lo + chunk]
        p = pg[lo:lo + chunk]
        v0 = np.stack([np.cos(t / 2), np.exp(1j * p) * np.sin(t / 2)], axis=-1)
        v1 = np.stack([np.sin(t / 2), -np.exp(1j * p) * np.cos(t / 2)], axis=-1)
        branches = []
        for v in (v0, v1):
            proj = v[:, :, None] * v.conj()[:, None, :]
            if measured_party == "second":
                k = np.einsum("ab,gcd->gacbd", eye, proj).reshape(-1, 4, 4)
            else:
                k = np.einsum("gab,cd->gacbd", proj, eye).reshape(-1, 4, 4)
            branches.append(k @ rho @ k)
        if objective == "post_measurement_entropy":
            ev = np.linalg.eigvalsh(branches[0] + branches[1])
            ev = np.clip(ev, 0.0, None)
            with np.errstate(divide="ignore", invalid="ignore"):
                term = np.where(ev > 1e-14, -ev * np.log2(np.where(ev > 0, ev, 1.0)), 0.0)
            vals = term.sum(axis=1)
        else:
            vals = 0.0
            for br in branches:
                if measured_party == "second":
                    red = np.einsum("gabcb->gac", br.reshape(-1, 2, 2, 2, 2))
                else:
                    red = np.einsum("gabad->gbd", br.reshape(-1, 2, 2, 2, 2))
                prob = np.einsum("gaa->g", red).real
                ev = np.clip(np.linalg.eigvalsh(red), 0.0, None)
                with np.errstate(divide="ignore", invalid="ignore"):
                    term = np.where(ev > 1e-14, -ev * np.log2(np.where(ev > 0, ev, 1.0)), 0.0)
                # sum_i p S(rho/p) = sum eigen-terms + p log2 p
                with np.errstate(divide="ignore", invalid="ignore"):
                    plog = np.where(prob > 1e-14, prob * np.log2(np.where(prob > 0, prob, 1.0)), 0.0)
                vals = vals + term.sum(axis=1) + plog
        best = min(best, float(vals.min()))
    return best


def crossing_scan_oracle(q_rest, q_pair, lo=1e-3, hi=20.0, points=1_000_000):
    """Last sign change of the score on a dense linear alpha scan."""
    alphas = np.linspace(lo, hi, points)
    q_pair = np.asarray(q_pair, dtype=float)
    s = q_rest ** alphas - (q_pair[None, :] ** alphas[:, None]).sum(axis=1)
    neg = s < -1e-10
    if not neg.any():
        return None
    if neg[-1]:
        return np.inf
    idx = np.nonzero(neg[:-1] & ~neg[1:])[0]
    k = idx[-1]
    return 0.5 * (alphas[k] + alphas[k + 1])


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
