"""Pure states on qubit registers: sampling, named states, partial operations.

Conventions
-----------
Qubits are labeled 1..n and qubit 1 is the most significant bit of the
computational-basis index, i.e. ``amps[i]`` multiplies |b_1 b_2 ... b_n> with
i = sum_k b_k 2^(n-k).

Sampling is deterministic per (seed, index): every sampled state owns an
independent RNG stream keyed by ``SeedSequence(seed, spawn_key=(index,))``, so
disjoint index ranges can be drawn concurrently in any order. Streams are
those of numpy's PCG64 generator for the installed numpy version.
"""

import json
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PureState",
    "DensityMatrix",
    "sample_haar_pure",
    "sample_w_class",
    "named_state",
    "partial_trace",
    "partial_transpose",
    "apply_local_unitary",
    "permute_qubits",
    "dump_states",
    "load_states",
]

NORM_TOL = 1e-12   # sampled states must satisfy |norm - 1| below this
UNITARY_TOL = 1e-10


@dataclass
class PureState:
    """Complex amplitude vector over an n-qubit register."""

    n_qubits: int
    amps: np.ndarray

    def __post_init__(self):
        self.amps = np.asarray(self.amps, dtype=complex)
        if self.amps.shape != (2 ** self.n_qubits,):
            raise ValueError(
                f"amplitude vector has length {self.amps.size}, "
                f"expected {2 ** self.n_qubits}"
            )

    @property
    def norm(self):
        return float(np.linalg.norm(self.amps))

    def tensor(self):
        """Amplitudes reshaped to one axis per qubit (axis k-1 is qubit k)."""
        return self.amps.reshape((2,) * self.n_qubits)

    def projector(self):
        """|psi><psi| as a DensityMatrix over the full register."""
        return DensityMatrix(tuple(range(1, self.n_qubits + 1)),
                             np.outer(self.amps, self.amps.conj()))


@dataclass
class DensityMatrix:
    """Density matrix over an ordered subset of register qubits."""

    labels: tuple
    mat: np.ndarray

    def __post_init__(self):
        self.labels = tuple(self.labels)
        self.mat = np.asarray(self.mat, dtype=complex)
        d = 2 ** len(self.labels)
        if self.mat.shape != (d, d):
            raise ValueError(f"matrix shape {self.mat.shape} does not match "
                             f"{len(self.labels)} qubit labels")

    @property
    def n_qubits(self):
        return len(self.labels)


def _check_state(state):
    if not isinstance(state, PureState):
        raise TypeError("expected a PureState")
    dev = abs(state.norm - 1.0)
    if dev > 1e-8:
        raise ValueError(f"state norm deviates from 1 by {dev:.3e}")
    return state


def _rng(seed, index):
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def sample_haar_pure(n_qubits, seed, index=0):
    """Haar-uniform random pure state of ``n_qubits`` qubits.

    Real and imaginary part of every amplitude are drawn i.i.d. standard
    normal and the vector is normalized. Identical (seed, index) reproduces
    the identical state.
    """
    if not 2 <= n_qubits <= 10:
        raise ValueError(f"n_qubits must be in 2..10, got {n_qubits}")
    g = _rng(seed, index)
    d = 2 ** n_qubits
    z = g.standard_normal(d) + 1j * g.standard_normal(d)
    return PureState(n_qubits, z / np.linalg.norm(z))


def sample_w_class(seed, index=0):
    """Random three-qubit W-class state sqrt(a)|001> + sqrt(b)|010> + sqrt(c)|100> + sqrt(d)|000>.

    The weights (a, b, c, d) are squared moduli of i.i.d. complex standard
    normals, normalized to sum to one; this is the Haar-uniform weight
    distribution on the four-dimensional support subspace. Phases are dropped:
    they are removable by local unitaries, which leave every implemented
    measure invariant. The squared-concurrence monogamy score of every state
    of this form vanishes identically.
    """
    g = _rng(seed, index)
    z = g.standard_normal(4) + 1j * g.standard_normal(4)
    w = np.abs(z) ** 2
    a, b, c, d = w / w.sum()
    amps = np.zeros(8, dtype=complex)
    amps[0b001] = np.sqrt(a)
    amps[0b010] = np.sqrt(b)
    amps[0b100] = np.sqrt(c)
    amps[0b000] = np.sqrt(d)
    return PureState(3, amps)


def named_state(kind, n_qubits):
    """Reference states: ghz, w, bell, product-zero."""
    if n_qubits < 1:
        raise ValueError("n_qubits must be positive")
    d = 2 ** n_qubits
    amps = np.zeros(d, dtype=complex)
    if kind == "ghz":
        if n_qubits < 2:
            raise ValueError("ghz needs at least 2 qubits")
        amps[0] = amps[-1] = 1.0 / np.sqrt(2.0)
    elif kind == "w":
        if n_qubits < 2:
            raise ValueError("w needs at least 2 qubits")
        for k in range(n_qubits):
            amps[1 << k] = 1.0 / np.sqrt(n_qubits)
    elif kind == "bell":
        if n_qubits != 2:
            raise ValueError("bell is a two-qubit state")
        amps[0b00] = amps[0b11] = 1.0 / np.sqrt(2.0)
    elif kind == "product-zero":
        amps[0] = 1.0
    else:
        raise ValueError(f"unknown state kind {kind!r}")
    return PureState(n_qubits, amps)


def partial_trace(obj, keep):
    """Reduced density matrix on the qubits in ``keep``.

    ``obj`` is a PureState or DensityMatrix; ``keep`` is a non-empty iterable
    of its qubit labels. The result's parties are ordered by ascending label.
    """
    keep = sorted(set(keep))
    if isinstance(obj, PureState):
        labels = list(range(1, obj.n_qubits + 1))
        if not keep or any(k not in labels for k in keep):
            raise ValueError(f"keep must be a non-empty subset of {labels}, got {keep}")
        pos = [labels.index(k) for k in keep]
        rest = [i for i in range(obj.n_qubits) if i not in pos]
        m = obj.tensor().transpose(pos + rest).reshape(2 ** len(pos), -1)
        return DensityMatrix(tuple(keep), m @ m.conj().T)
    if isinstance(obj, DensityMatrix):
        labels = list(obj.labels)
        if not keep or any(k not in labels for k in keep):
            raise ValueError(f"keep must be a non-empty subset of {labels}, got {keep}")
        n = len(labels)
        pos = [labels.index(k) for k in keep]
        rest = [i for i in range(n) if i not in pos]
        t = obj.mat.reshape((2,) * (2 * n))
        # pair up row/col axes of every traced qubit
        t = t.transpose([*pos, *[n + p for p in pos], *rest, *[n + r for r in rest]])
        k = len(pos)
        t = t.reshape(2 ** k, 2 ** k, 2 ** (n - k), 2 ** (n - k))
        return DensityMatrix(tuple(keep), np.einsum("ijkk->ij", t))
    raise TypeError("expected a PureState or DensityMatrix")


def partial_transpose(dm, subsystem):
    """Transpose of ``dm`` on the qubits in ``subsystem``; returns an ndarray.

    ``subsystem`` must be a proper non-empty subset of the labels. The result
    is Hermitian with unit trace but generally not positive.
    """
    if not isinstance(dm, DensityMatrix):
        raise TypeError("expected a DensityMatrix")
    sub = sorted(set(subsystem))
    labels = list(dm.labels)
    if not sub or any(s not in labels for s in sub) or len(sub) == len(labels):
        raise ValueError(
            f"subsystem must be a proper non-empty subset of {labels}, got {sub}")
    n = len(labels)
    axes = list(range(2 * n))
    for s in sub:
        p = labels.index(s)
        axes[p], axes[n + p] = axes[n + p], axes[p]
    d = 2 ** n
    return dm.mat.reshape((2,) * (2 * n)).transpose(axes).reshape(d, d)


def apply_local_unitary(state, site, u):
    """Apply a 2x2 unitary on one qubit of a pure state."""
    _check_state(state)
    if not 1 <= site <= state.n_qubits:
        raise ValueError(f"site {site} outside register 1..{state.n_qubits}")
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError("expected a 2x2 matrix")
    dev = np.abs(u @ u.conj().T - np.eye(2)).max()
    if dev > UNITARY_TOL:
        raise ValueError(f"matrix is not unitary: max|UU^dag - I| = {dev:.3e}")
    t = np.tensordot(u, state.tensor(), axes=([1], [site - 1]))
    t = np.moveaxis(t, 0, site - 1)
    return PureState(state.n_qubits, t.reshape(-1))


def permute_qubits(state, order):
    """Relabel the register: new qubit k is old qubit order[k-1]."""
    _check_state(state)
    n = state.n_qubits
    order = list(order)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"order must be a permutation of 1..{n}, got {order}")
    t = state.tensor().transpose([o - 1 for o in order])
    return PureState(n, t.reshape(-1).copy())


def dump_states(path, states, seed=None):
    """Write states to a JSON-lines file, one record per state.

    Each record carries n_qubits, the sampling metadata and the amplitudes as
    [re, im] pairs.
    """
    with open(path, "w") as fh:
        for index, st in enumerate(states):
            rec = {
                "n_qubits": st.n_qubits,
                "seed": seed,
                "index": index,
                "amplitudes": [[z.real, z.imag] for z in st.amps],
            }
            fh.write(json.dumps(rec) + "\n")


def load_states(path):
    """Read states written by dump_states; returns a list of PureState."""
    out = []
    with open(path) as fh:
        for line in fh:
            rec = json.loads(line)
            amps = np.array([complex(re, im) for re, im in rec["amplitudes"]])
            out.append(PureState(rec["n_qubits"], amps))
    return out
