import numpy as np
import pytest

from qmono.linalg import binary_entropy
from qmono.measures import (
    Measure,
    MeasurementSetting,
    concurrence_2q,
    concurrence_2q_from_r,
    discord_2q,
    eof_2q,
    log_negativity,
    negativity,
    optimal_qubit_measurement,
    pure_bipartite_value,
    two_qubit_value,
    work_deficit_2q,
)
from qmono.states import (
    DensityMatrix,
    PureState,
    apply_local_unitary,
    named_state,
    partial_trace,
    sample_haar_pure,
)
from conftest import measurement_grid_oracle, rand_dm, rand_unitary

ALL_MEASURES = [
    Measure.CONCURRENCE, Measure.EOF, Measure.NEGATIVITY, Measure.LOG_NEGATIVITY,
    Measure.DISCORD_RIGHT, Measure.WORK_DEFICIT_RIGHT,
]

# frozen oracle values (dense-grid and closed-form evaluations)
EOF_TWO_THIRDS = 0.5500477595827576
W_REST_CONCURRENCE = 0.9428090415820635
W_REST_LOG_NEG = 0.9581441056060679
WERNER34_COND_MIN = 0.5435644431995953  # (3/4)|phi+><phi+| + I/16, dense grid
WERNER06_DEFICIT = 0.36514844544032155  # 0.6 bell + 0.4 I/4, dense grid
W_PAIR_DISCORD_ORACLE = 0.5500481160875266  # dense-grid value for rho_12 of W


def bell_rho():
    return named_state("bell", 2).projector().mat


def zeros_rho():
    return named_state("product-zero", 2).projector().mat


def w_pair_rho():
    return partial_trace(named_state("w", 3), {1, 2}).mat


class TestMeasureKind:
    def test_parse_defaults_right(self):
        assert Measure.parse("discord") is Measure.DISCORD_RIGHT
        assert Measure.parse("work-deficit") is Measure.WORK_DEFICIT_RIGHT
        assert Measure.parse("work_deficit_left") is Measure.WORK_DEFICIT_LEFT

    def test_parse_direction(self):
        assert Measure.parse("discord", "left") is Measure.DISCORD_LEFT
        with pytest.raises(ValueError):
            Measure.parse("eof", "left")
        with pytest.raises(ValueError):
            Measure.parse("discord-left", "right")
        with pytest.raises(ValueError):
            Measure.parse("entropy-of-things")

    def test_family_direction(self):
        assert Measure.DISCORD_LEFT.family == "discord"
        assert Measure.DISCORD_LEFT.direction == "left"
        assert Measure.CONCURRENCE.direction is None
        assert Measure.WORK_DEFICIT_RIGHT.family == "work-deficit"


class TestConcurrence:
    def test_bell(self):
        assert concurrence_2q(bell_rho()) == pytest.approx(1.0, abs=1e-12)

    def test_product(self):
        assert concurrence_2q(zeros_rho()) == pytest.approx(0.0, abs=1e-12)

    def test_w_pair(self):
        assert concurrence_2q(w_pair_rho()) == pytest.approx(2 / 3, abs=1e-10)

    def test_agrees_with_operator_route(self, rng):
        # the no-square-root eigenvalue path must match the R spectrum
        for _ in range(50):
            rho = rand_dm(rng, 4)
            assert abs(concurrence_2q(rho) - concurrence_2q_from_r(rho)) <= 1e-9

    def test_operator_route_on_w_pair(self):
        assert concurrence_2q_from_r(w_pair_rho()) == pytest.approx(2 / 3, abs=1e-6)

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            concurrence_2q(np.eye(4))


class TestEoF:
    def test_bell(self):
        assert eof_2q(bell_rho()) == pytest.approx(1.0, abs=1e-12)

    def test_separable(self):
        rho = 0.5 * np.diag([1.0, 0, 0, 0]) + 0.5 * np.diag([0, 0, 0, 1.0])
        assert eof_2q(rho) == pytest.approx(0.0, abs=1e-12)

    def test_two_thirds(self):
        assert eof_2q(w_pair_rho()) == pytest.approx(EOF_TWO_THIRDS, abs=1e-9)


class TestNegativity:
    def test_bell(self):
        assert negativity(bell_rho()) == pytest.approx(1.0, abs=1e-12)

    def test_ghz_pair_ppt(self):
        rho = partial_trace(named_state("ghz", 3), {1, 2})
        assert negativity(rho) == pytest.approx(0.0, abs=1e-12)

    def test_ghz_one_vs_rest(self):
        dm = named_state("ghz", 3).projector()
        assert negativity(dm, cut=((1,), (2, 3))) == pytest.approx(1.0, abs=1e-12)

    def test_log_negativity(self):
        assert log_negativity(bell_rho()) == pytest.approx(1.0, abs=1e-12)
        assert log_negativity(zeros_rho()) == pytest.approx(0.0, abs=1e-12)

    def test_w_one_vs_rest_log(self):
        dm = named_state("w", 3).projector()
        assert log_negativity(dm, cut=((1,), (2, 3))) == pytest.approx(
            W_REST_LOG_NEG, abs=1e-10)

    def test_rejects_bad_cut(self):
        dm = named_state("ghz", 3).projector()
        with pytest.raises(ValueError):
            negativity(dm, cut=((1,), (2,)))
        with pytest.raises(ValueError):
            negativity(dm)


class TestOptimalMeasurement:
    def test_bell_conditional(self):
        setting, val = optimal_qubit_measurement(bell_rho(), "second",
                                                 "conditional_entropy")
        assert val == pytest.approx(0.0, abs=1e-9)
        assert isinstance(setting, MeasurementSetting)
        p0, p1 = setting.projectors()
        assert np.abs(p0 + p1 - np.eye(2)).max() <= 1e-12

    def test_product_conditional_at_pole(self):
        setting, val = optimal_qubit_measurement(zeros_rho(), "second",
                                                 "conditional_entropy")
        assert val == pytest.approx(0.0, abs=1e-9)

    def test_werner_matches_grid_oracle(self):
        rho = 0.75 * bell_rho() + 0.25 * np.eye(4) / 4
        _, val = optimal_qubit_measurement(rho, "second", "conditional_entropy")
        assert abs(val - WERNER34_COND_MIN) <= 1e-5

    def test_random_state_both_objectives(self, rng):
        rho = rand_dm(rng, 4)
        for objective in ("conditional_entropy", "post_measurement_entropy"):
            _, val = optimal_qubit_measurement(rho, "second", objective)
            oracle = measurement_grid_oracle(rho, "second", objective,
                                             n_theta=180, n_phi=360)
            assert val <= oracle + 1e-9
            assert abs(val - oracle) <= 2e-4  # coarse oracle grid

    def test_first_party(self, rng):
        rho = rand_dm(rng, 4)
        swapped = rho.reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)
        _, a = optimal_qubit_measurement(rho, "first", "conditional_entropy")
        _, b = optimal_qubit_measurement(swapped, "second", "conditional_entropy")
        assert abs(a - b) <= 1e-7

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            optimal_qubit_measurement(bell_rho(), "second", "frobnicate")
        with pytest.raises(ValueError):
            optimal_qubit_measurement(bell_rho(), "both", "conditional_entropy")


class TestDiscord:
    def test_bell(self):
        assert discord_2q(bell_rho()) == pytest.approx(1.0, abs=1e-6)

    def test_classical_mixture(self):
        rho = 0.3 * np.diag([1.0, 0, 0, 0]) + 0.7 * np.diag([0, 0, 0, 1.0])
        assert discord_2q(rho) == pytest.approx(0.0, abs=1e-8)

    def test_w_pair_matches_oracle(self):
        assert abs(discord_2q(w_pair_rho(), "right") - W_PAIR_DISCORD_ORACLE) <= 1e-5

    def test_directions_differ_generically(self, rng):
        rho = rand_dm(rng, 4, rank=2)
        left = discord_2q(rho, "left")
        right = discord_2q(rho, "right")
        assert left >= 0 and right >= 0
        assert abs(left - right) > 1e-6  # asymmetric state


class TestWorkDeficit:
    def test_bell(self):
        assert work_deficit_2q(bell_rho()) == pytest.approx(1.0, abs=1e-6)

    def test_product(self):
        assert work_deficit_2q(zeros_rho()) == pytest.approx(0.0, abs=1e-8)

    def test_werner_matches_oracle(self):
        rho = 0.6 * bell_rho() + 0.4 * np.eye(4) / 4
        assert abs(work_deficit_2q(rho, "right") - WERNER06_DEFICIT) <= 1e-5


class TestPureBipartite:
    def test_ghz_all_measures_unity(self):
        for n in (3, 4):
            st = named_state("ghz", n)
            for m in ALL_MEASURES:
                assert pure_bipartite_value(st, m) == pytest.approx(1.0, abs=1e-10), m

    def test_product_all_measures_zero(self):
        st = named_state("product-zero", 4)
        for m in ALL_MEASURES:
            assert pure_bipartite_value(st, m) == pytest.approx(0.0, abs=1e-10), m

    def test_w_concurrence(self):
        st = named_state("w", 3)
        assert pure_bipartite_value(st, Measure.CONCURRENCE) == pytest.approx(
            W_REST_CONCURRENCE, abs=1e-10)

    def test_concurrence_equals_negativity_on_pure_cut(self):
        for k in range(100):
            st = sample_haar_pure(3 + k % 3, 53, k)
            c = pure_bipartite_value(st, Measure.CONCURRENCE)
            n = pure_bipartite_value(st, Measure.NEGATIVITY)
            assert abs(c - n) <= 1e-9

    def test_eof_is_function_of_concurrence(self):
        for k in range(50):
            st = sample_haar_pure(3, 59, k)
            c = pure_bipartite_value(st, Measure.CONCURRENCE)
            e = pure_bipartite_value(st, Measure.EOF)
            assert abs(e - binary_entropy((1 + np.sqrt(max(0.0, 1 - c * c))) / 2)) <= 1e-9

    def test_rejects_unnormalized(self):
        bad = PureState(2, np.array([1.0, 0, 0, 1.0]))
        with pytest.raises(ValueError):
            pure_bipartite_value(bad, Measure.CONCURRENCE)


class TestMeasureProperties:
    def test_local_unitary_invariance(self, rng):
        rho = partial_trace(sample_haar_pure(3, 61, 0), {1, 2})
        u = rand_unitary(rng)
        v = rand_unitary(rng)
        rotated = DensityMatrix((1, 2), np.kron(u, v) @ rho.mat @ np.kron(u, v).conj().T)
        for m in ALL_MEASURES:
            assert abs(two_qubit_value(rho, m) - two_qubit_value(rotated, m)) <= 1e-6, m

    def test_zero_on_product_states(self, rng):
        a = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        a /= np.linalg.norm(a)
        b /= np.linalg.norm(b)
        rho = np.kron(np.outer(a, a.conj()), np.outer(b, b.conj()))
        for m in ALL_MEASURES:
            assert two_qubit_value(rho, m) <= 1e-8, m

    def test_werner_monotone(self):
        bell = bell_rho()
        ps = np.linspace(0.0, 1.0, 50)
        for m in ALL_MEASURES:
            vals = [two_qubit_value(p * bell + (1 - p) * np.eye(4) / 4, m) for p in ps]
            assert all(b >= a - 1e-6 for a, b in zip(vals, vals[1:])), m

    def test_koashi_winter_identity(self):
        # for pure 3-qubit states S(rho_1) - sum EoF = S(rho_1) - sum D_right
        for k in range(10):
            st = sample_haar_pure(3, 67, k)
            r12 = partial_trace(st, {1, 2})
            r13 = partial_trace(st, {1, 3})
            eofs = eof_2q(r12.mat) + eof_2q(r13.mat)
            discords = discord_2q(r12.mat, "right") + discord_2q(r13.mat, "right")
            assert abs(eofs - discords) <= 5e-5
