import numpy as np
import pytest

from quadferm import fock
from quadferm.errors import PhysicsError, ValidationError
from quadferm.gaussian import (GaussianState, LiouvillianParams,
                               PhysicalModel, asymptotic_decomposition,
                               entropy, evolve_state, expectation_quadratic,
                               params_from_model, steady_state)
from quadferm.verify import (random_correlation_matrix, random_gksl_params,
                             random_hermitian, random_psd)


class TestParamsFromModel:
    def test_empty_model(self):
        params = params_from_model(PhysicalModel(np.zeros((2, 2))))
        assert np.linalg.norm(params.a) == 0.0
        assert np.linalg.norm(params.m) == 0.0
        assert params.gksl

    def test_single_decaying_mode(self):
        omega, gamma = 1.3, 0.6
        model = PhysicalModel([[omega]], loss_vectors=([np.sqrt(gamma)],))
        params = params_from_model(model)
        assert abs(params.a[0, 0] - (-1j * omega - gamma)) < 1e-15
        assert abs(params.m[0, 0]) == 0.0
        assert params.gksl

    def test_single_gain_mode(self):
        omega, gamma = 0.9, 0.4
        model = PhysicalModel([[omega]], gain_vectors=([np.sqrt(gamma)],))
        params = params_from_model(model)
        assert abs(params.a[0, 0] - (-1j * omega - gamma)) < 1e-15
        assert abs(params.m[0, 0] - 2 * gamma) < 1e-15
        # -A - A† - M = 2D - ... here D = 0, so the sandwich degenerates:
        # 2*gamma - 2*gamma = 0, still admissible at the boundary
        assert params.gksl

    def test_random_models_are_admissible(self, rng):
        for _ in range(10):
            h = random_hermitian(rng, 3)
            loss = tuple(rng.standard_normal(3) + 1j * rng.standard_normal(3)
                         for _ in range(2))
            gain = (rng.standard_normal(3) + 1j * rng.standard_normal(3),)
            params = params_from_model(PhysicalModel(h, loss, gain))
            assert params.gksl

    def test_non_hermitian_hamiltonian_rejected(self):
        with pytest.raises(ValidationError):
            PhysicalModel(np.array([[0.0, 1.0], [0.0, 0.0]]))


class TestEvolveState:
    def test_time_zero_is_identity(self, rng):
        params = random_gksl_params(rng, 3)
        state = GaussianState(random_correlation_matrix(rng, 3))
        out = evolve_state(params, state, 0.0)
        assert np.linalg.norm(out.r - state.r) < 1e-14

    def test_scalar_relaxation_closed_form(self):
        gamma, nbar, r0, t = 0.7, 0.35, 0.9, 1.4
        params = LiouvillianParams([[-gamma]], [[2 * gamma * nbar]])
        out = evolve_state(params, GaussianState([[r0]]), t)
        expected = np.exp(-2 * gamma * t) * r0 + nbar * (1 - np.exp(-2 * gamma * t))
        assert abs(out.r[0, 0] - expected) < 1e-13

    def test_matches_dense_oracle(self, rng):
        for _ in range(3):
            params = random_gksl_params(rng, 3)
            r0 = random_correlation_matrix(rng, 3)
            rho0 = fock.gaussian_density(GaussianState(r0))
            rho_t = fock.dense_evolve(params, rho0, 0.7)
            fast = evolve_state(params, GaussianState(r0), 0.7)
            assert np.max(np.abs(fock.read_correlations(rho_t) - fast.r)) <= 1e-9

    def test_is_affine_action_of_the_flow(self, rng):
        from quadferm.affine import AffineGenerator, act, flow
        params = random_gksl_params(rng, 3)
        state = GaussianState(random_correlation_matrix(rng, 3))
        t = 1.3
        via_flow = act(flow(AffineGenerator(params.a, params.m), t), state.r)
        assert np.linalg.norm(evolve_state(params, state, t).r - via_flow) <= 1e-12

    def test_flow_consistency(self, rng):
        for n in (2, 4, 6):
            params = random_gksl_params(rng, n)
            state = GaussianState(random_correlation_matrix(rng, n))
            two_step = evolve_state(params, evolve_state(params, state, 0.8), 1.7)
            one_step = evolve_state(params, state, 2.5)
            assert np.linalg.norm(two_step.r - one_step.r) < 1e-10

    def test_spectrum_stays_physical(self, rng):
        params = random_gksl_params(rng, 4)
        state = GaussianState(random_correlation_matrix(rng, 4, lo=0.01, hi=0.99))
        for t in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0):
            occ = np.linalg.eigvalsh(evolve_state(params, state, t).r)
            assert occ[0] >= -1e-10 and occ[-1] <= 1 + 1e-10

    def test_negative_time_rejected(self, rng):
        params = random_gksl_params(rng, 2)
        with pytest.raises(ValidationError):
            evolve_state(params, GaussianState.vacuum(2), -0.5)


class TestSteadyState:
    def test_scalar_occupation(self):
        gamma, nbar = 0.8, 0.3
        params = LiouvillianParams([[-gamma]], [[2 * gamma * nbar]])
        assert abs(steady_state(params).r[0, 0] - nbar) < 1e-13

    def test_zero_noise_gives_vacuum(self, rng):
        a = -random_psd(rng, 3) - 0.3 * np.eye(3)
        params = LiouvillianParams(a, np.zeros((3, 3)))
        assert np.linalg.norm(steady_state(params).r) < 1e-12

    def test_fixed_point_under_evolution(self, rng):
        for _ in range(3):
            params = random_gksl_params(rng, 3, min_damping=0.2)
            steady = steady_state(params)
            moved = evolve_state(params, steady, 5.0)
            assert np.linalg.norm(moved.r - steady.r) <= 1e-9

    def test_undamped_drift_is_rejected_with_eigenvalues(self):
        params = LiouvillianParams(np.diag([0.7j, -1.0]), np.zeros((2, 2)))
        with pytest.raises(PhysicsError, match="asymptotic_decomposition"):
            steady_state(params)

    def test_entropy_stationary_at_steady_state(self, rng):
        params = random_gksl_params(rng, 3, min_damping=0.3)
        steady = steady_state(params)
        drift = abs(entropy(evolve_state(params, steady, 3.0)) - entropy(steady))
        assert drift <= 1e-9

    def test_monotone_approach(self, rng):
        params = random_gksl_params(rng, 3, min_damping=0.5)
        state = GaussianState(random_correlation_matrix(rng, 3))
        m_inf = steady_state(params).r
        rate = abs(np.max(np.linalg.eigvals(params.a).real))
        t = 3.0 / rate
        d1 = np.linalg.norm(evolve_state(params, state, t).r - m_inf)
        d2 = np.linalg.norm(evolve_state(params, state, 2 * t).r - m_inf)
        assert d2 <= d1 / 10 or d2 < 1e-14


def _undamped_block_params(rng, freq=0.7):
    """3-mode admissible pair with a single persistent frequency."""
    h2 = random_hermitian(rng, 2)
    d2 = random_psd(rng, 2) + 0.3 * np.eye(2)
    e2 = random_psd(rng, 2, scale=0.4)
    a = np.zeros((3, 3), dtype=complex)
    m = np.zeros((3, 3), dtype=complex)
    a[0, 0] = 1j * freq
    a[1:, 1:] = -1j * h2 - d2 - e2
    m[1:, 1:] = 2 * e2
    return LiouvillianParams(a, m)


class TestAsymptoticDecomposition:
    def test_fully_damped_reduces_to_steady_state(self, rng):
        params = random_gksl_params(rng, 3, min_damping=0.2)
        state = GaussianState(random_correlation_matrix(rng, 3))
        dec = asymptotic_decomposition(params, state)
        assert np.linalg.norm(dec.a0_flow.a) == 0.0
        assert np.linalg.norm(dec.projected.r) < 1e-12
        assert np.linalg.norm(dec.m_inf - steady_state(params).r) < 1e-10

    def test_closed_system_keeps_rotating(self, rng):
        h = random_hermitian(rng, 3)
        params = LiouvillianParams(1j * h, np.zeros((3, 3)))
        state = GaussianState(random_correlation_matrix(rng, 3))
        dec = asymptotic_decomposition(params, state)
        assert np.linalg.norm(dec.m_inf) < 1e-12
        assert np.linalg.norm(dec.projected.r - state.r) < 1e-12
        assert np.linalg.norm(dec.a0_flow.a - 1j * h) < 1e-10

    def test_limit_noise_solves_lyapunov_on_damped_part(self, rng):
        params = _undamped_block_params(rng)
        state = GaussianState(random_correlation_matrix(rng, 3))
        dec = asymptotic_decomposition(params, state)
        res = params.a @ dec.m_inf + dec.m_inf @ params.a.conj().T + params.m
        assert np.linalg.norm(res) < 1e-10
        # the noise matrix vanishes on the persistent subspace
        assert np.linalg.norm(dec.p0 @ params.m) < 1e-12

    def test_prediction_matches_dense_oracle_with_persistent_mode(self, rng):
        params = _undamped_block_params(rng)
        r0 = random_correlation_matrix(rng, 3)
        dec = asymptotic_decomposition(params, GaussianState(r0))
        t = 40.0
        rho0 = fock.gaussian_density(GaussianState(r0))
        dense_r = fock.read_correlations(fock.dense_evolve(params, rho0, t))
        assert np.max(np.abs(dense_r - dec.predicted_correlation(t))) <= 1e-7

    def test_requires_admissible_generator(self, rng):
        params = LiouvillianParams(np.diag([1j, -1.0]), np.diag([1.0, 0.0]))
        assert not params.gksl
        with pytest.raises(PhysicsError):
            asymptotic_decomposition(params, GaussianState.vacuum(2))


class TestExpectationAndEntropy:
    def test_identity_gives_total_number(self, rng):
        r = random_correlation_matrix(rng, 3)
        val = expectation_quadratic(GaussianState(r), np.eye(3))
        assert abs(val - np.trace(r).real) < 1e-13

    def test_vacuum_gives_zero(self, rng):
        t_mat = random_hermitian(rng, 3)
        assert expectation_quadratic(GaussianState.vacuum(3), t_mat) == 0.0

    def test_matches_dense_oracle(self, rng):
        for _ in range(5):
            r = random_correlation_matrix(rng, 2)
            t_mat = random_hermitian(rng, 2)
            rho = fock.gaussian_density(GaussianState(r))
            dense = np.trace(fock.quadratic_form(t_mat, 2) @ rho)
            fast = expectation_quadratic(GaussianState(r), t_mat)
            assert abs(dense - fast) <= 1e-10

    def test_entropy_of_half_filled_mode(self):
        assert abs(entropy(GaussianState([[0.5]])) - np.log(2)) < 1e-14

    def test_entropy_of_vacuum(self):
        assert entropy(GaussianState.vacuum(3)) == 0.0

    def test_entropy_matches_dense_oracle(self, rng):
        for _ in range(5):
            r = random_correlation_matrix(rng, 2)
            rho = fock.gaussian_density(GaussianState(r))
            eigs = np.linalg.eigvalsh(rho)
            dense = -float(np.sum(eigs * np.log(eigs)))
            assert abs(dense - entropy(GaussianState(r))) <= 1e-9


class TestGaussianStateValidation:
    def test_non_hermitian_rejected(self):
        with pytest.raises(ValidationError):
            GaussianState(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_spectrum_escape_rejected(self):
        with pytest.raises(PhysicsError):
            GaussianState(np.diag([1.4, 0.2]))

    def test_boundary_spectrum_accepted(self):
        state = GaussianState(np.diag([0.0, 1.0]))
        assert np.array_equal(state.occupations(), [0.0, 1.0])
