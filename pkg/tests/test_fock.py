import numpy as np
import pytest

from quadferm import fock
from quadferm.errors import ValidationError
from quadferm.gaussian import GaussianState, LiouvillianParams, steady_state
from quadferm.verify import (random_complex_matrix, random_correlation_matrix,
                             random_gksl_params, random_hermitian)


class TestCarConstruction:
    def test_single_mode_lowering_matrix(self):
        (c,) = fock.annihilators(1)
        assert np.array_equal(c, np.array([[0, 1], [0, 0]], dtype=complex))

    def test_mixed_anticommutator_vanishes_exactly(self):
        c1, c2 = fock.annihilators(2)
        assert np.linalg.norm(c1 @ c2.conj().T + c2.conj().T @ c1) == 0.0

    def test_full_relation_sweep_four_modes(self):
        ops = fock.annihilators(4)
        eye = np.eye(16)
        worst = 0.0
        for j in range(4):
            for k in range(4):
                cj, ck = ops[j], ops[k]
                worst = max(worst, np.linalg.norm(cj @ ck + ck @ cj))
                worst = max(worst, np.linalg.norm(
                    cj @ ck.conj().T + ck.conj().T @ cj - (j == k) * eye))
                worst = max(worst, np.linalg.norm(
                    cj.conj().T @ ck.conj().T + ck.conj().T @ cj.conj().T))
        assert worst <= 1e-14

    def test_vacuum_is_annihilated(self):
        omega = fock.vacuum_projector(3)
        for c in fock.annihilators(3):
            assert np.linalg.norm(c @ omega) == 0.0

    def test_mode_count_caps(self):
        with pytest.raises(ValidationError):
            fock.annihilators(0)
        with pytest.raises(ValidationError):
            fock.annihilators(7)


class TestBasicSuperoperators:
    def test_zero_coefficients_give_zero_map(self):
        zero = np.zeros((2, 2))
        assert np.linalg.norm(fock.super_basic("left", zero, 2)) == 0.0

    def test_left_multiplication_kills_vacuum(self):
        omega = fock.vacuum_projector(1)
        op = fock.super_basic("left", np.array([[1.0]]), 1)
        assert np.linalg.norm(fock.unvec(op @ fock.vec(omega))) == 0.0

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValidationError):
            fock.super_basic("twist", np.eye(2), 2)

    def test_matrices_agree_with_defining_sums(self, rng):
        # apply each stored 4^n matrix to random operators and compare with
        # the literal double sums over mode indices
        n = 2
        ops = fock.annihilators(n)
        for _ in range(20):
            a = random_complex_matrix(rng, n)
            rho = random_complex_matrix(rng, 2 ** n)
            by_sum = {
                "loss": sum(a[j, k] * ops[k] @ rho @ ops[j].conj().T
                            for j in range(n) for k in range(n)),
                "gain": sum(a[j, k] * ops[j].conj().T @ rho @ ops[k]
                            for j in range(n) for k in range(n)),
                "left": fock.quadratic_form(a, n) @ rho,
                "right": rho @ fock.quadratic_form(a, n),
            }
            for kind, expected in by_sum.items():
                out = fock.unvec(fock.super_basic(kind, a, n) @ fock.vec(rho))
                assert np.linalg.norm(out - expected) <= 1e-12

    def test_loss_gain_commutator_identity(self, rng):
        n = 2
        eye = np.eye(4 ** n)
        for _ in range(5):
            c = random_complex_matrix(rng, n)
            d = random_complex_matrix(rng, n)
            lhs = fock.super_basic("loss", c, n) @ fock.super_basic("gain", d, n) \
                - fock.super_basic("gain", d, n) @ fock.super_basic("loss", c, n)
            rhs = np.trace(c @ d) * eye \
                - fock.super_basic("left", d @ c, n) \
                - fock.super_basic("right", c @ d, n)
            assert np.linalg.norm(lhs - rhs) <= 1e-11


class TestLiouvillianFamily:
    def test_zero_pair_gives_zero_map(self):
        params = LiouvillianParams(np.zeros((2, 2)), np.zeros((2, 2)))
        assert np.linalg.norm(fock.super_liouvillian(params, 2)) == 0.0

    def test_drift_only_annihilates_vacuum(self, rng):
        omega = fock.vacuum_projector(3)
        zero = np.zeros((3, 3))
        for _ in range(5):
            a = random_complex_matrix(rng, 3)
            out = fock.apply_generator(a, zero, omega)
            assert np.linalg.norm(out) <= 1e-12

    def test_family_commutator_closes(self, rng):
        n = 2
        for _ in range(5):
            a, m = random_complex_matrix(rng, n), random_complex_matrix(rng, n)
            b, nn = random_complex_matrix(rng, n), random_complex_matrix(rng, n)
            l1 = fock.super_liouvillian(LiouvillianParams(a, m), n)
            l2 = fock.super_liouvillian(LiouvillianParams(b, nn), n)
            target = fock.super_liouvillian(LiouvillianParams(
                a @ b - b @ a,
                a @ nn + nn @ a.conj().T - b @ m - m @ b.conj().T), n)
            assert np.linalg.norm(l1 @ l2 - l2 @ l1 - target) <= 1e-10

    def test_matches_master_equation_assembly(self, rng):
        n = 2
        h = random_hermitian(rng, n)
        loss = tuple((rng.standard_normal(n) + 1j * rng.standard_normal(n))
                     for _ in range(2))
        gain = ((rng.standard_normal(n) + 1j * rng.standard_normal(n)),)
        d = sum(np.outer(v, v.conj()) for v in loss)
        e = sum(np.outer(v, v.conj()) for v in gain)
        params = LiouvillianParams(-1j * h - d - e, 2 * e)
        direct = fock.super_master_equation(h, loss, gain)
        assert np.linalg.norm(direct - fock.super_liouvillian(params, n)) <= 1e-12

    def test_apply_generator_matches_matrix(self, rng):
        n = 3
        a = random_complex_matrix(rng, n)
        m = random_complex_matrix(rng, n)
        rho = random_complex_matrix(rng, 2 ** n)
        mat = fock.super_liouvillian(LiouvillianParams(a, m), n)
        direct = fock.apply_generator(a, m, rho)
        assert np.linalg.norm(direct - fock.unvec(mat @ fock.vec(rho))) <= 1e-12


class TestDerivedCommutatorIdentities:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_auxiliary_combinations_close(self, n):
        from quadferm import verify
        for idx, which in enumerate(("fl_fl", "bl_bl", "fl_bl",
                                     "fl_s", "bl_s", "s_s")):
            rng = np.random.default_rng([55, n, idx])
            assert verify._check_aux(rng, n, 10, which) <= 1e-11

    @pytest.mark.parametrize("n", [2, 3])
    def test_conjugation_lemmas(self, n):
        from quadferm import verify
        rng = np.random.default_rng([56, n])
        assert verify._check_noise_conjugation(rng, n, 5) <= 1e-10
        assert verify._check_translation_conjugation(rng, n, 5) <= 1e-10
        assert verify._check_gain_intertwining(rng, n, 5) <= 1e-10


class TestDenseEvolve:
    def test_time_zero_is_identity(self, rng):
        params = random_gksl_params(rng, 2)
        rho = fock.gaussian_density(GaussianState(random_correlation_matrix(rng, 2)))
        assert np.linalg.norm(fock.dense_evolve(params, rho, 0.0) - rho) <= 1e-13

    def test_steady_gaussian_state_is_fixed(self, rng):
        params = random_gksl_params(rng, 2, min_damping=0.2)
        rho = fock.gaussian_density(steady_state(params))
        moved = fock.dense_evolve(params, rho, 3.0)
        assert np.linalg.norm(moved - rho) <= 1e-10

    def test_trace_and_positivity_preserved(self, rng):
        params = random_gksl_params(rng, 2)
        rho = fock.gaussian_density(GaussianState(random_correlation_matrix(rng, 2)))
        for t in (0.5, 2.0, 10.0):
            out = fock.dense_evolve(params, rho, t)
            assert abs(np.trace(out) - 1.0) <= 1e-11
            assert np.min(np.linalg.eigvalsh(out)) >= -1e-10

    def test_semigroup_factorization(self, rng):
        from quadferm.linalg import van_loan_integral
        import scipy.linalg
        n, t = 2, 1.2
        zero = np.zeros((n, n))
        for _ in range(3):
            params = random_gksl_params(rng, n)
            noise = van_loan_integral(params.a, params.m, t)
            lhs = scipy.linalg.expm(t * fock.super_liouvillian(params, n))
            rhs = scipy.linalg.expm(
                fock.super_liouvillian(LiouvillianParams(zero, noise), n)
            ) @ scipy.linalg.expm(
                t * fock.super_liouvillian(LiouvillianParams(params.a, zero), n)
            )
            assert np.linalg.norm(lhs - rhs) <= 1e-10

    def test_mode_cap(self):
        params = LiouvillianParams(np.zeros((6, 6)), np.zeros((6, 6)))
        with pytest.raises(ValidationError):
            fock.dense_evolve(params, np.eye(64), 1.0)


class TestGaussianDensity:
    def test_single_mode_diagonal(self):
        r = 0.37
        rho = fock.gaussian_density(GaussianState([[r]]))
        assert np.linalg.norm(rho - np.diag([1 - r, r])) <= 1e-14

    def test_vanishing_occupation_limit_is_vacuum(self):
        rho = fock.gaussian_density(GaussianState(np.zeros((2, 2))))
        assert np.linalg.norm(rho - fock.vacuum_projector(2)) <= 1e-14
        small = fock.gaussian_density(GaussianState(1e-9 * np.eye(2)))
        assert np.linalg.norm(small - fock.vacuum_projector(2)) <= 1e-8

    def test_boundary_spectrum_product_form(self):
        rho = fock.gaussian_density(GaussianState(np.diag([0.0, 1.0])))
        expected = np.zeros((4, 4))
        expected[1, 1] = 1.0  # mode 1 empty, mode 2 occupied
        assert np.linalg.norm(rho - expected) <= 1e-14

    def test_closed_form_and_product_form_agree(self, rng):
        r = random_correlation_matrix(rng, 3, lo=0.2, hi=0.8)
        closed = fock.gaussian_density(GaussianState(r))
        occ, vecs = np.linalg.eigh(r)
        product = np.eye(8, dtype=complex)
        for p, col in zip(occ, vecs.T):
            n_op = fock.smeared_creation(col, 3) @ fock.smeared_annihilation(col, 3)
            product = product @ ((1 - p) * (np.eye(8) - n_op) + p * n_op)
        assert np.linalg.norm(closed - product) <= 1e-12

    def test_expectations_reproduce_label(self, rng):
        r = random_correlation_matrix(rng, 3)
        rho = fock.gaussian_density(GaussianState(r))
        for _ in range(10):
            t_mat = random_hermitian(rng, 3)
            dense = np.trace(fock.quadratic_form(t_mat, 3) @ rho)
            assert abs(dense - np.trace(t_mat @ r)) <= 1e-10


class TestReadCorrelations:
    def test_vacuum_reads_zero(self):
        assert np.linalg.norm(fock.read_correlations(fock.vacuum_projector(3))) == 0.0

    def test_roundtrip(self, rng):
        r = random_correlation_matrix(rng, 3)
        back = fock.read_correlations(fock.gaussian_density(GaussianState(r)))
        assert np.max(np.abs(back - r)) <= 1e-11

    def test_fully_occupied_state_reads_identity(self):
        dim = 8
        rho = np.zeros((dim, dim), dtype=complex)
        rho[dim - 1, dim - 1] = 1.0
        assert np.linalg.norm(fock.read_correlations(rho) - np.eye(3)) <= 1e-13


class TestMajorana:
    def test_anticommutation_precheck(self):
        w = fock.majorana_operators(2)
        eye = np.eye(4)
        worst = 0.0
        for j in range(4):
            for k in range(4):
                worst = max(worst, np.linalg.norm(
                    w[j] @ w[k] + w[k] @ w[j] - 2 * (j == k) * eye))
        assert worst <= 1e-14

    def test_hermitian(self):
        for w in fock.majorana_operators(2):
            assert np.linalg.norm(w - w.conj().T) == 0.0

    def test_identical_generators_commute(self, rng):
        a = rng.standard_normal((4, 4))
        n_mat = rng.standard_normal((4, 4))
        n_mat = (n_mat - n_mat.T) / 2
        assert fock.majorana_commutator_residual(a, n_mat, a, n_mat, 2) <= 1e-12

    def test_random_quadruples(self, rng):
        for _ in range(5):
            a = rng.standard_normal((4, 4))
            b = rng.standard_normal((4, 4))
            n_mat = rng.standard_normal((4, 4))
            r_mat = rng.standard_normal((4, 4))
            n_mat = (n_mat - n_mat.T) / 2
            r_mat = (r_mat - r_mat.T) / 2
            assert fock.majorana_commutator_residual(a, n_mat, b, r_mat, 2) <= 1e-10

    def test_symmetric_noise_rejected(self):
        with pytest.raises(ValidationError):
            fock.majorana_liouvillian(np.eye(4), np.eye(4), 2)
