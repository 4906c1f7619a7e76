import numpy as np
import pytest
import scipy.linalg

from quadferm import fock, opbasis
from quadferm.errors import ValidationError
from quadferm.gaussian import LiouvillianParams
from quadferm.linalg import spectral_split
from quadferm.verify import (random_complex_matrix, random_density_matrix,
                             random_hermitian, random_psd)


def rand_vec(rng, n):
    return (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / np.sqrt(2)


class TestElements:
    def test_empty_lists_give_vacuum(self):
        for n in (1, 2, 3):
            assert np.array_equal(opbasis.phi_element([], [], n),
                                  fock.vacuum_projector(n))
            assert np.array_equal(opbasis.pi_element([], [], n),
                                  fock.vacuum_projector(n))

    def test_one_sided_elements_coincide(self, rng):
        n = 3
        xis = [rand_vec(rng, n) for _ in range(2)]
        etas = [rand_vec(rng, n) for _ in range(2)]
        assert np.array_equal(opbasis.phi_element(xis, [], n),
                              opbasis.pi_element(xis, [], n))
        assert np.array_equal(opbasis.phi_element([], etas, n),
                              opbasis.pi_element([], etas, n))

    def test_antisymmetry_under_swaps(self, rng):
        n = 3
        for _ in range(5):
            xis = [rand_vec(rng, n) for _ in range(2)]
            etas = [rand_vec(rng, n) for _ in range(2)]
            base = opbasis.phi_element(xis, etas, n)
            assert np.linalg.norm(base + opbasis.phi_element(xis[::-1], etas, n)) <= 1e-12
            assert np.linalg.norm(base + opbasis.phi_element(xis, etas[::-1], n)) <= 1e-12

    def test_single_pair_closed_form(self, rng):
        # one creation and one annihilation argument: the dressed element is
        # the plain one minus the pairing times the vacuum
        n = 2
        xi, eta = rand_vec(rng, n), rand_vec(rng, n)
        lhs = opbasis.phi_element([xi], [eta], n)
        rhs = opbasis.pi_element([xi], [eta], n) \
            - np.vdot(eta, xi) * fock.vacuum_projector(n)
        assert np.linalg.norm(lhs - rhs) <= 1e-13

    def test_rank_one_generator_is_nilpotent(self, rng):
        n = 3
        for _ in range(5):
            xi, eta = rand_vec(rng, n), rand_vec(rng, n)
            params = LiouvillianParams(np.zeros((n, n)),
                                       np.outer(xi, eta.conj()))
            gen = fock.super_liouvillian(params, n)
            assert np.linalg.norm(gen @ gen) <= 1e-13

    def test_too_many_vectors_rejected(self, rng):
        with pytest.raises(ValidationError):
            opbasis.phi_element([rand_vec(rng, 2)] * 3, [], 2)


class TestConversions:
    def test_standard_basis_term_by_term(self, rng):
        n = 2
        e = np.eye(n, dtype=complex)
        for xis, etas in (
            ([e[0]], [e[0]]),
            ([e[0], e[1]], [e[0]]),
            ([e[0]], [e[0], e[1]]),
            ([e[0], e[1]], [e[0], e[1]]),
        ):
            direct = opbasis.phi_element(xis, etas, n)
            expanded = opbasis.phi_from_pi(xis, etas, n)
            assert np.linalg.norm(direct - expanded) <= 1e-12

    @pytest.mark.parametrize("n", [2, 3])
    def test_roundtrip_on_random_vectors(self, rng, n):
        for _ in range(5):
            p_len = int(rng.integers(0, n + 1))
            q_len = int(rng.integers(0, n + 1))
            xis = [rand_vec(rng, n) for _ in range(p_len)]
            etas = [rand_vec(rng, n) for _ in range(q_len)]
            assert np.linalg.norm(
                opbasis.phi_element(xis, etas, n)
                - opbasis.phi_from_pi(xis, etas, n)) <= 1e-11
            assert np.linalg.norm(
                opbasis.pi_element(xis, etas, n)
                - opbasis.pi_from_phi(xis, etas, n)) <= 1e-11


class TestFamily:
    @pytest.mark.parametrize("n", [2, 3])
    def test_full_rank(self, rng, n):
        xi_basis = [rand_vec(rng, n) for _ in range(n)]
        eta_basis = [rand_vec(rng, n) for _ in range(n)]
        _, b = opbasis.phi_family_matrix(xi_basis, eta_basis, n)
        b = b / np.linalg.norm(b, axis=0, keepdims=True)
        assert np.linalg.svd(b, compute_uv=False)[-1] > 1e-8

    def test_expansion_reconstructs(self, rng):
        n = 2
        basis = [rand_vec(rng, n) for _ in range(n)]
        rho = random_complex_matrix(rng, 4)
        labels, coeffs, b = opbasis.expand_in_phi(rho, basis, basis, n)
        assert len(labels) == 16
        assert np.linalg.norm(fock.unvec(b @ coeffs) - rho) <= 1e-11


class TestEvolutionCovariance:
    def test_time_zero(self, rng):
        n = 2
        xis = [rand_vec(rng, n)]
        etas = [rand_vec(rng, n)]
        a = random_complex_matrix(rng, n)
        assert opbasis.phi_evolution_residual(a, xis, etas, 0.0, n) <= 1e-13

    def test_empty_lists_stay_at_vacuum(self, rng):
        n = 2
        a = random_complex_matrix(rng, n)
        assert opbasis.phi_evolution_residual(a, [], [], 1.5, n) <= 1e-12

    def test_random_arguments(self, rng):
        n = 3
        for _ in range(3):
            a = random_complex_matrix(rng, n)
            xis = [rand_vec(rng, n) for _ in range(2)]
            etas = [rand_vec(rng, n)]
            assert opbasis.phi_evolution_residual(a, xis, etas, 0.8, n) <= 1e-10


class TestPersistentProjection:
    def _split_instance(self, rng):
        h2 = random_hermitian(rng, 2)
        d2 = random_psd(rng, 2) + 0.4 * np.eye(2)
        a = np.zeros((3, 3), dtype=complex)
        a[0, 0] = 0.9j
        a[1:, 1:] = -1j * h2 - d2
        return a

    def test_matches_damped_semigroup_limit(self, rng):
        a = self._split_instance(rng)
        split = spectral_split(a)
        rho = random_density_matrix(rng, 8)
        projected = opbasis.project_persistent(rho, split.p0)
        zero = np.zeros((3, 3))
        prop = scipy.linalg.expm(
            80.0 * fock.super_liouvillian(LiouvillianParams(split.a_minus, zero), 3))
        limit = fock.unvec(prop @ fock.vec(rho))
        assert np.linalg.norm(projected - limit) <= 1e-10

    def test_idempotent(self, rng):
        a = self._split_instance(rng)
        split = spectral_split(a)
        rho = random_density_matrix(rng, 8)
        once = opbasis.project_persistent(rho, split.p0)
        twice = opbasis.project_persistent(once, split.p0)
        assert np.linalg.norm(twice - once) <= 1e-11

    def test_trivial_projector_keeps_only_vacuum(self, rng):
        rho = random_density_matrix(rng, 4)
        out = opbasis.project_persistent(rho, np.zeros((2, 2)))
        assert np.linalg.norm(out - fock.vacuum_projector(2)) <= 1e-12

    def test_full_projector_is_identity(self, rng):
        rho = random_density_matrix(rng, 4)
        out = opbasis.project_persistent(rho, np.eye(2))
        assert np.linalg.norm(out - rho) <= 1e-11
