"""Boundary-localized steady states of an asymmetric-hopping chain.

A one-dimensional chain with asymmetric nearest-neighbor hopping has a
non-Hermitian Hamiltonian that a diagonal similarity ``V(kappa)``,
``kappa = sqrt((gamma - lambda)/(gamma + lambda)) < 1``, maps to a Hermitian
one, so its eigenvectors pile up at one edge (the skin effect).
This module embeds that Hamiltonian into the open-system framework: given
the chain parameters it constructs a gain matrix E such that the generator
pair ``A = -i H_nh - 2E, M = 2E`` is admissible and its unique steady state
is the diagonal correlation matrix ``X = x V(kappa)^{-2}``, whose
occupations grow geometrically toward one end.  The contrasting
"featureless" gain choice ``E = delta D`` yields the flat steady state
``X = delta/(1 + delta) I`` for the same non-Hermitian Hamiltonian, showing
that the bath split, not the Hamiltonian alone, decides localization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import PhysicsError, ValidationError
from .gaussian import LiouvillianParams, expectation_quadratic, steady_state
from .linalg import hermitize, lyapunov_solve

__all__ = [
    "HatanoNelsonParams",
    "SkinMatrices",
    "BathMatrices",
    "build_matrices",
    "build_bath",
    "liouvillian_params",
    "steady_profile",
    "featureless_choice",
    "localization_slope",
]


@dataclass(frozen=True)
class HatanoNelsonParams:
    """Chain parameters: size n, on-site energy omega, hopping asymmetry
    (gamma +/- lam on the two directions), uniform loss rate a*gamma, and
    the steady-state amplitude x.

    Validity requires omega > 0, gamma > lam > 0 and a > 2 (which makes the
    bath construction positive definite), and
    ``0 < x < kappa^(2n-2) / 2`` so every steady occupation stays below 1/2.
    ``x`` defaults to the midpoint-safe ``kappa^(2n-2) / 4``.
    """

    n: int
    omega: float
    lam: float
    gamma: float
    a: float
    x: float | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"chain length must be >= 1, got {self.n}")
        if not self.omega > 0:
            raise ValidationError(f"omega must be positive, got {self.omega}")
        if not self.lam > 0:
            raise ValidationError(f"lambda must be positive, got {self.lam}")
        if not self.gamma > self.lam:
            raise ValidationError(
                f"gamma must exceed lambda, got gamma={self.gamma}, "
                f"lambda={self.lam}"
            )
        if not self.a > 2:
            raise ValidationError(f"loss parameter a must exceed 2, got {self.a}")
        cap = self.kappa ** (2 * self.n - 2) / 2
        if self.x is None:
            object.__setattr__(self, "x", cap / 2)
        if not 0 < self.x < cap:
            raise ValidationError(
                f"amplitude x must lie in (0, {cap:.6g}), got {self.x}"
            )

    @property
    def kappa(self) -> float:
        return float(np.sqrt((self.gamma - self.lam) / (self.gamma + self.lam)))


class SkinMatrices(NamedTuple):
    h_nh: np.ndarray     # non-Hermitian Hamiltonian of the open chain
    f: np.ndarray        # symmetric nearest-neighbor hopping pattern
    g: np.ndarray        # Hermitian current pattern i(sub - super)
    v_kappa: np.ndarray  # diagonal similarity diag(kappa^(j-1))


class BathMatrices(NamedTuple):
    e: np.ndarray        # gain Gram matrix
    m: np.ndarray        # noise matrix, 2E
    a: np.ndarray        # drift, -i H_nh - M


def _hopping_patterns(n: int) -> tuple[np.ndarray, np.ndarray]:
    ones = np.ones(n - 1)
    f = np.diag(ones, -1) + np.diag(ones, 1)
    g = 1j * np.diag(ones, -1) - 1j * np.diag(ones, 1)
    return f.astype(complex), g


def build_matrices(p: HatanoNelsonParams) -> SkinMatrices:
    """Lattice matrices of the open chain.

    The non-Hermitian Hamiltonian is ``(omega - i a gamma) I + K`` with
    (gamma + lam) on the subdiagonal and -(gamma - lam) on the
    superdiagonal; conjugating by V(kappa) turns it into
    ``(omega - i a gamma) I - i sqrt(gamma^2 - lam^2) g``, which is normal,
    so the verification below pins the construction.
    """
    n = p.n
    f, g = _hopping_patterns(n)
    ones = np.ones(n - 1)
    k = (p.gamma + p.lam) * np.diag(ones, -1) - (p.gamma - p.lam) * np.diag(ones, 1)
    h_nh = (p.omega - 1j * p.a * p.gamma) * np.eye(n) + k
    v_kappa = np.diag(p.kappa ** np.arange(n)).astype(complex)
    v_inv = np.diag(p.kappa ** -np.arange(n))
    target = (p.omega - 1j * p.a * p.gamma) * np.eye(n) \
        - 1j * np.sqrt(p.gamma ** 2 - p.lam ** 2) * g
    residual = np.linalg.norm(v_kappa @ h_nh @ v_inv - target)
    if residual > 1e-10 * (1 + np.linalg.norm(h_nh)):
        raise PhysicsError(
            f"similarity check failed with residual {residual:.3e}; "
            "chain parameters are numerically degenerate"
        )
    return SkinMatrices(h_nh=h_nh, f=f, g=g, v_kappa=v_kappa)


def build_bath(p: HatanoNelsonParams) -> BathMatrices:
    """Gain matrix that makes ``X = x V(kappa)^{-2}`` the steady state.

    E solves ``(2X - I) E + E (2X - I) = -Q`` with
    ``Q = x V^{-1} [2 a gamma I + 2 sqrt(gamma^2-lam^2) g] V^{-1} >= 0``;
    the amplitude bound keeps ``2X - I`` negative definite so the solution
    equals the convergent integral of ``e^{(2X-I)s} Q e^{(2X-I)s}``.
    Postconditions checked here: E >= 0, the admissibility sandwich
    ``O <= M <= -A - A†``, and ``A X + X A† + M = 0``.
    """
    mats = build_matrices(p)
    n = p.n
    v_inv = np.diag(p.kappa ** -np.arange(n)).astype(complex)
    x_mat = p.x * v_inv @ v_inv
    q = p.x * v_inv @ (
        2 * p.a * p.gamma * np.eye(n)
        + 2 * np.sqrt(p.gamma ** 2 - p.lam ** 2) * mats.g
    ) @ v_inv
    e = hermitize(lyapunov_solve(2 * x_mat - np.eye(n), q))
    m = 2 * e
    a_mat = -1j * mats.h_nh - m
    for name, mat in (("gain matrix", e),
                      ("admissibility gap", -(a_mat + a_mat.conj().T) - m)):
        low = float(np.min(np.linalg.eigvalsh(hermitize(mat))))
        if low < -1e-9:
            raise PhysicsError(f"{name} is not positive: min eig = {low:.3e}")
    fixed = np.linalg.norm(a_mat @ x_mat + x_mat @ a_mat.conj().T + m)
    if fixed > 1e-9 * (1 + np.linalg.norm(m)):
        raise PhysicsError(
            f"target steady state violates the fixed-point equation "
            f"(residual {fixed:.3e})"
        )
    return BathMatrices(e=e, m=m, a=a_mat)


def liouvillian_params(p: HatanoNelsonParams) -> LiouvillianParams:
    bath = build_bath(p)
    return LiouvillianParams(bath.a, bath.m)


def steady_profile(p: HatanoNelsonParams) -> np.ndarray:
    """Steady occupations n_j = x kappa^(2-2j), read through the Gaussian
    steady state and quadratic expectations of the projectors e_j e_j†."""
    state = steady_state(liouvillian_params(p))
    n = p.n
    occs = np.empty(n)
    for j in range(n):
        proj = np.zeros((n, n), dtype=complex)
        proj[j, j] = 1.0
        occs[j] = expectation_quadratic(state, proj).real
    return occs


def localization_slope(profile: np.ndarray) -> tuple[float, float]:
    """Mean and max deviation of the per-site slope of log occupations."""
    steps = np.diff(np.log(np.asarray(profile, dtype=float)))
    return float(np.mean(steps)), float(np.max(np.abs(steps - np.mean(steps))))


def featureless_choice(p: HatanoNelsonParams, delta: float) -> np.ndarray:
    """Steady state of the flat gain split ``E = delta D``.

    The same non-Hermitian Hamiltonian, with loss and gain now sharing one
    spatial profile, relaxes to ``X = delta/(1+delta) I``: no localization.
    Requires ``0 < delta < 1`` so both Gram matrices stay positive.
    """
    delta = float(delta)
    if not 0 < delta < 1:
        raise ValidationError(f"delta must lie in (0, 1), got {delta}")
    mats = build_matrices(p)
    n = p.n
    d_mat = p.gamma * (p.a * np.eye(n) + mats.g) / (1 - delta)
    e_mat = delta * d_mat
    h = p.omega * np.eye(n) + p.lam * mats.f
    a_mat = -1j * h - d_mat - e_mat
    x_out = hermitize(lyapunov_solve(a_mat, 2 * e_mat))
    target = delta / (1 + delta) * np.eye(n)
    if np.linalg.norm(x_out - target) > 1e-9 * n:
        raise PhysicsError(
            "flat-split steady state deviates from delta/(1+delta) I by "
            f"{np.linalg.norm(x_out - target):.3e}"
        )
    return x_out
