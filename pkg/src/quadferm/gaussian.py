"""Gaussian (correlation-matrix) representation of states and dynamics.

A Gaussian state of n fermionic modes is labelled by its one-particle
correlation matrix R, Hermitian with spectrum in [0, 1], where
``R_jk = Tr[c_k† c_j rho]``.  Under a Markovian generator with drift A and
noise M the label evolves by the affine flow

    R(t) = e^{tA} R e^{tA†} + int_0^t e^{sA} M e^{sA†} ds,

which is polynomial in n.  This module is the efficient path; the
exponential-cost ground truth lives in :mod:`quadferm.fock`.

The generator pair is admissible (generates a completely positive
trace-preserving semigroup) iff ``O <= M <= -A - A†``; a microscopic model
(Hamiltonian matrix H, loss vectors, gain vectors) maps onto
``A = -iH - D - E, M = 2E`` with D and E the loss/gain Gram matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .affine import AffineGenerator
from .errors import PhysicsError, ValidationError
from .linalg import (as_square, hermitize, is_hermitian, lyapunov_solve,
                     mat_exp, spectral_split, van_loan_integral)

__all__ = [
    "LiouvillianParams",
    "GaussianState",
    "PhysicalModel",
    "AsymptoticDecomposition",
    "params_from_model",
    "evolve_state",
    "steady_state",
    "stationary_correlation",
    "asymptotic_decomposition",
    "expectation_quadratic",
    "entropy",
]

#: Spectrum-of-R physicality tolerance and admissibility tolerance.
SPECTRUM_TOL = 1e-10
GKSL_TOL = 1e-10


@dataclass(frozen=True)
class LiouvillianParams:
    """Generator pair (a, m); ``gksl`` records admissibility.

    ``gksl`` is computed at construction: True iff m is Hermitian and
    ``O <= m <= -a - a†`` within GKSL_TOL (eigenvalue checks on m and on
    ``-a - a† - m``).
    """

    a: np.ndarray
    m: np.ndarray
    gksl: bool = field(init=False)

    def __post_init__(self):
        a = as_square(self.a, "drift")
        m = as_square(self.m, "noise")
        if a.shape != m.shape:
            raise ValidationError(f"size mismatch: {a.shape} vs {m.shape}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "m", m)
        ok = is_hermitian(m)
        if ok:
            scale = max(1.0, float(np.linalg.norm(m)),
                        float(np.linalg.norm(a)))
            lo = float(np.min(np.linalg.eigvalsh(hermitize(m))))
            gap = -(a + a.conj().T) - m
            hi = float(np.min(np.linalg.eigvalsh(hermitize(gap))))
            ok = lo >= -GKSL_TOL * scale and hi >= -GKSL_TOL * scale
        object.__setattr__(self, "gksl", bool(ok))

    @property
    def n(self) -> int:
        return self.a.shape[0]


@dataclass(frozen=True)
class GaussianState:
    """A Gaussian state, stored as its correlation matrix ``r``."""

    r: np.ndarray

    def __post_init__(self):
        r = as_square(self.r, "correlation matrix")
        if not is_hermitian(r):
            raise ValidationError("correlation matrix must be Hermitian")
        r = hermitize(r)
        occ = np.linalg.eigvalsh(r)
        if occ.size and (occ[0] < -SPECTRUM_TOL or occ[-1] > 1 + SPECTRUM_TOL):
            raise PhysicsError(
                "correlation spectrum escapes [0, 1]: "
                f"[{occ[0]:.3e}, {occ[-1]:.6f}]"
            )
        object.__setattr__(self, "r", r)

    @property
    def n(self) -> int:
        return self.r.shape[0]

    @classmethod
    def vacuum(cls, n: int) -> "GaussianState":
        return cls(np.zeros((n, n), dtype=complex))

    def occupations(self) -> np.ndarray:
        """Mode occupations, the real diagonal of r."""
        return self.r.diagonal().real.copy()


@dataclass(frozen=True)
class PhysicalModel:
    """Microscopic data: Hamiltonian matrix and loss/gain coupling vectors."""

    h: np.ndarray
    loss_vectors: tuple = ()
    gain_vectors: tuple = ()

    def __post_init__(self):
        h = as_square(self.h, "hamiltonian matrix")
        if not is_hermitian(h):
            raise ValidationError("hamiltonian matrix must be Hermitian")
        n = h.shape[0]
        loss = tuple(np.asarray(v, dtype=complex).reshape(-1)
                     for v in self.loss_vectors)
        gain = tuple(np.asarray(v, dtype=complex).reshape(-1)
                     for v in self.gain_vectors)
        for v in (*loss, *gain):
            if v.shape != (n,):
                raise ValidationError(
                    f"coupling vector has length {v.shape[0]}, expected {n}"
                )
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "loss_vectors", loss)
        object.__setattr__(self, "gain_vectors", gain)

    @property
    def n(self) -> int:
        return self.h.shape[0]

    def loss_gram(self) -> np.ndarray:
        """D = sum of l l† over loss channels (positive semidefinite)."""
        return _gram(self.loss_vectors, self.n)

    def gain_gram(self) -> np.ndarray:
        """E = sum of l l† over gain channels (positive semidefinite)."""
        return _gram(self.gain_vectors, self.n)


def _gram(vectors, n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=complex)
    for v in vectors:
        out += np.outer(v, v.conj())
    return out


def params_from_model(model: PhysicalModel) -> LiouvillianParams:
    """Generator pair of a microscopic model: A = -iH - D - E, M = 2E.

    Admissibility is automatic here: M = 2E >= 0 and
    -A - A† - M = 2D >= 0 by construction.
    """
    d = model.loss_gram()
    e = model.gain_gram()
    return LiouvillianParams(-1j * model.h - d - e, 2 * e)


def evolve_state(params: LiouvillianParams, state: GaussianState,
                 t: float) -> GaussianState:
    """Evolve a Gaussian state: ``r(t) = e^{tA} r e^{tA†} + noise integral``.

    Equivalently the affine flow of (A, M) applied to r.  Raises
    PhysicsError if the evolved spectrum escapes [0, 1] beyond tolerance,
    which signals an inadmissible generator or numerical failure.
    """
    if params.n != state.n:
        raise ValidationError(
            f"size mismatch: params {params.n}, state {state.n}"
        )
    t = float(t)
    if t < 0:
        raise ValidationError(f"time must be nonnegative, got {t}")
    prop = mat_exp(t * params.a)
    r_t = prop @ state.r @ prop.conj().T + van_loan_integral(params.a, params.m, t)
    return GaussianState(hermitize(r_t))


def stationary_correlation(params: LiouvillianParams) -> np.ndarray:
    """Correlation matrix of the unique steady state, ``A R + R A† = -M``.

    Requires every drift eigenvalue to be strictly damped; otherwise the
    steady state is not unique and :func:`asymptotic_decomposition` applies.
    """
    split = spectral_split(params.a)
    if np.linalg.norm(split.a0) != 0.0:
        eigs = ", ".join(f"{z.imag:+.6g}i" for z in split.imaginary_eigenvalues)
        raise PhysicsError(
            "no unique steady state: drift has imaginary-axis eigenvalues "
            f"[{eigs}]; use asymptotic_decomposition"
        )
    return lyapunov_solve(params.a, params.m)


def steady_state(params: LiouvillianParams) -> GaussianState:
    """The unique steady Gaussian state of a strictly damped generator."""
    return GaussianState(stationary_correlation(params))


@dataclass(frozen=True)
class AsymptoticDecomposition:
    """Long-time data: persistent generator, limiting noise, projected state.

    The correlation matrix approaches
    ``m_inf + e^{t a0} (P0 r P0) e^{t a0†}`` as t grows: a stationary part
    plus an undamped oscillation of the projected initial data.
    """

    a0_flow: AffineGenerator
    m_inf: np.ndarray
    projected: GaussianState
    p0: np.ndarray

    def predicted_correlation(self, t: float) -> np.ndarray:
        """The asymptotic correlation matrix at time t."""
        rot = mat_exp(t * self.a0_flow.a)
        return self.m_inf + rot @ self.projected.r @ rot.conj().T


def asymptotic_decomposition(params: LiouvillianParams,
                             state: GaussianState) -> AsymptoticDecomposition:
    """Split the long-time behavior into steady and persistent parts.

    Valid for admissible generators: dissipativity forces the noise matrix
    to vanish on the persistent subspace (``A0 M = M A0 = O``), so the
    improper integral ``m_inf = int_0^inf e^{sA} M e^{sA†} ds`` converges
    even when imaginary-axis eigenvalues are present.  It is computed by a
    Lyapunov solve restricted to the damped subspace.
    """
    if not params.gksl:
        raise PhysicsError(
            "asymptotic decomposition requires an admissible generator "
            "(O <= M <= -A - A†)"
        )
    if params.n != state.n:
        raise ValidationError(
            f"size mismatch: params {params.n}, state {state.n}"
        )
    split = spectral_split(params.a)
    n = params.n
    dim0 = int(round(split.p0.trace().real))
    if dim0 == 0:
        m_inf = lyapunov_solve(params.a, params.m)
    elif dim0 == n:
        m_inf = np.zeros((n, n), dtype=complex)
    else:
        # Orthonormal basis of the damped subspace from the projector
        # complement; the drift leaves it invariant, so the restricted
        # Lyapunov solve reproduces the full integral.
        occ, vecs = np.linalg.eigh(split.p0)
        w = vecs[:, occ < 0.5]
        a_red = w.conj().T @ params.a @ w
        m_red = w.conj().T @ params.m @ w
        m_inf = w @ lyapunov_solve(a_red, m_red) @ w.conj().T
    projected = GaussianState(hermitize(split.p0 @ state.r @ split.p0))
    zero = np.zeros((n, n), dtype=complex)
    return AsymptoticDecomposition(
        a0_flow=AffineGenerator(split.a0, zero),
        m_inf=hermitize(m_inf),
        projected=projected,
        p0=split.p0,
    )


def expectation_quadratic(state: GaussianState, t_mat) -> complex:
    """Expectation of the quadratic observable with coefficient matrix T.

    Equals ``tr(T R)``; real whenever T is Hermitian.
    """
    t_mat = as_square(t_mat, "coefficient matrix")
    if t_mat.shape != state.r.shape:
        raise ValidationError(
            f"size mismatch: {t_mat.shape} vs {state.r.shape}"
        )
    val = complex(np.trace(t_mat @ state.r))
    if is_hermitian(t_mat):
        return complex(val.real)
    return val


def entropy(state: GaussianState) -> float:
    """Von Neumann entropy ``-tr(R log R) - tr((I-R) log(I-R))``.

    Evaluated on the occupation spectrum with the endpoint convention
    ``0 log 0 = 0``.
    """
    occ = np.clip(np.linalg.eigvalsh(state.r), 0.0, 1.0)
    total = 0.0
    for p in occ:
        for q in (p, 1.0 - p):
            if q > 0.0:
                total -= q * np.log(q)
    return float(total)
