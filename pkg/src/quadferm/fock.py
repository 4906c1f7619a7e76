"""Brute-force Fock-space oracle.

Everything the efficient correlation-matrix path claims is checked here
against dense matrices: fermionic modes are built explicitly on the
2^n-dimensional Fock space, superoperators on density matrices are stored
as 4^n x 4^n matrices acting on column-stacked operators, and semigroups
are evaluated by exponentiating those matrices.  Exponential cost is the
point: no structure the fast path relies on is assumed.

Operator conventions.  The occupation basis is ordered by the bit string
(nu_1, ..., nu_n) with nu_1 most significant, the all-zeros vector (index 0)
is the vacuum, and the annihilator of mode j carries the parity string over
modes 1..j-1.  Smearing uses the sesquilinear pairing, antilinear in the
first slot: ``(c, xi) = sum_j xi_j c_j†`` creates, ``(eta, c) = sum_j
conj(eta_j) c_j`` annihilates, and ``(c, A c) = sum_jk A_jk c_j† c_k``.

Generator conventions.  The family L(A, M) acting on density matrices is

    loss(-A - A† - M) + gain(M) + left(A + M) + right(A† + M) - tr(M),

with the four basic maps ``loss(B): rho -> sum B_jk c_k rho c_j†``,
``gain(B): rho -> sum B_jk c_j† rho c_k``, ``left(B): rho -> (c, B c) rho``
and ``right(B): rho -> rho (c, B c)``.  A microscopic model with
Hamiltonian H, loss Gram matrix D and gain Gram matrix E corresponds to
``L(-iH - D - E, 2E)``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import scipy.linalg

from .errors import ValidationError
from .gaussian import GaussianState, LiouvillianParams
from .linalg import as_square, hermitize

__all__ = [
    "MAX_MODES",
    "MAX_DENSE_EVOLVE_MODES",
    "annihilators",
    "creators",
    "vacuum_projector",
    "smeared_creation",
    "smeared_annihilation",
    "quadratic_form",
    "vec",
    "unvec",
    "super_left",
    "super_right",
    "super_sandwich",
    "super_basic",
    "super_liouvillian",
    "super_master_equation",
    "apply_generator",
    "dense_evolve",
    "gaussian_density",
    "read_correlations",
    "majorana_operators",
    "majorana_liouvillian",
    "majorana_commutator_residual",
    "trace_distance",
]

#: Hard caps: operator construction / superoperator exponentiation.
MAX_MODES = 6
MAX_DENSE_EVOLVE_MODES = 5

_LOWER = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
_PARITY = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def _check_modes(n: int, cap: int = MAX_MODES) -> int:
    n = int(n)
    if not 1 <= n <= cap:
        raise ValidationError(f"mode count must be in [1, {cap}], got {n}")
    return n


@lru_cache(maxsize=None)
def _car(n: int) -> tuple[np.ndarray, ...]:
    """Annihilators c_1..c_n as 2^n x 2^n matrices (graded tensor build)."""
    ops = []
    for j in range(n):
        factors = [_PARITY] * j + [_LOWER] + [np.eye(2, dtype=complex)] * (n - j - 1)
        op = factors[0]
        for f in factors[1:]:
            op = np.kron(op, f)
        op.setflags(write=False)
        ops.append(op)
    return tuple(ops)


def annihilators(n: int) -> list[np.ndarray]:
    """The mode annihilators c_1..c_n; they satisfy the anticommutation
    relations {c_j, c_k} = 0, {c_j, c_k†} = delta_jk exactly."""
    return [op.copy() for op in _car(_check_modes(n))]


def creators(n: int) -> list[np.ndarray]:
    return [op.conj().T.copy() for op in _car(_check_modes(n))]


def vacuum_projector(n: int) -> np.ndarray:
    """The vacuum density matrix |v><v| (all modes empty)."""
    dim = 2 ** _check_modes(n)
    omega = np.zeros((dim, dim), dtype=complex)
    omega[0, 0] = 1.0
    return omega


def smeared_creation(xi, n: int) -> np.ndarray:
    """(c, xi) = sum_j xi_j c_j†."""
    xi = np.asarray(xi, dtype=complex).reshape(-1)
    ops = _car(_check_modes(n))
    if xi.shape != (len(ops),):
        raise ValidationError(f"vector length {xi.shape[0]} != mode count {n}")
    out = np.zeros_like(ops[0])
    for coeff, op in zip(xi, ops):
        out += coeff * op.conj().T
    return out


def smeared_annihilation(eta, n: int) -> np.ndarray:
    """(eta, c) = sum_j conj(eta_j) c_j."""
    eta = np.asarray(eta, dtype=complex).reshape(-1)
    ops = _car(_check_modes(n))
    if eta.shape != (len(ops),):
        raise ValidationError(f"vector length {eta.shape[0]} != mode count {n}")
    out = np.zeros_like(ops[0])
    for coeff, op in zip(eta, ops):
        out += np.conj(coeff) * op
    return out


def quadratic_form(a, n: int) -> np.ndarray:
    """(c, A c) = sum_jk A_jk c_j† c_k on the Fock space."""
    a = as_square(a, "coefficient matrix")
    ops = _car(_check_modes(n))
    if a.shape != (n, n):
        raise ValidationError(f"coefficient matrix is {a.shape}, expected {(n, n)}")
    out = np.zeros_like(ops[0])
    for j in range(n):
        row = np.zeros_like(ops[0])
        for k in range(n):
            row += a[j, k] * ops[k]
        out += ops[j].conj().T @ row
    return out


# -- superoperators as 4^n x 4^n matrices (column-stacking vec) -----------

def vec(rho: np.ndarray) -> np.ndarray:
    """Column-stacked vectorization."""
    return np.asarray(rho, dtype=complex).reshape(-1, order="F")


def unvec(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=complex).reshape(-1)
    dim = int(round(np.sqrt(v.size)))
    if dim * dim != v.size:
        raise ValidationError(f"vector length {v.size} is not a perfect square")
    return v.reshape((dim, dim), order="F")


def super_left(op: np.ndarray) -> np.ndarray:
    """rho -> op rho."""
    return np.kron(np.eye(op.shape[0], dtype=complex), op)


def super_right(op: np.ndarray) -> np.ndarray:
    """rho -> rho op."""
    return np.kron(op.T, np.eye(op.shape[0], dtype=complex))


def super_sandwich(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """rho -> x rho y, i.e. kron(y^T, x) on column-stacked operators."""
    return np.kron(y.T, x)


def super_basic(kind: str, a, n: int) -> np.ndarray:
    """One of the four basic superoperators with coefficient matrix ``a``.

    kind: 'loss'  -> sum_jk a_jk c_k rho c_j†
          'gain'  -> sum_jk a_jk c_j† rho c_k
          'left'  -> (c, a c) rho
          'right' -> rho (c, a c)
    """
    a = as_square(a, "coefficient matrix")
    n = _check_modes(n)
    if a.shape != (n, n):
        raise ValidationError(f"coefficient matrix is {a.shape}, expected {(n, n)}")
    ops = _car(n)
    dim = 2 ** n
    if kind == "left":
        return super_left(quadratic_form(a, n))
    if kind == "right":
        return super_right(quadratic_form(a, n))
    out = np.zeros((dim * dim, dim * dim), dtype=complex)
    if kind == "loss":
        for k in range(n):
            envelope = np.zeros((dim, dim), dtype=complex)
            for j in range(n):
                envelope += a[j, k] * ops[j].conj()
            out += np.kron(envelope, ops[k])
        return out
    if kind == "gain":
        for j in range(n):
            envelope = np.zeros((dim, dim), dtype=complex)
            for k in range(n):
                envelope += a[j, k] * ops[k]
            out += np.kron(envelope.T, ops[j].conj().T)
        return out
    raise ValidationError(f"unknown superoperator kind {kind!r}")


def super_liouvillian(params: LiouvillianParams, n: int | None = None) -> np.ndarray:
    """The dense matrix of the generator L(A, M).

    Trace preserving for every (A, M): the vectorized trace functional
    annihilates it.
    """
    if n is None:
        n = params.n
    n = _check_modes(n)
    if params.n != n:
        raise ValidationError(f"params are {params.n}-mode, expected {n}")
    a, m = params.a, params.m
    dim = 2 ** n
    out = super_basic("loss", -a - a.conj().T - m, n)
    out += super_basic("gain", m, n)
    out += super_basic("left", a + m, n)
    out += super_basic("right", a.conj().T + m, n)
    out -= np.trace(m) * np.eye(dim * dim, dtype=complex)
    return out


def super_master_equation(h, loss_vectors=(), gain_vectors=()) -> np.ndarray:
    """Dense generator assembled directly from the master equation:

        rho -> -i[(c,Hc), rho]
               + sum_loss (2 D rho D† - {D† D, rho})
               + sum_gain (2 D† rho D - {D D†, rho}),

    with jump operators D = (l, c).  Independent of the L(A, M) assembly;
    used to pin the convention A = -iH - D - E, M = 2E.
    """
    h = as_square(h, "hamiltonian matrix")
    n = h.shape[0]
    _check_modes(n)
    ham = quadratic_form(h, n)
    out = -1j * (super_left(ham) - super_right(ham))
    for v in loss_vectors:
        d_op = smeared_annihilation(v, n)
        out += 2 * super_sandwich(d_op, d_op.conj().T)
        dd = d_op.conj().T @ d_op
        out -= super_left(dd) + super_right(dd)
    for v in gain_vectors:
        d_op = smeared_annihilation(v, n)
        out += 2 * super_sandwich(d_op.conj().T, d_op)
        dd = d_op @ d_op.conj().T
        out -= super_left(dd) + super_right(dd)
    return out


def apply_generator(a, m, rho: np.ndarray) -> np.ndarray:
    """Apply L(A, M) to a single operator without building the 4^n matrix."""
    a = as_square(a, "drift")
    m = as_square(m, "noise")
    n = int(round(np.log2(rho.shape[0])))
    ops = _car(_check_modes(n))
    b = -a - a.conj().T - m
    out = np.zeros_like(rho, dtype=complex)
    for k in range(n):
        envelope = np.zeros_like(rho, dtype=complex)
        for j in range(n):
            envelope += b[j, k] * ops[j].conj().T
        out += ops[k] @ rho @ envelope
    for j in range(n):
        envelope = np.zeros_like(rho, dtype=complex)
        for k in range(n):
            envelope += m[j, k] * ops[k]
        out += ops[j].conj().T @ rho @ envelope
    out += quadratic_form(a + m, n) @ rho
    out += rho @ quadratic_form(a.conj().T + m, n)
    out -= np.trace(m) * rho
    return out


def dense_evolve(params: LiouvillianParams, rho: np.ndarray, t: float) -> np.ndarray:
    """Evolve a density matrix by exponentiating the dense generator."""
    n = params.n
    if n > MAX_DENSE_EVOLVE_MODES:
        raise ValidationError(
            f"dense evolution capped at {MAX_DENSE_EVOLVE_MODES} modes, got {n}"
        )
    rho = as_square(rho, "density matrix")
    if rho.shape[0] != 2 ** n:
        raise ValidationError(
            f"density matrix is {rho.shape[0]}-dimensional, expected {2 ** n}"
        )
    t = float(t)
    if t < 0:
        raise ValidationError(f"time must be nonnegative, got {t}")
    prop = scipy.linalg.expm(t * super_liouvillian(params, n))
    return unvec(prop @ vec(rho))


def gaussian_density(state: GaussianState) -> np.ndarray:
    """Dense density matrix of a Gaussian state.

    For spectra strictly inside (0, 1) this is the closed form
    ``det(I - R) exp((c, log(R (I - R)^{-1}) c))``; occupations at the
    endpoints switch to the equivalent eigenbasis product of single-mode
    factors, which handles empty and full modes exactly.
    """
    n = _check_modes(state.n)
    occ, vecs = np.linalg.eigh(state.r)
    occ = np.clip(occ, 0.0, 1.0)
    if np.min(occ) > 1e-12 and np.max(occ) < 1 - 1e-12:
        log_ratio = np.log(occ / (1 - occ))
        x_mat = (vecs * log_ratio) @ vecs.conj().T
        rho = float(np.prod(1 - occ)) * scipy.linalg.expm(quadratic_form(x_mat, n))
    else:
        dim = 2 ** n
        rho = np.eye(dim, dtype=complex)
        for p, col in zip(occ, vecs.T):
            number_op = smeared_creation(col, n) @ smeared_annihilation(col, n)
            rho = rho @ ((1 - p) * (np.eye(dim) - number_op) + p * number_op)
    return hermitize(rho)


def read_correlations(rho: np.ndarray) -> np.ndarray:
    """Correlation matrix of a density matrix: R_jk = Tr[c_k† c_j rho]."""
    rho = as_square(rho, "density matrix")
    n = int(round(np.log2(rho.shape[0])))
    ops = _car(_check_modes(n))
    r = np.empty((n, n), dtype=complex)
    for j in range(n):
        for k in range(n):
            r[j, k] = np.trace(ops[k].conj().T @ ops[j] @ rho)
    return r


def trace_distance(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Half the trace norm of rho - sigma."""
    diff = hermitize(np.asarray(rho) - np.asarray(sigma))
    return float(0.5 * np.sum(np.abs(np.linalg.eigvalsh(diff))))


# -- Majorana form of the generator family ---------------------------------

def majorana_operators(n: int) -> list[np.ndarray]:
    """Hermitian Majorana operators w_1..w_2n with {w_j, w_k} = 2 delta_jk.

    w_{2m-1} = c_m + c_m†,  w_{2m} = i(c_m - c_m†).
    """
    ops = _car(_check_modes(n))
    out = []
    for c in ops:
        cd = c.conj().T
        out.append(c + cd)
        out.append(1j * (c - cd))
    return out


def majorana_liouvillian(a, n_mat, n: int) -> np.ndarray:
    """Dense generator of the general (not gauge-invariant) quadratic family.

    For a real 2n x 2n matrix A and real antisymmetric N,

        L(A, N) rho = (1/4) sum_jk ( (A - A^T)_jk / 2 [w_j w_k, rho]
                                     + i N_jk {w_j w_k, rho}
                                     + (-A - A^T + 2iN)_jk w_j rho w_k ).
    """
    a = np.asarray(a, dtype=float)
    n_mat = np.asarray(n_mat, dtype=float)
    n = _check_modes(n)
    two_n = 2 * n
    if a.shape != (two_n, two_n) or n_mat.shape != (two_n, two_n):
        raise ValidationError(
            f"Majorana coefficient matrices must be {two_n} x {two_n}"
        )
    if np.linalg.norm(n_mat + n_mat.T) > 1e-12 * max(1.0, np.linalg.norm(n_mat)):
        raise ValidationError("noise coefficient matrix must be antisymmetric")
    w = majorana_operators(n)
    dim = 2 ** n
    coeff_left = (a - a.T) / 8 + 1j * n_mat / 4
    coeff_right = -(a - a.T) / 8 + 1j * n_mat / 4
    coeff_mid = (-a - a.T + 2j * n_mat) / 4
    g_left = np.zeros((dim, dim), dtype=complex)
    g_right = np.zeros((dim, dim), dtype=complex)
    for j in range(two_n):
        for k in range(two_n):
            prod = w[j] @ w[k]
            g_left += coeff_left[j, k] * prod
            g_right += coeff_right[j, k] * prod
    out = super_left(g_left) + super_right(g_right)
    for k in range(two_n):
        envelope = np.zeros((dim, dim), dtype=complex)
        for j in range(two_n):
            envelope += coeff_mid[j, k] * w[j]
        out += np.kron(w[k].T, envelope)
    return out


def majorana_commutator_residual(a, n_mat, b, r_mat, n: int) -> float:
    """Residual of the Majorana-family commutation relation.

    Checks ``[L(A, N), L(B, R)] = L([A, B], A R + R A^T - B N - N B^T)``
    as dense matrices.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    n_mat = np.asarray(n_mat, dtype=float)
    r_mat = np.asarray(r_mat, dtype=float)
    l1 = majorana_liouvillian(a, n_mat, n)
    l2 = majorana_liouvillian(b, r_mat, n)
    target = majorana_liouvillian(
        a @ b - b @ a,
        a @ r_mat + r_mat @ a.T - b @ n_mat - n_mat @ b.T,
        n,
    )
    return float(np.linalg.norm(l1 @ l2 - l2 @ l1 - target))
