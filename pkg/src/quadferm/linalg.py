"""Dense complex linear-algebra kernels.

Everything downstream (affine flows, correlation-matrix dynamics, the
dissipative skin-effect construction) reduces to four operations on square
complex matrices: the matrix exponential, the finite-time noise integral
``int_0^t e^{sA} M e^{sA'} ds``, the continuous Lyapunov solve
``A T + T A' = -M``, and the spectral split of a dissipative drift into its
imaginary-axis and strictly damped parts.  All solvers here are dense and
direct; the library targets small-to-moderate mode numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import PhysicsError, ValidationError

__all__ = [
    "SpectralSplit",
    "as_square",
    "hermitize",
    "is_hermitian",
    "mat_exp",
    "van_loan_integral",
    "lyapunov_solve",
    "spectral_split",
]


def as_square(a, name: str = "matrix") -> np.ndarray:
    """Validate and return ``a`` as a square complex ndarray.

    Raises ValidationError for non-square shapes or non-finite entries.
    """
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValidationError(f"{name} must be square, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValidationError(f"{name} contains non-finite entries")
    return arr


def hermitize(a: np.ndarray) -> np.ndarray:
    """Return the Hermitian part (a + a†)/2."""
    return (a + a.conj().T) / 2


def is_hermitian(a: np.ndarray, tol: float = 1e-12) -> bool:
    return bool(np.linalg.norm(a - a.conj().T) <= tol * max(1.0, np.linalg.norm(a)))


def mat_exp(a) -> np.ndarray:
    """Matrix exponential e^a of a square complex matrix.

    Scaling-and-squaring with a Pade approximant (scipy.linalg.expm), which
    stays accurate for the highly non-normal drifts produced by asymmetric
    hopping models.
    """
    arr = as_square(a, "mat_exp argument")
    return scipy.linalg.expm(arr)


#: Per-chunk growth exponent cap for the block-exponential integral.
_VAN_LOAN_THETA = 8.0


def van_loan_integral(a, m, t: float) -> np.ndarray:
    """Finite-time noise integral ``int_0^t e^{sA} M e^{sA†} ds``.

    Computed from the exponential of the 2n x 2n block matrix
    ``[[A, M], [0, -A†]]``: with W = expm(s * block), the top-left block is
    e^{sA} and the top-right block times e^{sA†} gives the integral over
    [0, s].  The -A† block grows like e^{s |Re lambda|}, which destroys the
    extraction once ``s * max|Re lambda|`` passes a few dozen, so long
    horizons are split into chunks of bounded growth and accumulated through
    the cocycle identity ``G(t+s) = G(s) + e^{sA} G(t) e^{sA†}`` (one block
    exponential total).  The result is Hermitian whenever ``m`` is.
    """
    a = as_square(a, "drift")
    m = as_square(m, "noise")
    if a.shape != m.shape:
        raise ValidationError(
            f"drift and noise sizes differ: {a.shape} vs {m.shape}"
        )
    t = float(t)
    if t < 0:
        raise ValidationError(f"integration time must be nonnegative, got {t}")
    n = a.shape[0]
    if t == 0.0:
        return np.zeros((n, n), dtype=complex)
    abscissa = float(np.max(np.abs(np.linalg.eigvals(a).real))) if n else 0.0
    chunks = max(1, int(np.ceil(t * abscissa / _VAN_LOAN_THETA)))
    step = t / chunks
    block = np.zeros((2 * n, 2 * n), dtype=complex)
    block[:n, :n] = a
    block[:n, n:] = m
    block[n:, n:] = -a.conj().T
    w = scipy.linalg.expm(step * block)
    prop_step = w[:n, :n]
    g_step = w[:n, n:] @ prop_step.conj().T
    out = np.zeros((n, n), dtype=complex)
    prop = np.eye(n, dtype=complex)
    for _ in range(chunks):
        out = out + prop @ g_step @ prop.conj().T
        prop = prop_step @ prop
    if is_hermitian(m):
        out = hermitize(out)
    return out


def lyapunov_solve(a, m, res_tol: float = 1e-10) -> np.ndarray:
    """Solve the continuous Lyapunov equation ``A T + T A† = -M``.

    For a stable drift the solution is the improper noise integral
    ``int_0^inf e^{sA} M e^{sA†} ds``.  Solved by vectorization: with
    column-stacked vec, ``(I ⊗ A + conj(A) ⊗ I) vec(T) = -vec(M)``.  The
    n² x n² dense solve is exact up to conditioning and perfectly adequate
    at the mode numbers this library targets.

    Raises PhysicsError if some eigenvalue pair has ``λ_i + conj(λ_j) ≈ 0``
    (the equation is then singular or near-singular), naming the pair, or
    if the final residual exceeds ``res_tol * (1 + ||M||)``.
    """
    a = as_square(a, "drift")
    m = as_square(m, "right-hand side")
    if a.shape != m.shape:
        raise ValidationError(f"size mismatch: {a.shape} vs {m.shape}")
    n = a.shape[0]
    eigs = np.linalg.eigvals(a)
    scale = max(1.0, float(np.max(np.abs(eigs))))
    sums = eigs[:, None] + eigs[None, :].conj()
    i, j = np.unravel_index(np.argmin(np.abs(sums)), sums.shape)
    if abs(sums[i, j]) <= 1e-12 * scale:
        raise PhysicsError(
            "Lyapunov equation is near-singular: eigenvalue pair "
            f"lambda_{i} = {eigs[i]:.6g}, lambda_{j} = {eigs[j]:.6g} has "
            f"lambda_i + conj(lambda_j) = {sums[i, j]:.3e}"
        )
    eye = np.eye(n)
    coeff = np.kron(eye, a) + np.kron(a.conj(), eye)
    sol = np.linalg.solve(coeff, -m.reshape(-1, order="F"))
    t_mat = sol.reshape((n, n), order="F")
    residual = np.linalg.norm(a @ t_mat + t_mat @ a.conj().T + m)
    if residual > res_tol * (1.0 + np.linalg.norm(m)):
        raise PhysicsError(
            f"Lyapunov residual {residual:.3e} exceeds tolerance; "
            "the equation is too ill-conditioned for a direct solve"
        )
    if is_hermitian(m):
        t_mat = hermitize(t_mat)
    return t_mat


@dataclass(frozen=True)
class SpectralSplit:
    """Split of a dissipative drift A into persistent and damped parts.

    ``p0`` projects orthogonally onto the direct sum of eigenspaces whose
    eigenvalues sit on the imaginary axis; ``a0 = A P0`` carries the
    persistent oscillation and ``a_minus = A - a0`` the strict decay, with
    ``e^{t a_minus} -> p0`` as t grows.  ``ambiguous`` flags eigenvalues
    whose real part falls inside the unclassifiable band
    ``(re_tol, 2 re_tol]``.
    """

    p0: np.ndarray
    a0: np.ndarray
    a_minus: np.ndarray
    imaginary_eigenvalues: np.ndarray
    ambiguous: bool = False


def spectral_split(a, re_tol: float | None = None,
                   diss_tol: float = 1e-10) -> SpectralSplit:
    """Split a drift with ``-A - A† >= 0`` along the imaginary axis.

    Dissipativity forces every eigenvalue into the closed left half-plane,
    makes imaginary-axis eigenvalues semisimple, and makes their eigenspaces
    orthogonal to all other generalized eigenspaces; the split
    ``A = A P0 + (A - A P0)`` is therefore an orthogonal block decomposition.

    ``re_tol`` is the classification band around the axis; exact-arithmetic
    statements need none, floating point does.  Default ``1e-9 * ||A||_2``.
    """
    a = as_square(a, "drift")
    n = a.shape[0]
    scale = float(np.linalg.norm(a, 2)) if n else 0.0
    gap = float(np.min(np.linalg.eigvalsh(-(a + a.conj().T)))) if n else 0.0
    if gap < -diss_tol * max(1.0, scale):
        raise PhysicsError(
            f"drift is not dissipative: min eig(-A - A†) = {gap:.3e}"
        )
    if re_tol is None:
        re_tol = 1e-9 * scale
    eigvals, eigvecs = np.linalg.eig(a)
    on_axis = np.abs(eigvals.real) <= re_tol
    ambiguous = bool(
        np.any((np.abs(eigvals.real) > re_tol)
               & (np.abs(eigvals.real) <= 2 * re_tol))
    )
    if np.any(on_axis):
        q, r = np.linalg.qr(eigvecs[:, on_axis])
        if np.min(np.abs(np.diag(r))) < 1e-8:
            raise PhysicsError(
                "imaginary-axis eigenvectors are numerically dependent; "
                "cannot build the persistent projector"
            )
        p0 = hermitize(q @ q.conj().T)
    else:
        p0 = np.zeros((n, n), dtype=complex)
    comm = np.linalg.norm(a @ p0 - p0 @ a)
    if comm > 1e-6 * max(1.0, scale):
        raise PhysicsError(
            f"persistent projector fails to commute with the drift "
            f"(residual {comm:.3e}); spectrum too close to the band edge"
        )
    a0 = a @ p0
    lam = eigvals[on_axis]
    order = np.argsort(lam.imag)
    return SpectralSplit(
        p0=p0,
        a0=a0,
        a_minus=a - a0,
        imaginary_eigenvalues=1j * lam.imag[order],
        ambiguous=ambiguous,
    )
