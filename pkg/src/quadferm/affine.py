"""The affine transformation group on square complex matrices.

Pairs (U, M) with U invertible act on n x n matrices by
``X -> U X U† + M``.  They form a semidirect product of the general linear
group with the additive matrix group, with composition
``(U, M) ∘ (V, N) = (UV, U N U† + M)``.  Its Lie algebra consists of pairs
(A, M) with bracket ``([A, B], A N + N A† - B M - M B†)``, and the
one-parameter semigroup generated by (A, M) is
``t -> (e^{tA}, int_0^t e^{sA} M e^{sA†} ds)``.

This calculus reproduces, at the n x n level, the commutator algebra of the
quadratic-fermion Liouvillians assembled in :mod:`quadferm.fock`; it is what
makes the correlation-matrix dynamics in :mod:`quadferm.gaussian` exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .linalg import as_square, lyapunov_solve, mat_exp, van_loan_integral

__all__ = [
    "AffineElement",
    "AffineGenerator",
    "identity",
    "act",
    "compose",
    "inverse",
    "bracket",
    "flow",
    "conjugation_identity_check",
]

#: Reject linear parts with condition number above this as non-invertible.
CONDITION_CAP = 1e12


@dataclass(frozen=True)
class AffineElement:
    """Group element (u, m): the map ``X -> u X u† + m``."""

    u: np.ndarray
    m: np.ndarray

    def __post_init__(self):
        u = as_square(self.u, "linear part")
        m = as_square(self.m, "translation part")
        if u.shape != m.shape:
            raise ValidationError(
                f"linear and translation parts differ in size: "
                f"{u.shape} vs {m.shape}"
            )
        if np.linalg.cond(u) > CONDITION_CAP:
            raise ValidationError(
                "linear part is singular or too ill-conditioned "
                f"(cond > {CONDITION_CAP:.0e})"
            )
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "m", m)

    @property
    def n(self) -> int:
        return self.u.shape[0]


@dataclass(frozen=True)
class AffineGenerator:
    """Lie-algebra element (a, m), the infinitesimal affine map."""

    a: np.ndarray
    m: np.ndarray

    def __post_init__(self):
        a = as_square(self.a, "drift part")
        m = as_square(self.m, "noise part")
        if a.shape != m.shape:
            raise ValidationError(
                f"drift and noise parts differ in size: {a.shape} vs {m.shape}"
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "m", m)

    @property
    def n(self) -> int:
        return self.a.shape[0]


def identity(n: int) -> AffineElement:
    """The identity element (I, O)."""
    return AffineElement(np.eye(n, dtype=complex), np.zeros((n, n), dtype=complex))


def act(g: AffineElement, x) -> np.ndarray:
    """Apply g = (u, m) to a matrix: ``u x u† + m``."""
    x = as_square(x, "argument")
    if x.shape != g.u.shape:
        raise ValidationError(f"size mismatch: {x.shape} vs {g.u.shape}")
    return g.u @ x @ g.u.conj().T + g.m


def compose(g: AffineElement, h: AffineElement) -> AffineElement:
    """Group law: ``g ∘ h = (u_g u_h, u_g m_h u_g† + m_g)``."""
    if g.u.shape != h.u.shape:
        raise ValidationError(f"size mismatch: {g.u.shape} vs {h.u.shape}")
    return AffineElement(g.u @ h.u, g.u @ h.m @ g.u.conj().T + g.m)


def inverse(g: AffineElement) -> AffineElement:
    """Group inverse ``(u⁻¹, -u⁻¹ m u⁻¹†)``."""
    u_inv = np.linalg.inv(g.u)
    return AffineElement(u_inv, -u_inv @ g.m @ u_inv.conj().T)


def bracket(p: AffineGenerator, q: AffineGenerator) -> AffineGenerator:
    """Lie bracket ``([A,B], A N + N A† - B M - M B†)``."""
    if p.a.shape != q.a.shape:
        raise ValidationError(f"size mismatch: {p.a.shape} vs {q.a.shape}")
    a, m = p.a, p.m
    b, n = q.a, q.m
    return AffineGenerator(
        a @ b - b @ a,
        a @ n + n @ a.conj().T - b @ m - m @ b.conj().T,
    )


def flow(p: AffineGenerator, t: float) -> AffineElement:
    """One-parameter semigroup ``(e^{tA}, int_0^t e^{sA} M e^{sA†} ds)``.

    Satisfies ``flow(p, t) ∘ flow(p, s) = flow(p, t + s)`` and
    ``flow(p, 0) = (I, O)``.
    """
    t = float(t)
    if t < 0:
        raise ValidationError(f"flow time must be nonnegative, got {t}")
    return AffineElement(mat_exp(t * p.a), van_loan_integral(p.a, p.m, t))


def conjugation_identity_check(a, m, t: float,
                               tol: float = 1e-10) -> tuple[bool, float]:
    """Check that translating by the Lyapunov solution kills the noise part.

    With T solving ``A T + T A† = -M``, the flow of (A, M) factors as
    ``(I, T) ∘ (e^{tA}, O) ∘ (I, -T)``.  Returns (holds within tol, residual),
    where the residual is the larger of the two component norms between the
    direct flow and the three-factor composition.
    """
    a = as_square(a, "drift")
    m = as_square(m, "noise")
    t_mat = lyapunov_solve(a, m)
    n = a.shape[0]
    zero = np.zeros((n, n), dtype=complex)
    direct = flow(AffineGenerator(a, m), t)
    shift = AffineElement(np.eye(n, dtype=complex), t_mat)
    linear = AffineElement(mat_exp(t * a), zero)
    three = compose(compose(shift, linear), inverse(shift))
    residual = max(
        float(np.linalg.norm(direct.u - three.u)),
        float(np.linalg.norm(direct.m - three.m)),
    )
    return residual <= tol, residual
