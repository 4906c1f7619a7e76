"""quadferm: Markovian open quadratic fermion systems, exactly.

The efficient path works on n x n correlation matrices through an affine
calculus (:mod:`quadferm.linalg`, :mod:`quadferm.affine`,
:mod:`quadferm.gaussian`, :mod:`quadferm.skin`); the brute-force path checks
it on dense 2^n Fock spaces and 4^n superoperators (:mod:`quadferm.fock`,
:mod:`quadferm.opbasis`, :mod:`quadferm.verify`).
"""

from .affine import (AffineElement, AffineGenerator, act, bracket, compose,
                     conjugation_identity_check, flow, identity, inverse)
from .errors import PhysicsError, QuadfermError, ValidationError
from .gaussian import (AsymptoticDecomposition, GaussianState,
                       LiouvillianParams, PhysicalModel,
                       asymptotic_decomposition, entropy, evolve_state,
                       expectation_quadratic, params_from_model, steady_state)
from .linalg import (SpectralSplit, lyapunov_solve, mat_exp, spectral_split,
                     van_loan_integral)
from .skin import (HatanoNelsonParams, build_bath, build_matrices,
                   featureless_choice, liouvillian_params, steady_profile)
from .verify import run_suite

__all__ = [
    "AffineElement", "AffineGenerator", "act", "bracket", "compose",
    "conjugation_identity_check", "flow", "identity", "inverse",
    "PhysicsError", "QuadfermError", "ValidationError",
    "AsymptoticDecomposition", "GaussianState", "LiouvillianParams",
    "PhysicalModel", "asymptotic_decomposition", "entropy", "evolve_state",
    "expectation_quadratic", "params_from_model", "steady_state",
    "SpectralSplit", "lyapunov_solve", "mat_exp", "spectral_split",
    "van_loan_integral",
    "HatanoNelsonParams", "build_bath", "build_matrices",
    "featureless_choice", "liouvillian_params", "steady_profile",
    "run_suite",
]

__version__ = "0.1.0"
