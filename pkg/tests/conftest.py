import numpy as np
import pytest

from quadferm.verify import random_complex_matrix


def stable_matrix(rng, n: int, margin: float = 0.3) -> np.ndarray:
    """Random matrix with every eigenvalue real part <= -margin."""
    a = random_complex_matrix(rng, n)
    shift = float(np.max(np.linalg.eigvals(a).real)) + margin
    return a - shift * np.eye(n)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
