import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from igrand import CovariateMatrix, RngSpec


@pytest.fixture
def rng_spec():
    return RngSpec(seed=2024, stream=0)


@pytest.fixture
def small_covariates():
    """8 units, 3 observed covariates, binary salient column, one latent."""
    gen = np.random.default_rng(7)
    values = np.column_stack(
        [
            gen.normal(size=8),
            gen.normal(size=8),
            np.array([1, 0, 1, 0, 1, 0, 1, 0], dtype=float),
            gen.normal(size=8),
        ]
    )
    return CovariateMatrix(
        names=["a", "b", "attr", "hidden"],
        values=values,
        latent=np.array([False, False, False, True]),
        salient="attr",
    )
