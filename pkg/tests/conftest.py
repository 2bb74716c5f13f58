from __future__ import annotations

import numpy as np
import pytest

from abscompat import AlgebraElement, AlgebraShape
from abscompat.sampling import compatible_positive_pair_2x2, crossed_isometry_pair_2x2


@pytest.fixture
def shape2() -> AlgebraShape:
    return AlgebraShape((2,))


@pytest.fixture
def positive_pair() -> tuple[AlgebraElement, AlgebraElement]:
    a, b = compatible_positive_pair_2x2()
    return AlgebraElement.single(a), AlgebraElement.single(b)


@pytest.fixture
def isometry_pair() -> tuple[AlgebraElement, AlgebraElement]:
    e, v = crossed_isometry_pair_2x2()
    return AlgebraElement.single(e), AlgebraElement.single(v)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
