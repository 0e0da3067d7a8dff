"""
Shared fixtures: the 3x3 worked facility instance, the modular fixture,
crafted non-submodular functions and random instance factories.
"""

import logging
from pathlib import Path

import numpy as np
import pytest

from greedykit.core.config import settings
from greedykit.core.sets import Subset
from greedykit.functions import (
    CallableFunction,
    FacilityFunction,
    FacilityMatrix,
    ModularFunction,
    ModularWeights,
    TabulatedFunction,
)

INSTANCES = Path(__file__).parent / "instances"
GOLDEN = Path(__file__).parent / "golden"

WORKED_MATRIX = [[3, 1, 0], [0, 2, 2], [1, 0, 4]]


def random_facility(rng: np.random.Generator, m: int, n: int) -> FacilityFunction:
    """Entries uniform in [0, 1]"""
    return FacilityFunction(FacilityMatrix(rng.random((m, n))))


def random_modular(rng: np.random.Generator, n: int) -> ModularFunction:
    return ModularFunction(ModularWeights(rng.random(n)))


def random_supermodular(rng: np.random.Generator, n: int) -> CallableFunction:
    """(sum of positive weights)^2 - strictly supermodular"""
    weights = rng.random(n) + 0.5
    return CallableFunction(n, lambda s: float(sum(weights[j] for j in s)) ** 2, name="square-of-sum")


def random_table(rng: np.random.Generator, n: int) -> TabulatedFunction:
    values = rng.random(1 << n)
    values[0] = 0.0
    return TabulatedFunction(values)


def subset(n, *indices) -> Subset:
    return Subset.from_indices(n, indices)


@pytest.fixture
def worked_facility() -> FacilityFunction:
    return FacilityFunction(FacilityMatrix(WORKED_MATRIX))


@pytest.fixture
def modular_123() -> ModularFunction:
    return ModularFunction(ModularWeights([1, 2, 3]))


@pytest.fixture
def square_n3() -> CallableFunction:
    """f(A) = |A|^2, supermodular"""
    return CallableFunction(3, lambda s: float(len(s)) ** 2, name="|A|^2")


@pytest.fixture
def parabola_n3() -> CallableFunction:
    """f(A) = |A| (2 - |A|), not monotone"""
    return CallableFunction(3, lambda s: float(len(s) * (2 - len(s))), name="|A|(2-|A|)")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def restore_settings():
    """Undo monkeypatching of the settings singleton"""
    saved = settings.model_dump()
    yield settings
    for key, value in saved.items():
        setattr(settings, key, value)


@pytest.fixture(autouse=True)
def reset_logging():
    """Drop stderr handlers installed by setup_logging during a test"""
    yield
    root = logging.getLogger()
    for handler in root.handlers[:]:
        if type(handler) is logging.StreamHandler:
            root.removeHandler(handler)
