"""
Tests for the facility, modular and tabulated set functions
"""

import numpy as np
import pytest

from greedykit.core.exceptions import DomainError
from greedykit.core.sets import Subset
from greedykit.functions import (
    CallableFunction,
    FacilityFunction,
    FacilityMatrix,
    ModularFunction,
    ModularWeights,
    TabulatedFunction,
    facility_eval,
    modular_eval,
)
from tests.conftest import WORKED_MATRIX, random_facility


def test_facility_matrix_shape():
    matrix = FacilityMatrix(WORKED_MATRIX)

    assert (matrix.m, matrix.n) == (3, 3)
    assert matrix.values.dtype == np.float64
    assert not matrix.values.flags.writeable


# Test cases: (values, message fragment)
INVALID_MATRICES = [
    ([[1.0, -2.0], [0.0, 1.0]], r"negative entry -2.0 at \(row 1, col 2\)"),
    ([[0.0, 1.0], [0.0, -0.5]], r"negative entry -0.5 at \(row 2, col 2\)"),
    ([1.0, 2.0], "2-dimensional"),
    (np.zeros((0, 3)), "at least 1x1"),
    ([[1.0, float("nan")]], "non-finite"),
]


@pytest.mark.parametrize("values,message", INVALID_MATRICES)
def test_facility_matrix_rejects(values, message):
    with pytest.raises(DomainError, match=message):
        FacilityMatrix(values)


def test_facility_eval_matches_definition(rng):
    f = random_facility(rng, 6, 5)
    values = f.matrix.values
    for mask in range(1, 1 << 5):
        columns = [j for j in range(5) if mask >> j & 1]
        expected = sum(max(values[i, j] for j in columns) for i in range(6))
        assert facility_eval(f.matrix, Subset(5, mask)) == pytest.approx(expected, rel=1e-12)


def test_facility_eval_invariant_under_row_permutation(rng):
    values = rng.random((7, 4)) * 1e6
    original = FacilityMatrix(values)
    shuffled = FacilityMatrix(values[rng.permutation(7)])
    for mask in range(1 << 4):
        s = Subset(4, mask)
        assert facility_eval(original, s) == facility_eval(shuffled, s)


def test_facility_function_labels():
    f = FacilityFunction(FacilityMatrix(WORKED_MATRIX), labels=["a", "b", "c"])

    assert f.n == 3
    assert f.ground_set.label(2) == "c"


def test_modular_function(modular_123):
    assert modular_123.evaluate(modular_123.subset([0, 2])) == 4.0
    assert modular_eval(modular_123.weights, Subset.full(3)) == 6.0


def test_modular_weights_reject_negative():
    with pytest.raises(DomainError, match="negative weight -1.0 at element 1"):
        ModularWeights([1.0, -1.0])


def test_tabulated_function_indexes_by_mask():
    f = TabulatedFunction([0, 1, 1, 4, 1, 4, 4, 9])

    assert f.n == 3
    assert f.evaluate(Subset(3, 0b101)) == 4.0
    assert f.evaluate(Subset.full(3)) == 9.0


# Test cases: (values, message fragment)
INVALID_TABLES = [
    ([0.0, 1.0, 2.0], "power of two"),
    ([1.0, 2.0], "f\\(empty\\) = 0"),
    ([0.0], "at least 2"),
]


@pytest.mark.parametrize("values,message", INVALID_TABLES)
def test_tabulated_function_rejects(values, message):
    with pytest.raises(DomainError, match=message):
        TabulatedFunction(values)


def test_tabulate_reproduces_function(worked_facility):
    table = TabulatedFunction.from_function(worked_facility)
    for mask in range(8):
        s = Subset(3, mask)
        assert table.evaluate(s) == worked_facility.evaluate(s)


def test_callable_function_receives_subset(square_n3):
    assert square_n3.evaluate(square_n3.subset([0, 2])) == 4.0
    seen = []
    f = CallableFunction(2, lambda s: seen.append(s.indices()) or 1.0)

    f.evaluate(f.subset([1]))
    assert seen == [[1]]


# Test cases: (element index past the last column)
OUT_OF_RANGE_COLUMNS = [3, 4, 10]


@pytest.mark.parametrize("index", OUT_OF_RANGE_COLUMNS)
def test_facility_eval_rejects_column_past_matrix(index):
    matrix = FacilityMatrix(WORKED_MATRIX)

    with pytest.raises(DomainError, match=f"element index {index} out of range for ground set of size 3"):
        facility_eval(matrix, Subset(index + 1, 1 | 1 << index))
