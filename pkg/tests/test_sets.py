"""
Tests for subsets, the evaluation contract and the counting wrapper
"""

import pytest

from greedykit.core.exceptions import DomainError
from greedykit.core.sets import (
    CountingFunction,
    GroundSet,
    Subset,
    evaluate,
    marginal_gain,
    wrap_counting,
)
from tests.conftest import subset


def test_subset_iterates_ascending():
    s = Subset.from_indices(70, [65, 3, 0, 3, 64])

    assert list(s) == [0, 3, 64, 65]
    assert len(s) == 4
    assert 64 in s and 1 not in s and -1 not in s


def test_subset_algebra():
    a = subset(5, 0, 1, 2)
    b = subset(5, 2, 3)

    assert (a | b).indices() == [0, 1, 2, 3]
    assert (a & b).indices() == [2]
    assert (a - b).indices() == [0, 1]
    assert a.complement().indices() == [3, 4]
    assert (a & b) <= a
    assert not a <= b
    assert Subset.full(3) == subset(3, 0, 1, 2)
    assert not Subset.empty(3)


def test_subset_rejects_out_of_range_index():
    with pytest.raises(DomainError, match="element index 7 out of range for ground set of size 3"):
        Subset.from_indices(3, [0, 7])

    with pytest.raises(DomainError):
        subset(3, 1).add(3)


def test_ground_set_labels():
    assert GroundSet(size=3).label(2) == "2"
    assert GroundSet(size=2, labels=("a", "b")).label(1) == "b"

    with pytest.raises(ValueError):
        GroundSet(size=2, labels=("a",))
    with pytest.raises(ValueError):
        GroundSet(size=2, labels=("a", "a"))


# Test cases: (indices, expected f)
WORKED_VALUES = [
    ((), 0.0),
    ((1,), 3.0),
    ((2,), 6.0),
    ((0, 2), 9.0),
    ((0, 1, 2), 9.0),
]


@pytest.mark.parametrize("indices,expected", WORKED_VALUES)
def test_evaluate_worked_instance(worked_facility, indices, expected):
    assert evaluate(worked_facility, worked_facility.subset(indices)) == expected


def test_evaluate_rejects_subset_of_larger_ground_set(worked_facility):
    with pytest.raises(DomainError, match="out of range"):
        worked_facility.evaluate(subset(5, 4))


def test_marginal_gain(worked_facility):
    f = worked_facility

    assert marginal_gain(f, f.subset([2]), 0) == 3.0
    assert marginal_gain(f, f.subset(), 1) == 3.0
    assert marginal_gain(f, f.subset([2]), 0, base=6.0) == 3.0


def test_marginal_gain_of_member_is_zero_without_evaluating(worked_facility):
    counter = wrap_counting(worked_facility)

    assert marginal_gain(counter, counter.subset([0, 2]), 2) == 0.0
    assert counter.count == 0


def test_marginal_gain_rejects_out_of_range_element(worked_facility):
    with pytest.raises(DomainError):
        marginal_gain(worked_facility, worked_facility.subset(), 3)


def test_counting_wrapper_counts_every_call(worked_facility):
    counter = wrap_counting(worked_facility)
    a = counter.subset([0])

    assert isinstance(counter, CountingFunction)
    assert counter.evaluate(a) == counter.evaluate(a) == worked_facility.evaluate(a)
    assert counter.count == 2

    counter.reset()
    assert counter.count == 0


def test_counting_wrapper_does_not_count_empty_set(worked_facility):
    counter = wrap_counting(worked_facility)

    assert counter(counter.subset()) == 0.0
    assert counter.count == 0
