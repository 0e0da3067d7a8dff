"""
Tests for the brute-force oracle
"""

import itertools

import pytest

from greedykit.core.exceptions import CapabilityError, DomainError
from greedykit.functions import ModularFunction, ModularWeights
from greedykit.services.oracle_service import brute_force_opt, oracle_size
from tests.conftest import random_facility


def test_oracle_on_worked_instance(worked_facility):
    result = brute_force_opt(worked_facility, 2)

    assert result.best_set == [0, 2]
    assert result.best_value == 9.0
    assert result.sets_evaluated == 3
    assert result.subset().indices() == [0, 2]


def test_oracle_breaks_ties_lexicographically(modular_123):
    flat = ModularFunction(ModularWeights([1, 1, 1, 1]))
    assert brute_force_opt(flat, 2).best_set == [0, 1]
    assert brute_force_opt(modular_123, 2).best_set == [1, 2]


def test_oracle_matches_enumeration(rng):
    f = random_facility(rng, 5, 7)
    result = brute_force_opt(f, 3)

    best = max(f.evaluate(f.subset(c)) for c in itertools.combinations(range(7), 3))
    assert result.best_value == best
    assert result.sets_evaluated == oracle_size(7, 3) == 35


@pytest.mark.parametrize("k", [0, 4])
def test_oracle_rejects_cardinality(worked_facility, k):
    with pytest.raises(DomainError):
        brute_force_opt(worked_facility, k)


def test_oracle_cap(worked_facility):
    with pytest.raises(CapabilityError, match=r"C\(3,2\) = 3 subsets, above the cap of 2"):
        brute_force_opt(worked_facility, 2, cap=2)


def test_oracle_cap_defaults_to_settings(worked_facility, restore_settings):
    restore_settings.ORACLE_CAP = 1

    with pytest.raises(CapabilityError):
        brute_force_opt(worked_facility, 2)


def test_oracle_single_candidate(worked_facility):
    result = brute_force_opt(worked_facility, 3)

    assert result.best_set == [0, 1, 2]
    assert result.best_value == 9.0
    assert result.sets_evaluated == 1


def test_oracle_dominates_random_subsets(rng):
    f = random_facility(rng, 6, 9)
    optimum = brute_force_opt(f, 4).best_value

    for _ in range(1000):
        s = f.subset(rng.choice(9, size=4, replace=False))
        assert optimum >= f.evaluate(s)
