"""
Common validation functions
"""

import math
from typing import Optional, Tuple

import numpy as np

from greedykit.core.exceptions import DomainError


def validate_cardinality(k: int, n: int) -> int:
    """
    Validate a cardinality constraint against a ground set

    Args:
        k: Requested subset size
        n: Ground set size

    Returns:
        k, unchanged

    Raises:
        DomainError: If k is not in 1..n
    """
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    if k > n:
        raise DomainError(f"k exceeds ground set size ({k} > {n})")
    return k


def validate_epsilon(epsilon: float) -> float:
    """
    Validate the accuracy parameter of stochastic greedy

    Raises:
        DomainError: If epsilon is not strictly between 0 and 1
    """
    if not math.isfinite(epsilon) or not 0.0 < epsilon < 1.0:
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon}")
    return epsilon


def validate_sample_size(sample_size: int) -> int:
    if sample_size < 1:
        raise DomainError(f"sample size must be at least 1, got {sample_size}")
    return sample_size


def first_negative_entry(values: np.ndarray) -> Optional[Tuple[int, ...]]:
    """
    Locate the first negative entry of an array in row-major order

    Args:
        values: Array of reals

    Returns:
        Index tuple of the first negative entry, or None if there is none
    """
    negative = np.argwhere(values < 0)
    if negative.size == 0:
        return None
    return tuple(int(i) for i in negative[0])


def validate_finite(values: np.ndarray, what: str) -> np.ndarray:
    """
    Reject NaN and infinite entries

    Raises:
        DomainError: Naming the first offending position
    """
    bad = np.argwhere(~np.isfinite(values))
    if bad.size:
        position = tuple(int(i) for i in bad[0])
        raise DomainError(f"{what} has a non-finite entry at {position}")
    return values
