"""
Facility function

f(A) = sum_i max_{j in A} M_ij for a non-negative m x n matrix M, and f(empty) = 0.
Rows are customers, columns candidate locations.
"""

import math
from typing import Optional, Sequence

import numpy as np

from greedykit.core.exceptions import DomainError
from greedykit.core.sets import GroundSet, SetFunction, Subset
from greedykit.core.validators import first_negative_entry, validate_finite


class FacilityMatrix:
    """Non-negative m x n value matrix"""

    def __init__(self, values):
        values = np.array(values, dtype=np.float64)
        if values.ndim != 2:
            raise DomainError(f"Facility matrix must be 2-dimensional, got {values.ndim} dimension(s)")
        m, n = values.shape
        if m < 1 or n < 1:
            raise DomainError(f"Facility matrix must be at least 1x1, got {m}x{n}")
        validate_finite(values, "Facility matrix")
        negative = first_negative_entry(values)
        if negative is not None:
            row, col = negative
            raise DomainError(f"negative entry {values[row, col]} at (row {row + 1}, col {col + 1})")
        values.setflags(write=False)
        self.values = values

    @property
    def m(self) -> int:
        return self.values.shape[0]

    @property
    def n(self) -> int:
        return self.values.shape[1]

    def __repr__(self) -> str:
        return f"FacilityMatrix({self.m}x{self.n})"


def facility_eval(matrix: FacilityMatrix, subset: Subset) -> float:
    """
    Sum over customers of the best value among open facilities

    The row maxima are recomputed on every call and added with math.fsum,
    which rounds exactly once, so the value does not depend on row order.

    Raises:
        DomainError: If the subset holds a column index outside the matrix
    """
    if subset.mask >> matrix.n:
        raise DomainError(
            f"element index {subset.mask.bit_length() - 1} out of range "
            f"for ground set of size {matrix.n}"
        )
    if not subset:
        return 0.0
    columns = subset.indices()
    return math.fsum(matrix.values[:, columns].max(axis=1))


class FacilityFunction(SetFunction):
    """Set-function view of a facility matrix"""

    def __init__(self, matrix: FacilityMatrix, labels: Optional[Sequence[str]] = None):
        super().__init__(GroundSet(size=matrix.n, labels=tuple(labels) if labels else None))
        self.matrix = matrix

    def _evaluate(self, subset: Subset) -> float:
        return facility_eval(self.matrix, subset)

    def __repr__(self) -> str:
        return f"FacilityFunction({self.matrix.m}x{self.matrix.n})"
