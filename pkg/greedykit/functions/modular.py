"""
Modular fixture: f(A) = sum of w_j over j in A
"""

import math
from typing import Optional, Sequence

import numpy as np

from greedykit.core.exceptions import DomainError
from greedykit.core.sets import GroundSet, SetFunction, Subset
from greedykit.core.validators import first_negative_entry, validate_finite


class ModularWeights:
    """Non-negative finite weight per element"""

    def __init__(self, weights):
        weights = np.array(weights, dtype=np.float64)
        if weights.ndim != 1 or weights.size < 1:
            raise DomainError("Modular weights must be a non-empty list of reals")
        validate_finite(weights, "Modular weights")
        negative = first_negative_entry(weights)
        if negative is not None:
            raise DomainError(f"negative weight {weights[negative]} at element {negative[0]}")
        weights.setflags(write=False)
        self.values = weights

    @property
    def n(self) -> int:
        return self.values.size


def modular_eval(weights: ModularWeights, subset: Subset) -> float:
    return math.fsum(weights.values[j] for j in subset)


class ModularFunction(SetFunction):
    def __init__(self, weights: ModularWeights, labels: Optional[Sequence[str]] = None):
        super().__init__(GroundSet(size=weights.n, labels=tuple(labels) if labels else None))
        self.weights = weights

    def _evaluate(self, subset: Subset) -> float:
        return modular_eval(self.weights, subset)

    def __repr__(self) -> str:
        return f"ModularFunction(n={self.weights.n})"
