"""
Explicitly specified set functions

TabulatedFunction stores one value per subset, indexed by bitmask, and is how
crafted (possibly non-submodular) instances are written to disk.
CallableFunction adapts a plain Python callable.
"""

from typing import Callable, Optional, Sequence

import numpy as np

from greedykit.core.exceptions import DomainError
from greedykit.core.sets import GroundSet, SetFunction, Subset
from greedykit.core.validators import validate_finite


class TabulatedFunction(SetFunction):
    """Set function given by its full value table over 2^n subsets"""

    def __init__(self, values, labels: Optional[Sequence[str]] = None):
        values = np.array(values, dtype=np.float64)
        if values.ndim != 1 or values.size < 2:
            raise DomainError("Value table must list at least 2 values")
        n = values.size.bit_length() - 1
        if values.size != 1 << n:
            raise DomainError(f"Value table length must be a power of two, got {values.size}")
        validate_finite(values, "Value table")
        if values[0] != 0.0:
            raise DomainError(f"Value table must start with f(empty) = 0, got {values[0]}")
        super().__init__(GroundSet(size=n, labels=tuple(labels) if labels else None))
        values.setflags(write=False)
        self.values = values

    def _evaluate(self, subset: Subset) -> float:
        return float(self.values[subset.mask])

    @classmethod
    def from_function(cls, f: SetFunction) -> "TabulatedFunction":
        """Tabulate another set function (2^n evaluations)"""
        values = [f.evaluate(Subset(f.n, mask)) for mask in range(1 << f.n)]
        return cls(values, labels=f.ground_set.labels)

    def __repr__(self) -> str:
        return f"TabulatedFunction(n={self.n})"


class CallableFunction(SetFunction):
    """
    Wraps fn(subset) -> float

    Example:
        square = CallableFunction(3, lambda s: float(len(s)) ** 2, name="|A|^2")
    """

    def __init__(self, n: int, fn: Callable[[Subset], float], name: str = "callable"):
        super().__init__(GroundSet(size=n))
        self.fn = fn
        self.name = name

    def _evaluate(self, subset: Subset) -> float:
        return float(self.fn(subset))

    def __repr__(self) -> str:
        return f"CallableFunction({self.name}, n={self.n})"
