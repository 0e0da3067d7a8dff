"""
Ground sets, subsets and the set-function evaluation contract

Elements are dense indices 0..n-1. Subsets are bitmasks held in a Python int,
which widens word by word past 64 elements, so membership is a shift and
iteration walks set bits in ascending order.
"""

from abc import ABC, abstractmethod
from typing import Iterable, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from greedykit.core.exceptions import DomainError


class GroundSet(BaseModel):
    """The finite universe V of n indexed elements"""

    model_config = ConfigDict(frozen=True)

    size: int
    labels: Optional[Tuple[str, ...]] = None

    @model_validator(mode="after")
    def validate_labels(self):
        if self.size < 1:
            raise ValueError(f"Ground set size must be at least 1, got {self.size}")
        if self.labels is not None:
            if len(self.labels) != self.size:
                raise ValueError(f"Expected {self.size} labels, got {len(self.labels)}")
            if len(set(self.labels)) != self.size:
                raise ValueError("Labels must be distinct")
        return self

    def label(self, element: int) -> str:
        """Display name of an element (its decimal index by default)"""
        if self.labels is None:
            return str(element)
        return self.labels[element]

    def __len__(self) -> int:
        return self.size


class Subset:
    """Immutable subset of {0..n-1} stored as a bitmask"""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if mask < 0:
            raise DomainError("Subset mask must be non-negative")
        if mask >> n:
            raise DomainError(
                f"element index {mask.bit_length() - 1} out of range for ground set of size {n}"
            )
        self.n = n
        self.mask = mask

    @classmethod
    def empty(cls, n: int) -> "Subset":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "Subset":
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "Subset":
        """
        Build a subset from element indices

        Args:
            n: Ground set size
            indices: Element indices; repeats collapse (set semantics)

        Raises:
            DomainError: Naming the first index outside [0, n)
        """
        mask = 0
        for index in indices:
            index = int(index)
            if not 0 <= index < n:
                raise DomainError(f"element index {index} out of range for ground set of size {n}")
            mask |= 1 << index
        return cls(n, mask)

    def __contains__(self, element: int) -> bool:
        return element >= 0 and bool(self.mask >> element & 1)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subset):
            return NotImplemented
        return self.mask == other.mask and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"Subset(n={self.n}, {{{', '.join(str(i) for i in self)}}})"

    def indices(self) -> List[int]:
        """Members in ascending order"""
        return list(self)

    def add(self, element: int) -> "Subset":
        if not 0 <= element < self.n:
            raise DomainError(f"element index {element} out of range for ground set of size {self.n}")
        return Subset(self.n, self.mask | 1 << element)

    def union(self, other: "Subset") -> "Subset":
        return Subset(max(self.n, other.n), self.mask | other.mask)

    def intersection(self, other: "Subset") -> "Subset":
        return Subset(max(self.n, other.n), self.mask & other.mask)

    def difference(self, other: "Subset") -> "Subset":
        return Subset(self.n, self.mask & ~other.mask)

    def issubset(self, other: "Subset") -> bool:
        return self.mask & ~other.mask == 0

    def complement(self) -> "Subset":
        return Subset(self.n, ~self.mask & ((1 << self.n) - 1))

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = issubset


class SetFunction(ABC):
    """
    Evaluation contract for f: P(V) -> R with f(empty) = 0

    Subclasses implement _evaluate for non-empty subsets only; the empty set
    is answered here without consulting them.
    """

    def __init__(self, ground_set: GroundSet):
        self._ground_set = ground_set

    @property
    def ground_set(self) -> GroundSet:
        return self._ground_set

    @property
    def n(self) -> int:
        return self._ground_set.size

    def evaluate(self, subset: Subset) -> float:
        """
        Evaluate f at a subset

        Raises:
            DomainError: If the subset holds an index outside the ground set
        """
        if subset.mask >> self.n:
            raise DomainError(
                f"element index {subset.mask.bit_length() - 1} out of range "
                f"for ground set of size {self.n}"
            )
        if not subset.mask:
            return 0.0
        return self._evaluate(subset)

    def __call__(self, subset: Subset) -> float:
        return self.evaluate(subset)

    def subset(self, indices: Iterable[int] = ()) -> Subset:
        """Subset of this function's ground set"""
        return Subset.from_indices(self.n, indices)

    @abstractmethod
    def _evaluate(self, subset: Subset) -> float:
        """Value of f at a non-empty, in-range subset"""


class CountingFunction(SetFunction):
    """
    Wraps a set function and tallies calls to its evaluator

    Not safe to share between threads; give each worker its own wrapper and
    add the counts afterwards.
    """

    def __init__(self, inner: SetFunction):
        super().__init__(inner.ground_set)
        self.inner = inner
        self.count = 0

    def _evaluate(self, subset: Subset) -> float:
        self.count += 1
        return self.inner._evaluate(subset)

    def reset(self):
        self.count = 0


def evaluate(f: SetFunction, subset: Subset) -> float:
    """f(A); the empty set evaluates to 0 without work"""
    return f.evaluate(subset)


def marginal_gain(
    f: SetFunction,
    subset: Subset,
    element: int,
    base: Optional[float] = None,
) -> float:
    """
    Discrete derivative f(A + v) - f(A)

    Args:
        f: Set function
        subset: Base set A
        element: Element v; membership in A is allowed
        base: Already-known f(A), reused instead of re-evaluating

    Returns:
        The marginal gain; exactly 0.0 when v is in A (nothing is evaluated)

    Raises:
        DomainError: If v is outside the ground set
    """
    if not 0 <= element < f.n:
        raise DomainError(f"element index {element} out of range for ground set of size {f.n}")
    if element in subset:
        return 0.0
    value = f.evaluate(Subset(max(subset.n, f.n), subset.mask | 1 << element))
    if base is None:
        base = f.evaluate(subset)
    return value - base


def wrap_counting(f: SetFunction) -> CountingFunction:
    """Counting wrapper starting at zero"""
    return CountingFunction(f)
