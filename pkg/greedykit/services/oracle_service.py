"""
Oracle Service - exact optimum by exhaustive enumeration

Enumerates every k-subset in lexicographic order of ascending index tuples.
Only practical for small instances; the enumeration size is capped.
"""

import itertools
import logging
import math
from typing import List, Optional

from pydantic import BaseModel

from greedykit.core.config import settings
from greedykit.core.exceptions import CapabilityError
from greedykit.core.sets import SetFunction, Subset, wrap_counting
from greedykit.core.validators import validate_cardinality

logger = logging.getLogger(__name__)


class OracleResult(BaseModel):
    """Best k-subset and the cost of finding it"""

    k: int
    n: int
    best_set: List[int]
    best_value: float
    sets_evaluated: int

    def subset(self) -> Subset:
        return Subset.from_indices(self.n, self.best_set)


def oracle_size(n: int, k: int) -> int:
    """Number of subsets the oracle has to evaluate, C(n, k)"""
    return math.comb(n, k)


def brute_force_opt(f: SetFunction, k: int, cap: Optional[int] = None) -> OracleResult:
    """
    Maximize f over all subsets of size k

    Args:
        f: Set function
        k: Subset size, 1 <= k <= n
        cap: Largest enumeration allowed (default: settings.ORACLE_CAP)

    Returns:
        OracleResult; ties go to the lexicographically smallest index tuple

    Raises:
        DomainError: If k is out of range
        CapabilityError: If C(n, k) exceeds the cap
    """
    n = f.n
    validate_cardinality(k, n)
    cap = settings.ORACLE_CAP if cap is None else cap
    total = oracle_size(n, k)
    if total > cap:
        logger.warning(f"Oracle refused: C({n},{k}) = {total} > cap {cap}")
        raise CapabilityError(
            f"oracle would evaluate C({n},{k}) = {total} subsets, above the cap of {cap}"
        )

    counter = wrap_counting(f)
    best_tuple = None
    best_value = -math.inf
    for combo in itertools.combinations(range(n), k):
        mask = 0
        for element in combo:
            mask |= 1 << element
        value = counter.evaluate(Subset(n, mask))
        if value > best_value:
            best_value = value
            best_tuple = combo

    logger.info(f"Oracle: n={n} k={k} best={list(best_tuple)} value={best_value} ({counter.count} sets)")

    return OracleResult(
        k=k,
        n=n,
        best_set=list(best_tuple),
        best_value=best_value,
        sets_evaluated=counter.count,
    )
