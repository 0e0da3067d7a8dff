"""
Checker Service - verification of monotonicity and submodularity

Each property can be checked exhaustively (every qualifying tuple of sets, on a
value table built once with 2^n evaluations) or on a seeded random sample.
Comparisons allow a violation tolerance of
VIOLATION_TOLERANCE * max(1, |values compared|).
"""

import logging
from typing import Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, model_validator

from greedykit.core.config import settings
from greedykit.core.exceptions import CapabilityError, DomainError
from greedykit.core.rng import make_generator, random_mask, random_submask
from greedykit.core.sets import SetFunction, Subset, marginal_gain, wrap_counting

logger = logging.getLogger(__name__)

MONOTONE = "monotone"
SUBMODULAR_DERIVATIVE = "submodular-derivative"
SUBMODULAR_INTERSECTION = "submodular-intersection"
PROPERTIES = (MONOTONE, SUBMODULAR_DERIVATIVE, SUBMODULAR_INTERSECTION)

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"
MODES = (EXHAUSTIVE, SAMPLED)


def _members(mask: int) -> List[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _submask_table(n: int) -> List[np.ndarray]:
    """
    Submasks of every mask over n bits, each in ascending order

    Entry b is built from entry b minus its highest bit, so the table holds
    3^n indices in total, one per (A, B) pair with A <= B.
    """
    table = [np.zeros(1, dtype=np.int64)]
    for mask in range(1, 1 << n):
        high = 1 << (mask.bit_length() - 1)
        rest = table[mask ^ high]
        table.append(np.concatenate((rest, rest | high)))
    return table


class Witness(BaseModel):
    """Counterexample to a property"""

    set_a: List[int]
    set_b: Optional[List[int]] = None
    element: Optional[int] = None
    values: Dict[str, float]
    violation: float


class PropertyReport(BaseModel):
    """Outcome of one property check"""

    property: str
    mode: str
    holds: bool
    witness: Optional[Witness] = None
    pairs_checked: int
    evaluations: int

    @model_validator(mode="after")
    def witness_matches_outcome(self):
        if self.holds and self.witness is not None:
            raise ValueError("A property that holds carries no witness")
        if not self.holds and self.witness is None:
            raise ValueError("A failed property must carry a witness")
        return self


class TelescopingReport(BaseModel):
    """Residual of f(A + H) - f(A) - sum of successive marginal gains"""

    residual: float
    terms: List[float]
    note: Optional[str] = None


class PropertyChecker:
    """Exhaustive and sampled checks of the definitional properties"""

    @classmethod
    def tolerance(cls, *values: float) -> float:
        return settings.VIOLATION_TOLERANCE * max(1.0, *(abs(v) for v in values))

    @classmethod
    def _value_table(cls, f: SetFunction) -> np.ndarray:
        return np.array([f.evaluate(Subset(f.n, mask)) for mask in range(1 << f.n)], dtype=np.float64)

    @classmethod
    def _require_exhaustive(cls, f: SetFunction, limit: int, what: str):
        if f.n > limit:
            raise CapabilityError(
                f"exhaustive {what} check supports n <= {limit} (got n = {f.n}); use sampled mode"
            )

    @classmethod
    def _report(cls, prop: str, mode: str, witness: Optional[Witness], pairs: int, counter) -> PropertyReport:
        report = PropertyReport(
            property=prop,
            mode=mode,
            holds=witness is None,
            witness=witness,
            pairs_checked=pairs,
            evaluations=counter.count,
        )
        if witness is None:
            logger.info(f"{prop} ({mode}): holds over {pairs} comparisons")
        else:
            logger.info(f"{prop} ({mode}): violated by {witness.violation:.6g}, witness {witness}")
        return report

    # Monotonicity: every discrete derivative is non-negative

    @classmethod
    def _monotone_witness(cls, a_mask: int, v: int, f_a: float, f_av: float) -> Witness:
        return Witness(
            set_a=_members(a_mask),
            element=v,
            values={"f(A)": f_a, "f(A+v)": f_av, "gain": f_av - f_a},
            violation=f_a - f_av,
        )

    @classmethod
    def check_monotone(
        cls,
        f: SetFunction,
        mode: str = EXHAUSTIVE,
        budget: Optional[int] = None,
        seed: int = 0,
    ) -> PropertyReport:
        """
        Check that f(A + v) >= f(A) for every A and v not in A

        A failed check carries the most-violating (A, v) found.
        """
        counter = wrap_counting(f)
        n = f.n
        best: Optional[Witness] = None

        if mode == EXHAUSTIVE:
            cls._require_exhaustive(f, settings.MONOTONE_EXHAUSTIVE_LIMIT, "monotonicity")
            values = cls._value_table(counter)
            masks = np.arange(1 << n, dtype=np.int64)
            pairs = 0
            for v in range(n):
                bit = 1 << v
                base = masks[(masks & bit) == 0]
                f_a = values[base]
                f_av = values[base | bit]
                gains = f_av - f_a
                tol = settings.VIOLATION_TOLERANCE * np.maximum(1.0, np.maximum(np.abs(f_a), np.abs(f_av)))
                bad = gains < -tol
                pairs += base.size
                if not bad.any():
                    continue
                violations = np.where(bad, -gains, -np.inf)
                i = int(np.argmax(violations))
                if best is None or violations[i] > best.violation:
                    best = cls._monotone_witness(int(base[i]), v, float(f_a[i]), float(f_av[i]))
        elif mode == SAMPLED:
            budget = settings.CHECK_BUDGET if budget is None else budget
            rng = make_generator(seed)
            full = (1 << n) - 1
            pairs = 0
            for _ in range(budget):
                v = int(rng.integers(n))
                a_mask = random_submask(rng, full & ~(1 << v))
                subset = Subset(n, a_mask)
                f_a = counter.evaluate(subset)
                f_av = counter.evaluate(subset.add(v))
                pairs += 1
                if f_av - f_a < -cls.tolerance(f_a, f_av):
                    if best is None or f_a - f_av > best.violation:
                        best = cls._monotone_witness(a_mask, v, f_a, f_av)
        else:
            raise DomainError(f"Unknown check mode: {mode}")

        return cls._report(MONOTONE, mode, best, pairs, counter)

    # Submodularity, diminishing-returns form

    @classmethod
    def _derivative_witness(cls, a_mask: int, b_mask: int, v: int, gain_a: float, gain_b: float) -> Witness:
        return Witness(
            set_a=_members(a_mask),
            set_b=_members(b_mask),
            element=v,
            values={"gain(v|A)": gain_a, "gain(v|B)": gain_b},
            violation=gain_b - gain_a,
        )

    @classmethod
    def check_submodular_derivative(
        cls,
        f: SetFunction,
        mode: str = EXHAUSTIVE,
        budget: Optional[int] = None,
        seed: int = 0,
    ) -> PropertyReport:
        """
        Check gain(v|A) >= gain(v|B) for all A <= B and v outside B

        Exhaustive mode visits v ascending, then B by bitmask, then the
        submasks A of B by bitmask (each element is in A and B, in B only, or
        in neither: n * 3^(n-1) pairs) and stops at the first violation.
        """
        counter = wrap_counting(f)
        n = f.n
        witness: Optional[Witness] = None
        pairs = 0

        if mode == EXHAUSTIVE:
            cls._require_exhaustive(f, settings.DERIVATIVE_EXHAUSTIVE_LIMIT, "submodularity (derivative)")
            values = cls._value_table(counter)
            masks = np.arange(1 << n, dtype=np.int64)
            submasks = _submask_table(n)
            for v in range(n):
                bit = 1 << v
                gains = values[masks | bit] - values
                for b_mask in range(1 << n):
                    if b_mask & bit:
                        continue
                    subs = submasks[b_mask]
                    gain_b = gains[b_mask]
                    gain_a = gains[subs]
                    tol = settings.VIOLATION_TOLERANCE * np.maximum(1.0, np.maximum(np.abs(gain_a), abs(gain_b)))
                    bad = gain_b - gain_a > tol
                    if bad.any():
                        i = int(np.argmax(bad))
                        pairs += i + 1
                        witness = cls._derivative_witness(int(subs[i]), b_mask, v, float(gain_a[i]), float(gain_b))
                        return cls._report(SUBMODULAR_DERIVATIVE, mode, witness, pairs, counter)
                    pairs += subs.size
        elif mode == SAMPLED:
            budget = settings.CHECK_BUDGET if budget is None else budget
            rng = make_generator(seed)
            full = (1 << n) - 1
            for _ in range(budget):
                v = int(rng.integers(n))
                b_mask = random_submask(rng, full & ~(1 << v))
                a_mask = random_submask(rng, b_mask)
                gain_a = marginal_gain(counter, Subset(n, a_mask), v)
                gain_b = marginal_gain(counter, Subset(n, b_mask), v)
                pairs += 1
                if gain_b - gain_a > cls.tolerance(gain_a, gain_b):
                    witness = cls._derivative_witness(a_mask, b_mask, v, gain_a, gain_b)
                    break
        else:
            raise DomainError(f"Unknown check mode: {mode}")

        return cls._report(SUBMODULAR_DERIVATIVE, mode, witness, pairs, counter)

    # Submodularity, lattice form

    @classmethod
    def _intersection_witness(cls, a_mask: int, b_mask: int, values: Sequence[float]) -> Witness:
        f_cap, f_cup, f_a, f_b = values
        return Witness(
            set_a=_members(a_mask),
            set_b=_members(b_mask),
            values={"f(A&B)": f_cap, "f(A|B)": f_cup, "f(A)": f_a, "f(B)": f_b},
            violation=(f_cap + f_cup) - (f_a + f_b),
        )

    @classmethod
    def check_submodular_intersection(
        cls,
        f: SetFunction,
        mode: str = EXHAUSTIVE,
        budget: Optional[int] = None,
        seed: int = 0,
    ) -> PropertyReport:
        """
        Check f(A & B) + f(A | B) <= f(A) + f(B) for all A, B

        Exhaustive mode visits unordered pairs (A by bitmask, then B >= A) and
        stops at the first violation.
        """
        counter = wrap_counting(f)
        n = f.n
        witness: Optional[Witness] = None
        pairs = 0

        if mode == EXHAUSTIVE:
            cls._require_exhaustive(f, settings.INTERSECTION_EXHAUSTIVE_LIMIT, "submodularity (intersection)")
            values = cls._value_table(counter)
            masks = np.arange(1 << n, dtype=np.int64)
            for a_mask in range(1 << n):
                others = masks[a_mask:]
                lhs = values[others & a_mask] + values[others | a_mask]
                rhs = values[a_mask] + values[others]
                tol = settings.VIOLATION_TOLERANCE * np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
                bad = lhs - rhs > tol
                if bad.any():
                    i = int(np.argmax(bad))
                    pairs += i + 1
                    b_mask = int(others[i])
                    witness = cls._intersection_witness(
                        a_mask,
                        b_mask,
                        [float(values[a_mask & b_mask]), float(values[a_mask | b_mask]),
                         float(values[a_mask]), float(values[b_mask])],
                    )
                    break
                pairs += others.size
        elif mode == SAMPLED:
            budget = settings.CHECK_BUDGET if budget is None else budget
            rng = make_generator(seed)
            for _ in range(budget):
                a_mask = random_mask(rng, n)
                b_mask = random_mask(rng, n)
                quad = [
                    counter.evaluate(Subset(n, a_mask & b_mask)),
                    counter.evaluate(Subset(n, a_mask | b_mask)),
                    counter.evaluate(Subset(n, a_mask)),
                    counter.evaluate(Subset(n, b_mask)),
                ]
                pairs += 1
                lhs, rhs = quad[0] + quad[1], quad[2] + quad[3]
                if lhs - rhs > cls.tolerance(lhs, rhs):
                    witness = cls._intersection_witness(a_mask, b_mask, quad)
                    break
        else:
            raise DomainError(f"Unknown check mode: {mode}")

        return cls._report(SUBMODULAR_INTERSECTION, mode, witness, pairs, counter)

    @classmethod
    def check(cls, f: SetFunction, prop: str, mode: str = EXHAUSTIVE,
              budget: Optional[int] = None, seed: int = 0) -> PropertyReport:
        checks = {
            MONOTONE: cls.check_monotone,
            SUBMODULAR_DERIVATIVE: cls.check_submodular_derivative,
            SUBMODULAR_INTERSECTION: cls.check_submodular_intersection,
        }
        if prop not in checks:
            raise DomainError(f"Unknown property: {prop}")
        return checks[prop](f, mode=mode, budget=budget, seed=seed)

    @classmethod
    def replay(cls, f: SetFunction, report: PropertyReport) -> float:
        """
        Re-evaluate a report's witness

        Returns:
            The violation magnitude recomputed from fresh evaluations
        """
        if report.witness is None:
            raise DomainError("Report has no witness to replay")
        w = report.witness
        a = Subset.from_indices(f.n, w.set_a)
        if report.property == MONOTONE:
            return -marginal_gain(f, a, w.element)
        b = Subset.from_indices(f.n, w.set_b)
        if report.property == SUBMODULAR_DERIVATIVE:
            return marginal_gain(f, b, w.element) - marginal_gain(f, a, w.element)
        return (f.evaluate(a & b) + f.evaluate(a | b)) - (f.evaluate(a) + f.evaluate(b))


def telescoping_detail(f: SetFunction, subset: Subset, sequence: Sequence[int]) -> TelescopingReport:
    """
    Compare f(A + H) - f(A) against the sum of gains of v_1..v_k added in order

    Members of H already in A are dropped first, since the union absorbs them.

    Raises:
        DomainError: If H repeats an element or holds an out-of-range index
    """
    if len(set(sequence)) != len(sequence):
        raise DomainError(f"sequence H has duplicate elements: {list(sequence)}")
    for element in sequence:
        if not 0 <= element < f.n:
            raise DomainError(f"element index {element} out of range for ground set of size {f.n}")

    note = None
    fresh = [v for v in sequence if v not in subset]
    if len(fresh) != len(sequence):
        dropped = [v for v in sequence if v in subset]
        note = f"dropped elements already in A: {dropped}"
        logger.info(f"Telescoping: {note}")

    terms = []
    current = subset
    for element in fresh:
        terms.append(marginal_gain(f, current, element))
        current = current.add(element)

    total = 0.0
    for term in terms:
        total += term
    residual = abs(f.evaluate(current) - f.evaluate(subset) - total)
    return TelescopingReport(residual=residual, terms=terms, note=note)


def check_telescoping(f: SetFunction, subset: Subset, sequence: Sequence[int]) -> float:
    """Absolute residual of the telescoping identity"""
    return telescoping_detail(f, subset, sequence).residual


check_monotone = PropertyChecker.check_monotone
check_submodular_derivative = PropertyChecker.check_submodular_derivative
check_submodular_intersection = PropertyChecker.check_submodular_intersection
