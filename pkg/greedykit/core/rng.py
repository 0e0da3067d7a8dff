"""
Seeded random streams

All randomness in the toolkit flows through numpy's PCG64 bit generator,
seeded through a SeedSequence:

1. make_generator(seed)          - one stream for a single solve or check
2. spawn_streams(seed, count)    - independent child streams, one per trial
3. sample_without_replacement    - uniform draw of distinct pool members

PCG64 output for a given seed is identical on every platform; numpy is pinned
in requirements.txt so Generator.choice stays bit-stable as well.
"""

from typing import List, Sequence

import numpy as np

from greedykit.core.exceptions import DomainError


def _seed_sequence(seed: int) -> np.random.SeedSequence:
    if seed < 0:
        raise DomainError(f"seed must be non-negative, got {seed}")
    return np.random.SeedSequence(seed)


def make_generator(seed: int) -> np.random.Generator:
    """
    Create the generator for a single run

    Args:
        seed: Non-negative integer seed

    Returns:
        numpy Generator backed by PCG64
    """
    return np.random.Generator(np.random.PCG64(_seed_sequence(seed)))


def spawn_streams(seed: int, count: int) -> List[np.random.Generator]:
    """
    Split one seed into independent per-trial generators

    Stream i depends only on (seed, i), so trials can run in any order
    or on any worker and still reproduce.

    Example:
        streams = spawn_streams(7, 500)  # stream[42] is the same on every run
    """
    children = _seed_sequence(seed).spawn(count)
    return [np.random.Generator(np.random.PCG64(child)) for child in children]


def sample_without_replacement(
    rng: np.random.Generator,
    pool: Sequence[int],
    size: int,
) -> List[int]:
    """
    Draw distinct members of a pool uniformly at random

    Args:
        rng: Generator to draw from
        pool: Candidate elements, ascending
        size: Requested sample size; clamped to len(pool)

    Returns:
        Sampled elements in draw order
    """
    size = min(size, len(pool))
    if size == 0:
        return []
    picks = rng.choice(len(pool), size=size, replace=False)
    return [pool[int(i)] for i in picks]


def random_mask(rng: np.random.Generator, n: int) -> int:
    """Uniformly random subset of {0..n-1}, as a bitmask"""
    bits = np.flatnonzero(rng.random(n) < 0.5)
    mask = 0
    for i in bits:
        mask |= 1 << int(i)
    return mask


def random_submask(rng: np.random.Generator, mask: int) -> int:
    """Uniformly random subset of the members of mask"""
    members = [i for i in range(mask.bit_length()) if mask >> i & 1]
    keep = rng.random(len(members)) < 0.5
    sub = 0
    for element, kept in zip(members, keep):
        if kept:
            sub |= 1 << element
    return sub
