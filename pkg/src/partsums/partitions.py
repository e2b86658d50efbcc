"""Integer partitions and compositions.

A partition is a weakly decreasing tuple of positive ints. The padded form
``(l1, ..., ln)`` used by the partition-sum identities appends zeros up to
length n. Multiplicity vectors ``(t1, ..., tn)`` count how often each part
size occurs.
"""
from __future__ import annotations

from itertools import accumulate, combinations
from typing import Iterator, Sequence

Partition = tuple[int, ...]

_FERRERS_DOT = "•"


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n in reverse lexicographic order.

    For n = 5 this gives 5, 4+1, 3+2, 3+1+1, 2+2+1, 2+1+1+1, 1+1+1+1+1.
    n = 0 yields the empty partition once.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield ()
        return
    parts = [n]
    while True:
        yield tuple(parts)
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        largest = parts.pop() - 1
        rest = ones + 1
        parts.append(largest)
        while rest > largest:
            parts.append(largest)
            rest -= largest
        if rest:
            parts.append(rest)


_count_cache = [1]


def partition_count(n: int) -> int:
    """p(n) from Euler's pentagonal-number recurrence (no enumeration)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    p = _count_cache
    for m in range(len(p), n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p.append(total)
    return p[n]


def is_partition(p: Sequence[int]) -> bool:
    return all(x > 0 for x in p) and all(a >= b for a, b in zip(p, p[1:]))


def pad(p: Sequence[int], n: int) -> Partition:
    """Extend a partition of n with zeros to length n."""
    if sum(p) != n:
        raise ValueError(f"{tuple(p)} is not a partition of {n}")
    if len(p) > n:
        raise ValueError(f"{tuple(p)} has more than {n} parts")
    return tuple(p) + (0,) * (n - len(p))


def unpad(lam: Sequence[int]) -> Partition:
    return tuple(x for x in lam if x)


def conjugate(p: Sequence[int]) -> Partition:
    """Transpose the Ferrers diagram. Zero entries are ignored."""
    p = unpad(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def multiplicities(p: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """(t1, ..., tn) where ti is the number of parts equal to i."""
    p = unpad(p)
    if n is None:
        n = sum(p)
    t = [0] * n
    for x in p:
        t[x - 1] += 1
    return tuple(t)


def from_multiplicities(t: Sequence[int]) -> Partition:
    """Inverse of :func:`multiplicities`; t must have length n with sum(i * ti) = n."""
    n = len(t)
    if any(x < 0 for x in t):
        raise ValueError(f"negative multiplicity in {tuple(t)}")
    weighted = sum(i * x for i, x in enumerate(t, start=1))
    if weighted != n:
        raise ValueError(f"sum of i*t_i is {weighted}, expected {n}")
    parts: list[int] = []
    for i in range(n, 0, -1):
        parts.extend([i] * t[i - 1])
    return tuple(parts)


def partitions_with_parts(n: int, k: int) -> Iterator[Partition]:
    """Partitions of n into exactly k parts, in reverse lexicographic order."""
    return (p for p in enumerate_partitions(n) if len(p) == k)


def enumerate_compositions(n: int, parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """Compositions of n, each exactly once: all 2**(n-1), or only those with ``parts`` parts.

    A composition is read off a set of cut positions in 1..n-1; cut sets are
    visited by size, then lexicographically.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    sizes = range(n) if parts is None else [parts - 1]
    for size in sizes:
        if size < 0 or size > n - 1:
            continue
        for cuts in combinations(range(1, n), size):
            bounds = (0, *cuts, n)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def ferrers(p: Sequence[int]) -> str:
    """Dot diagram, one newline-terminated row per part, longest row first."""
    return "".join(" ".join([_FERRERS_DOT] * x) + "\n" for x in unpad(p))


def tail_sums(t: Sequence[int]) -> tuple[int, ...]:
    """(t1 + ... + tn, t2 + ... + tn, ..., tn)."""
    return tuple(reversed(list(accumulate(reversed(t)))))
