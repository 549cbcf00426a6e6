"""
Partitions, hook-length degrees of symmetric groups and the largest
character degree b(A_n) of the alternating groups.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple

from .errors import CapExceeded

MAX_N = 40
MAX_LEMMA_N = 100


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts) or list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError(f"not a partition: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def _cap(n: int, limit: int = MAX_N) -> None:
    if n > limit:
        raise CapExceeded(f"n = {n} exceeds the cap of {limit}")


def _partitions(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions(n: int) -> List[Partition]:
    """All partitions of n, lexicographically descending: (n) first, (1^n) last."""
    if n < 1:
        raise ValueError("n must be positive")
    _cap(n)
    return [Partition(p) for p in _partitions(n, n)]


def _conjugate(parts: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0] if parts else 0))


def conjugate(lam: Partition) -> Partition:
    return Partition(_conjugate(lam.parts))


def _hook_product(parts: Tuple[int, ...], cols: Tuple[int, ...]) -> int:
    hooks = 1
    for i, row in enumerate(parts):
        for j in range(row):
            hooks *= row - j + cols[j] - i - 1
    return hooks


def hook_degree(lam: Partition) -> int:
    """Degree of the irreducible character of S_n labelled by lam."""
    return math.factorial(lam.n) // _hook_product(lam.parts, _conjugate(lam.parts))


def _alternating_degrees(n: int) -> Iterator[int]:
    fact = math.factorial(n)
    for parts in _partitions(n, n):
        cols = _conjugate(parts)
        d = fact // _hook_product(parts, cols)
        yield d // 2 if parts == cols else d


@lru_cache(maxsize=None)
def max_degree_alternating(n: int) -> int:
    """b(A_n): self-conjugate labels split into two characters of half degree."""
    if n < 5:
        raise ValueError("A_n is simple only for n >= 5")
    _cap(n)
    return max(_alternating_degrees(n))


def alternating_degrees(n: int) -> List[int]:
    """Sorted set of character degrees of A_n."""
    if n < 5:
        raise ValueError("A_n is simple only for n >= 5")
    _cap(n)
    return sorted(set(_alternating_degrees(n)))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
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
        p[m] = total
    return p[n]


@dataclass(frozen=True)
class LemmaRow:
    """Outcome of the three checks at a single n.

    Each field is True/False for a check that applies at n, or None when
    the check says nothing there.
    """

    n: int
    direct: "bool | None"
    class_count: bool
    factorial: "bool | None"

    @property
    def applicable(self) -> bool:
        return self.n >= 10

    @property
    def ok(self) -> bool:
        return all(v is not False for v in (self.direct, self.class_count, self.factorial))

    @property
    def status(self) -> str:
        if not self.applicable:
            return "not-applicable"
        return "pass" if self.ok else "fail"


def verify_an_lemma(n_lo: int, n_hi: int) -> List[LemmaRow]:
    """Check b(A_n) >= 2^(n-1) through its three ingredients for n in [n_lo, n_hi].

    (i)   direct hook-length check of b(A_n) >= 2^(n-1), for 10 <= n <= 40;
    (ii)  p(n) <= 3^((n-1)/2), compared as p(n)^2 <= 3^(n-1);
    (iii) n! >= 3^((n-1)/2) 2^(2n) for n >= 18, compared after squaring.
    """
    if not 5 <= n_lo <= n_hi:
        raise ValueError("need 5 <= n_lo <= n_hi")
    _cap(n_hi, MAX_LEMMA_N)
    rows = []
    for n in range(n_lo, n_hi + 1):
        direct = None
        if 10 <= n <= MAX_N:
            direct = max_degree_alternating(n) >= 2 ** (n - 1)
        class_count = partition_count(n) ** 2 <= 3 ** (n - 1)
        factorial = None
        if n >= 18:
            factorial = math.factorial(n) ** 2 >= 3 ** (n - 1) * 2 ** (4 * n)
        rows.append(LemmaRow(n, direct, class_count, factorial))
    return rows
