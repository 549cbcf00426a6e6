"""
Primitive prime divisors of q^n - 1.

A prime l is primitive for (q, n) when l | q^n - 1 but l does not divide
q^m - 1 for any 1 <= m < n, i.e. the multiplicative order of q mod l is n.
Such primes all divide Phi_n(q) and are congruent to 1 mod n, which is
what makes the searches below cheap.
"""
from __future__ import annotations

import itertools
import math
from typing import FrozenSet, Optional

from . import arith
from .errors import UndefinedCase

# candidates 1 + j*n are trial-divided up to this bound before falling
# back to full factorization of what is left of Phi_n(q)
_SCAN_LIMIT = 1 << 16


def _check(q: int, n: int) -> None:
    if q < 2 or n < 1:
        raise ValueError(f"need q >= 2 and n >= 1, got ({q}, {n})")


def _primitive_part(q: int, n: int) -> int:
    """Phi_n(q) with every prime dividing n (the non-primitive ones) removed."""
    c = arith.cyclotomic_value(n, q)
    for r, _ in arith.factorize(n).entries:
        while c % r == 0:
            c //= r
    return c


def _is_primitive(l: int, q: int, n: int) -> bool:
    if q % l == 0 or pow(q, n, l) != 1:
        return False
    return all(pow(q, n // r, l) != 1 for r, _ in arith.factorize(n).entries)


def primitive_prime_divisors(q: int, n: int, budget: Optional[float] = None) -> FrozenSet[int]:
    """All primes l with ord_l(q) = n.  May be empty (e.g. (2, 6), (2, 1))."""
    _check(q, n)
    c = _primitive_part(q, n)
    if c == 1:
        return frozenset()
    primes = arith.factorize(c, budget).primes
    return frozenset(l for l in primes if _is_primitive(l, q, n))


def l(q: int, n: int, budget: Optional[float] = None) -> Optional[int]:
    """Smallest primitive prime divisor of q^n - 1, or None if there is none.

    For n >= 3 and (q, n) != (2, 6) a result is guaranteed to exist.
    """
    _check(q, n)
    deadline = None if budget is None else arith.budget_clock() + budget
    c = _primitive_part(q, n)
    if c == 1:
        found = None
    else:
        found = _smallest_factor(c, n, deadline)
        assert _is_primitive(found, q, n)
    if found is None and n >= 3 and (q, n) != (2, 6):
        raise AssertionError(f"Zsigmondy violated for ({q}, {n})")
    return found


def _candidates(n: int):
    """Increasing integers containing every prime that is 1 mod n."""
    if n <= 2:
        return itertools.count(2)
    step = n if n % 2 == 0 else 2 * n
    return itertools.count(1 + step, step)


def _smallest_factor(c: int, n: int, deadline: Optional[float]) -> int:
    for cand in _candidates(n):
        if cand * cand > c:
            return c
        if cand >= _SCAN_LIMIT:
            break
        if c % cand == 0 and arith.is_prime(cand):
            return cand
    remaining = None if deadline is None else max(deadline - arith.budget_clock(), 0.0)
    return min(arith.factorize(c, remaining).primes)


def l_neg(q: int, n: int, budget: Optional[float] = None) -> Optional[int]:
    """l_{-n}(q) = l(q, 2n) for odd n; undefined at (2, 3)."""
    _check(q, n)
    if n % 2 == 0:
        raise UndefinedCase(f"l_-n(q) needs odd n, got n = {n}")
    if (q, n) == (2, 3):
        raise UndefinedCase("l_-3(2) is undefined: 2^6 - 1 has no primitive prime divisor")
    return l(q, 2 * n, budget)


def smallest_divides(q: int, n: int, m: int, budget: Optional[float] = None) -> bool:
    """Whether l(q, n) exists and divides m.

    Avoids computing l(q, n) when possible: if no primitive prime divides m
    the answer is False outright, and otherwise only candidates below the
    smallest primitive prime of m need scanning.
    """
    _check(q, n)
    c = _primitive_part(q, n)
    g = math.gcd(c, m)
    if g == 1:
        return False
    in_m = min(arith.factorize(g, budget).primes)
    if in_m >= _SCAN_LIMIT:
        return m % l(q, n, budget) == 0
    for cand in _candidates(n):
        if cand >= in_m:
            return True
        if c % cand == 0 and arith.is_prime(cand):
            return False
    return True  # pragma: no cover
