"""
Exact integer arithmetic: primality, factorization, Moebius function,
cyclotomic values and p-parts.

Everything here is a pure function of its arguments.  Successful
factorizations are memoised; the cache is append-only and safe to share.
"""
from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import FactorizationTimeout, MagnitudeExceeded, NotPrime

DEFAULT_MAX_BITS = 512
MAX_BITS_ENV = "CDVERIFY_MAX_BITS"

# Budgets count CPU time of the current process, so a verdict does not
# depend on how many workers share the machine.
budget_clock = time.process_time

_TRIAL_LIMIT = 1 << 12
# Strong-pseudoprime test with the first 13 prime bases is exact below this
# bound (Sorenson & Webster 2015).
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _sieve(limit: int) -> List[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


SMALL_PRIMES: Tuple[int, ...] = tuple(_sieve(_TRIAL_LIMIT))
_SMALL_PRIME_SET = frozenset(SMALL_PRIMES)


def max_bits() -> int:
    """Magnitude cap in bits; overridable through ``CDVERIFY_MAX_BITS``."""
    raw = os.environ.get(MAX_BITS_ENV)
    if raw:
        return int(raw)
    return DEFAULT_MAX_BITS


# ---------------------------------------------------------------------------
# primality


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -d - 2 if d > 0 else -d + 2
        if d == 13 and math.isqrt(n) ** 2 == n:
            return False
    p, q = 1, (1 - d) // 4

    k, s = n + 1, 0
    while k % 2 == 0:
        k //= 2
        s += 1

    inv2 = (n + 1) // 2
    u, v, qk = 1, p, q % n
    for bit in bin(k)[3:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) * inv2 % n, (d * u + p * v) * inv2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


def _bpsw(n: int) -> bool:
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


def _pocklington_certify(n: int, deadline: Optional[float]) -> bool:
    """Try to prove a BPSW-probable prime ``n`` prime.

    Factors n - 1 until the proven part F satisfies F^2 > n, then applies the
    Pocklington criterion.  Returns False if no certificate was found in the
    effort allowed (the caller decides what to do with that).
    """
    m = n - 1
    found: Dict[int, int] = {}
    for p in SMALL_PRIMES:
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    covered = (n - 1) // m
    pending = [m] if m > 1 else []
    while covered * covered <= n and pending:
        c = pending.pop()
        if c == 1:
            continue
        if is_prime(c):
            found[c] = found.get(c, 0) + 1
            covered *= c
            continue
        try:
            f = _rho(c, deadline, max_iter=1 << 22)
        except FactorizationTimeout:
            return False
        if f is None:
            continue
        pending.extend([f, c // f])
    if covered * covered <= n:
        return False
    for q in found:
        for a in range(2, 200):
            if pow(a, n - 1, n) != 1:
                return False
            if math.gcd(pow(a, (n - 1) // q, n) - 1, n) == 1:
                break
        else:
            return False
    return True


_uncertified: set = set()


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Primality test.

    Exact below 3.3e24 (strong pseudoprime test to the first 13 prime
    bases).  Above that, a BPSW probable prime is confirmed with a
    Pocklington certificate when one can be built cheaply; otherwise the
    BPSW verdict stands and ``n`` is recorded in ``uncertified_primes()``.
    """
    if n < 2:
        return False
    if n in _SMALL_PRIME_SET:
        return True
    for p in SMALL_PRIMES[:50]:
        if n % p == 0:
            return False
    if n < _TRIAL_LIMIT * _TRIAL_LIMIT:
        for p in SMALL_PRIMES[50:]:
            if p * p > n:
                return True
            if n % p == 0:
                return False
        return True
    if n < _MR_DETERMINISTIC_BOUND:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    if not _bpsw(n):
        return False
    if not _pocklington_certify(n, budget_clock() + 10.0):
        _uncertified.add(n)
    return True


def uncertified_primes() -> frozenset:
    """BPSW primes above the deterministic range that lack a certificate."""
    return frozenset(_uncertified)


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return p


# ---------------------------------------------------------------------------
# factorization


@dataclass(frozen=True)
class Factorization:
    """A positive integer together with its prime factorization."""

    entries: Tuple[Tuple[int, int], ...]
    value: int = field(compare=False)

    def __post_init__(self):
        primes = [p for p, _ in self.entries]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        prod = 1
        for p, e in self.entries:
            if e < 1:
                raise ValueError("exponents must be positive")
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factorization does not multiply to {self.value}")

    @classmethod
    def from_dict(cls, d: Dict[int, int]) -> "Factorization":
        entries = tuple(sorted((p, e) for p, e in d.items() if e))
        value = 1
        for p, e in entries:
            value *= p**e
        return cls(entries, value)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)

    @property
    def primes(self) -> frozenset:
        return frozenset(p for p, _ in self.entries)

    def exponent(self, p: int) -> int:
        return self.as_dict().get(p, 0)

    def __mul__(self, other: "Factorization") -> "Factorization":
        d = self.as_dict()
        for p, e in other.entries:
            d[p] = d.get(p, 0) + e
        return Factorization.from_dict(d)

    def __str__(self):
        if not self.entries:
            return "1"
        return "·".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.entries)


def _integer_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0."""
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _perfect_power(n: int) -> Optional[Tuple[int, int]]:
    for k in SMALL_PRIMES:
        if (1 << k) > n:
            break
        r = _integer_root(n, k)
        if r**k == n:
            return r, k
    return None


def _rho(n: int, deadline: Optional[float], max_iter: Optional[int] = None) -> Optional[int]:
    """Brent's variant of Pollard rho with fixed seeds; returns a proper factor."""
    if n % 2 == 0:
        return 2
    iters = 0
    for c in range(1, 64):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        batch = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(batch, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += batch
                iters += batch
                if deadline is not None and budget_clock() > deadline:
                    raise FactorizationTimeout(f"budget exhausted factoring {n}")
                if max_iter is not None and iters > max_iter:
                    return None
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    return None


_factor_cache: Dict[int, Factorization] = {}


def factorize(n: int, budget: Optional[float] = None) -> Factorization:
    """Return the prime factorization of ``n >= 1``.

    ``budget`` is a limit in CPU seconds (None means unlimited).  Raises
    FactorizationTimeout when it runs out and MagnitudeExceeded when ``n`` is
    above the configured cap (2^512 by default).
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    if n > (1 << max_bits()):
        raise MagnitudeExceeded(f"{n.bit_length()}-bit input above the 2^{max_bits()} cap")
    cached = _factor_cache.get(n)
    if cached is not None:
        return cached
    deadline = None if budget is None else budget_clock() + budget

    found: Dict[int, int] = {}
    m = n
    for p in SMALL_PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    stack = [(m, 1)] if m > 1 else []
    while stack:
        c, mult = stack.pop()
        if c == 1:
            continue
        if is_prime(c):
            found[c] = found.get(c, 0) + mult
            continue
        pp = _perfect_power(c)
        if pp is not None:
            stack.append((pp[0], mult * pp[1]))
            continue
        f = _rho(c, deadline)
        if f is None:
            raise FactorizationTimeout(f"rho failed to split {c}")
        g = c // f
        # keep the cofactor coprime to f so multiplicities stay exact
        shared = math.gcd(f, g)
        if shared > 1:
            stack.append((shared, mult))
            stack.append((f // shared, mult))
            stack.append((g, mult))
        else:
            stack.append((f, mult))
            stack.append((g, mult))
    result = Factorization.from_dict(found)
    assert result.value == n
    _factor_cache[n] = result
    return result


def factorize_product(factors: Iterable[int], budget: Optional[float] = None) -> Factorization:
    """Factor a product by factoring its (smaller) factors separately."""
    deadline = None if budget is None else budget_clock() + budget
    total = Factorization((), 1)
    for f in factors:
        remaining = None if deadline is None else max(deadline - budget_clock(), 0.0)
        total = total * factorize(f, remaining)
    return total


def prime_set(n: int, budget: Optional[float] = None) -> frozenset:
    """pi(n): the set of primes dividing n (empty for n = 1)."""
    return factorize(n, budget).primes


# ---------------------------------------------------------------------------
# Moebius, cyclotomic values, p-parts


def divisors(n: int) -> List[int]:
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius needs n >= 1")
    result = 1
    for p, e in factorize(n).entries:
        if e > 1:
            return 0
        result = -result
    return result


@lru_cache(maxsize=1 << 14)
def cyclotomic_value(n: int, q: int) -> int:
    """Phi_n(q), computed as prod_{d | n} (q^d - 1)^mu(n/d)."""
    if n < 1 or q < 2:
        raise ValueError(f"cyclotomic_value needs n >= 1 and q >= 2, got ({n}, {q})")
    num, den = 1, 1
    for d in divisors(n):
        mu = moebius(n // d)
        if mu == 1:
            num *= q**d - 1
        elif mu == -1:
            den *= q**d - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def p_part(n: int, p: int) -> int:
    """Largest power of the prime p dividing n."""
    require_prime(p)
    if n < 1:
        raise ValueError("p_part needs n >= 1")
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def valuation(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def prime_power(q: int) -> Optional[Tuple[int, int]]:
    """(p, a) with q = p^a, or None when q is not a prime power."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f.entries) != 1:
        return None
    return f.entries[0]


def multiplicative_order(q: int, p: int) -> int:
    """Order of q modulo the prime p (q not divisible by p)."""
    if q % p == 0:
        raise ValueError(f"{q} is not a unit mod {p}")
    order = p - 1
    for r, _ in factorize(p - 1).entries:
        while order % r == 0 and pow(q, order // r, p) == 1:
            order //= r
    return order
