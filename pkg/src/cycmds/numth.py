"""Integer number theory: primality, factorization, orders, totients.

Everything here is deterministic.  Primality uses Miller-Rabin with a fixed
witness set that is provably correct below ``MR_DETERMINISTIC_BOUND``; larger
inputs raise instead of degrading to a probabilistic answer.  Factorization
runs trial division up to 10^4 followed by Brent-cycle Pollard rho with a
fixed parameter sequence, and aborts loudly (``FactorizationIncomplete``)
when its iteration budget runs out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import FactorizationIncomplete, NotCoprime, PrimalityBoundExceeded

# Witnesses certifying Miller-Rabin for all m below this bound
# (Sorenson & Webster's verified list for the first 13 primes).
MR_DETERMINISTIC_BOUND = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_TRIAL_LIMIT = 10**4
DEFAULT_RHO_BUDGET = 5_000_000


@dataclass(frozen=True)
class FactoredInt:
    """A non-negative integer together with its complete prime factorization.

    ``factors`` is sorted strictly ascending by prime; the empty tuple
    represents 1 (and, by convention, 0 which has no prime factorization).
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def recompose(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def is_prime(m: int) -> bool:
    """Deterministic primality test for 0 <= m < MR_DETERMINISTIC_BOUND."""
    if m < 0:
        raise ValueError("is_prime expects a non-negative integer")
    if m < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if m % p == 0:
            return m == p
    if m >= MR_DETERMINISTIC_BOUND:
        raise PrimalityBoundExceeded(
            f"{m} exceeds the deterministic Miller-Rabin bound")
    return not _has_mr_witness(m)


def _has_mr_witness(m: int) -> bool:
    """True iff some fixed base certifies m composite (m odd, m > 41)."""
    d = m - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return True
    return False


def certified_composite(m: int) -> bool:
    """True iff m is provably composite (valid at any size).

    A Miller-Rabin witness disproves primality unconditionally, so this
    works above MR_DETERMINISTIC_BOUND too; False means "no witness found",
    not "prime".
    """
    if m < 2:
        return False
    if m % 2 == 0:
        return m != 2
    return _has_mr_witness(m)


def primes_up_to(limit: int) -> list[int]:
    """Ascending list of primes <= limit (simple sieve)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray((limit - i * i) // i + 1)
    return [i for i, flag in enumerate(sieve) if flag]


_SMALL_PRIMES = None


def _small_primes() -> list[int]:
    global _SMALL_PRIMES
    if _SMALL_PRIMES is None:
        _SMALL_PRIMES = primes_up_to(_TRIAL_LIMIT)
    return _SMALL_PRIMES


def _brent_rho(m: int, budget: list[int]) -> int:
    """Find a nontrivial factor of odd composite m, or raise on budget end.

    Brent's cycle variant with batched gcds.  The polynomial constant c and
    starting point are fixed, so runs are reproducible.
    """
    for c in range(1, 1000):
        y, r, q = 2, 1, 1
        g, ys, x = 1, y, y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % m
            k = 0
            while k < r and g == 1:
                ys = y
                step = min(128, r - k)
                if budget[0] < step:
                    raise FactorizationIncomplete(
                        m, [], m, "rho iteration budget exhausted")
                budget[0] -= step
                for _ in range(step):
                    y = (y * y + c) % m
                    q = q * abs(x - y) % m
                g = math.gcd(q, m)
                k += step
            r *= 2
        if g == m:
            # backtrack one step at a time to recover the factor
            g = 1
            while g == 1:
                ys = (ys * ys + c) % m
                g = math.gcd(abs(x - ys), m)
        if g != m:
            return g
        # cycle collapsed onto m itself: retry with the next constant
    raise FactorizationIncomplete(m, [], m, "rho parameter sequence exhausted")


def factorize(m: int, rho_budget: int = DEFAULT_RHO_BUDGET) -> FactoredInt:
    """Complete prime factorization of m >= 1.

    Raises FactorizationIncomplete when the rho budget runs out or when a
    cofactor is too large for the deterministic primality certificate.
    """
    if m < 1:
        raise ValueError("factorize expects a positive integer")
    if m == 1:
        return FactoredInt(1, ())
    counts: dict[int, int] = {}
    rest = m
    for p in _small_primes():
        if p * p > rest:
            break
        while rest % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rest //= p
    budget = [rho_budget]
    stack = [rest] if rest > 1 else []

    def partial():
        return sorted(counts.items())

    while stack:
        c = stack.pop()
        if c < _TRIAL_LIMIT * _TRIAL_LIMIT or (
                c < MR_DETERMINISTIC_BOUND and is_prime(c)):
            # below the trial-division square every survivor is prime
            counts[c] = counts.get(c, 0) + 1
            continue
        if c >= MR_DETERMINISTIC_BOUND and not certified_composite(c):
            raise FactorizationIncomplete(
                m, partial(), c, "cofactor exceeds deterministic primality bound")
        try:
            d = _brent_rho(c, budget)
        except FactorizationIncomplete as exc:
            raise FactorizationIncomplete(m, partial(), c, str(exc)) from None
        stack.append(d)
        stack.append(c // d)
    factors = tuple(sorted(counts.items()))
    result = FactoredInt(m, factors)
    assert result.recompose() == m
    return result


def multiplicative_order(p: int, n: int) -> int:
    """Smallest f >= 1 with p^f = 1 (mod n); requires gcd(p, n) = 1."""
    if n < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(p, n) != 1:
        raise NotCoprime(f"gcd({p}, {n}) != 1")
    if n == 1:
        return 1
    order = euler_phi(n)
    for q, _ in factorize(order).factors:
        while order % q == 0 and pow(p, order // q, n) == 1:
            order //= q
    return order


def euler_phi(n: int) -> int:
    """Euler's totient."""
    if n < 1:
        raise ValueError("euler_phi expects a positive integer")
    out = n
    for p, _ in factorize(n).factors:
        out -= out // p
    return out


def mobius(n: int) -> int:
    """Moebius function: 0 on non-squarefree n, else (-1)^(#prime factors)."""
    if n < 1:
        raise ValueError("mobius expects a positive integer")
    if n == 1:
        return 1
    factors = factorize(n).factors
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors(n: int) -> list[int]:
    """Ascending list of positive divisors of n."""
    out = [1]
    for p, e in factorize(n).factors:
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)
