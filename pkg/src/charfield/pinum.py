"""Smooth-number sequences over a fixed set of odd primes: membership,
heap-merge enumeration, the perfect-square subsequence, and its counter.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for all 64-bit (and well beyond)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeSet:
    """A set of t >= 1 distinct odd primes, strictly increasing."""

    primes: tuple[int, ...]

    def __init__(self, primes) -> None:
        ps = tuple(sorted(primes))
        if not ps:
            raise ValueError("at least one prime required")
        if len(set(ps)) != len(ps):
            raise ValueError(f"duplicate primes in {ps}")
        for p in ps:
            if p == 2 or not is_prime(p):
                raise ValueError(f"{p} is not an odd prime")
        object.__setattr__(self, "primes", ps)

    @property
    def t(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __getitem__(self, i: int) -> int:
        return self.primes[i]

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.primes)) + "}"


def _as_primeset(pi) -> PrimeSet:
    return pi if isinstance(pi, PrimeSet) else PrimeSet(pi)


@dataclass(frozen=True)
class PiSequence:
    """Ascending smooth numbers (kind="all") or their squares > 1 (kind="squares")."""

    elements: tuple[int, ...]
    kind: str
    primes: PrimeSet
    limit: int

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def count_upto(self, n: int) -> int:
        if n > self.limit:
            raise ValueError(f"sequence generated only up to {self.limit}")
        import bisect

        return bisect.bisect_right(self.elements, n)


def is_pi_number(m: int, pi) -> bool:
    """True iff every prime factor of m lies in pi; 1 qualifies vacuously."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    for p in _as_primeset(pi):
        while m % p == 0:
            m //= p
    return m == 1


def _smooth_upto(primes: tuple[int, ...], N: int) -> list[int]:
    # min-heap merge over multiplications; no factoring needed
    out: list[int] = []
    heap = [1]
    seen = {1}
    while heap:
        x = heapq.heappop(heap)
        if x > N:
            break
        out.append(x)
        for p in primes:
            y = x * p
            if y <= N and y not in seen:
                seen.add(y)
                heapq.heappush(heap, y)
    return out


def pi_numbers_upto(pi, N: int) -> PiSequence:
    """All smooth numbers <= N over pi, ascending, including 1."""
    pi = _as_primeset(pi)
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return PiSequence(tuple(_smooth_upto(pi.primes, N)), "all", pi, N)


def pi_squares_upto(pi, N: int) -> PiSequence:
    """Perfect-square smooth numbers in [2, N], ascending (1 excluded).

    A smooth perfect square is the square of a smooth number, so squaring
    the smooth numbers <= sqrt(N) enumerates the sequence.
    """
    pi = _as_primeset(pi)
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    roots = _smooth_upto(pi.primes, math.isqrt(N))
    return PiSequence(tuple(r * r for r in roots if r > 1), "squares", pi, N)


def count_pi_squares(pi, n: int) -> int:
    """Number of elements of the square subsequence that are <= n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return len(pi_squares_upto(pi, n))
