"""Symmetric-group character machinery: partition combinatorics
(conjugation, diagonal hooks, Frobenius coordinates) and the
Murnaghan-Nakayama rim-hook recursion as the exact integer oracle.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import Iterator, Sequence


def check_partition(parts: Sequence[int]) -> tuple[int, ...]:
    """Validate weakly decreasing positive parts; returns a tuple."""
    lam = tuple(parts)
    for i, p in enumerate(lam):
        if p < 1:
            raise ValueError(f"parts must be positive, got {lam}")
        if i and lam[i - 1] < p:
            raise ValueError(f"parts must be weakly decreasing, got {lam}")
    return lam


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n in descending lexicographic order."""
    if n == 0:
        yield ()
        return
    top = min(n, max_part) if max_part else n
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    """Transpose of the Young diagram."""
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def main_hooks(gamma: Sequence[int]) -> tuple[int, ...]:
    """Diagonal hook lengths h(i,i) = gamma_i + gamma'_i - 2i + 1."""
    gamma = check_partition(gamma)
    conj = conjugate(gamma)
    out = []
    for i, p in enumerate(gamma, start=1):
        if p < i:
            break
        out.append(p + conj[i - 1] - 2 * i + 1)
    return tuple(out)


def self_conjugate_from_hooks(lam: Sequence[int]) -> tuple[int, ...]:
    """The unique self-conjugate partition whose diagonal hooks are lam.

    lam must have strictly decreasing odd parts; Frobenius coordinates are
    a_i = (lam_i - 1)/2 on both sides.
    """
    lam = check_partition(lam)
    for i, p in enumerate(lam):
        if p % 2 == 0:
            raise ValueError(f"parts must be odd, got {lam}")
        if i and lam[i - 1] == p:
            raise ValueError(f"parts must be distinct, got {lam}")
    arms = [(p - 1) // 2 for p in lam]
    r = len(arms)
    rows = [arms[i] + i + 1 for i in range(r)]
    max_extra = arms[0] + 1 if arms else 0
    for j in range(r + 1, max_extra + 1):
        width = sum(1 for i in range(r) if arms[i] + i + 1 >= j)
        if width == 0:
            break
        rows.append(width)
    gamma = tuple(rows)
    assert gamma == conjugate(gamma)
    return gamma


def centralizer_sn(rho: Sequence[int]) -> int:
    """Centralizer order of a cycle type: prod j^m_j * m_j!."""
    rho = check_partition(rho)
    z = 1
    for j, mult in Counter(rho).items():
        z *= j**mult * math.factorial(mult)
    return z


def hook_length_degree(mu: Sequence[int]) -> int:
    """Standard-tableaux count n! / prod(hooks); the character degree."""
    mu = check_partition(mu)
    n = sum(mu)
    conj = conjugate(mu)
    prod = 1
    for i, p in enumerate(mu, start=1):
        for j in range(1, p + 1):
            prod *= p - j + conj[j - 1] - i + 1
    deg, rem = divmod(math.factorial(n), prod)
    assert rem == 0
    return deg


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama on beta-sets
#
# A partition with k parts maps to beta numbers b_i = mu_i + (k - i), all
# distinct.  Removing a rim hook of length L means replacing some b with
# b - L (when b - L is not already a beta number); the sign is (-1)^(number
# of beta numbers strictly between b - L and b), the leg length of the hook.


def _beta(mu: tuple[int, ...]) -> tuple[int, ...]:
    k = len(mu)
    return tuple(mu[i] + (k - 1 - i) for i in range(k))


def _partition_from_beta(beta: tuple[int, ...]) -> tuple[int, ...]:
    bs = sorted(beta, reverse=True)
    k = len(bs)
    parts = [bs[i] - (k - 1 - i) for i in range(k)]
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(mu: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1  # both empty: the empty character value
    ell = rho[0]
    rest = rho[1:]
    beta = _beta(mu)
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - ell
        if c < 0 or c in bset:
            continue
        leg = sum(1 for x in beta if c < x < b)
        smaller = _partition_from_beta(tuple(x if x != b else c for x in beta))
        total += (-1) ** leg * _mn(smaller, rest)
    return total


def mn_value(mu: Sequence[int], rho: Sequence[int]) -> int:
    """Exact irreducible character value chi^mu at cycle type rho."""
    mu = check_partition(mu)
    rho = check_partition(rho)
    if sum(mu) != sum(rho):
        raise ValueError(f"size mismatch: |{mu}| != |{rho}|")
    return _mn(mu, tuple(sorted(rho, reverse=True)))
