"""Partitions into distinct parts from a prescribed set: streaming
enumeration, bitset reachability DP over a range, witness extraction, and
the parity-channel DP that buckets partitions by the exponent parity of
their part product.

The parity-channel DP is the load-bearing trick: the number of partitions
of n into distinct smooth parts can be astronomical, but the square class
of the part product depends only on a 2^t-valued parity footprint, so
2^t bit-vectors of length n+1 carry everything field computations need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .exactnum import CapacityError
from .pinum import PrimeSet, pi_numbers_upto

# 2^t parity channels; beyond this the DP footprint stops being desk-scale
MAX_CHANNEL_DIM = 6


def distinct_subset_partitions(n: int, parts: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield every strictly decreasing tuple of distinct elements of `parts`
    summing to n, in lexicographically decreasing order of part tuples."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    ordered = sorted(parts)
    suffix = [0]
    for p in ordered:
        suffix.append(suffix[-1] + p)  # suffix[i] = sum of ordered[:i]

    def rec(remaining: int, hi: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(acc)
            return
        for i in range(hi, -1, -1):
            p = ordered[i]
            if p > remaining:
                continue
            if suffix[i + 1] < remaining:  # all still-available parts too small
                return
            acc.append(p)
            yield from rec(remaining - p, i - 1, acc)
            acc.pop()

    return rec(n, len(ordered) - 1, [])


@dataclass(frozen=True)
class ReachSet:
    """Subset-sum reachability: bit s of `bits` set iff s is a sum of
    distinct generating elements (bit 0 always set: empty sum)."""

    limit: int
    bits: int
    parts: tuple[int, ...]

    def __contains__(self, s: int) -> bool:
        return 0 <= s <= self.limit and (self.bits >> s) & 1 == 1

    def count(self) -> int:
        return self.bits.bit_count()

    def largest_unreachable(self) -> int | None:
        missed = ~self.bits & ((1 << (self.limit + 1)) - 1)
        return missed.bit_length() - 1 if missed else None


def representable_set(parts: Sequence[int], L: int) -> ReachSet:
    """Word-parallel shift-OR subset-sum DP over [0, L]."""
    if L < 1:
        raise ValueError(f"L must be >= 1, got {L}")
    use = tuple(sorted(p for p in parts if p <= L))
    mask = (1 << (L + 1)) - 1
    bits = 1
    for p in use:
        bits |= (bits << p) & mask
    return ReachSet(L, bits, use)


def find_representation(n: int, parts: Sequence[int]) -> tuple[int, ...] | None:
    """A subset of distinct `parts` summing to n, or None.

    Deterministic: parts are scanned largest-first and greedily taken
    whenever the remainder stays reachable from the smaller parts.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    use = sorted(p for p in parts if p <= n)
    layers = [1]
    bits = 1
    mask = (1 << (n + 1)) - 1
    for p in use:
        bits |= (bits << p) & mask
        layers.append(bits)
    if not (bits >> n) & 1:
        return None
    witness: list[int] = []
    s = n
    for i in range(len(use) - 1, -1, -1):
        p = use[i]
        if p <= s and (layers[i] >> (s - p)) & 1:
            witness.append(p)
            s -= p
    assert s == 0
    return tuple(witness)


@dataclass(frozen=True)
class ParityReach:
    """Which exponent-parity vectors (bitmasks over the prime set) are hit
    by partitions of n into distinct smooth parts, with optional witnesses."""

    n: int
    primes: PrimeSet
    reached: tuple[bool, ...]
    witnesses: dict[int, tuple[int, ...]] | None = None

    @property
    def t(self) -> int:
        return self.primes.t

    def reached_vectors(self) -> list[int]:
        return [v for v in range(1 << self.t) if self.reached[v]]


def part_parity_vector(m: int, primes: Sequence[int]) -> int:
    """Bit i = exponent of primes[i] in m, mod 2."""
    v = 0
    for i, p in enumerate(primes):
        e = 0
        while m % p == 0:
            m //= p
            e ^= 1
        v |= e << i
    return v


def _parity_channels(parts: Sequence[int], vecs: Sequence[int], dim: int,
                     L: int, keep_layers: bool):
    mask = (1 << (L + 1)) - 1
    ch = [0] * (1 << dim)
    ch[0] = 1
    layers = []
    for part, pv in zip(parts, vecs):
        old = ch[:]
        if keep_layers:
            layers.append(old)
        for v in range(1 << dim):
            ch[v] = old[v] | ((old[v ^ pv] << part) & mask)
    return ch, layers


def _backtrack_witness(target_v: int, n: int, parts: Sequence[int],
                       vecs: Sequence[int], layers: list[list[int]]) -> tuple[int, ...]:
    witness: list[int] = []
    v, s = target_v, n
    for i in range(len(parts) - 1, -1, -1):
        p, pv = parts[i], vecs[i]
        prev = layers[i]
        if p <= s and (prev[v ^ pv] >> (s - p)) & 1:
            witness.append(p)
            v ^= pv
            s -= p
        else:
            assert (prev[v] >> s) & 1
    assert s == 0 and v == 0
    return tuple(witness)


def reachable_parity_vectors(n: int, pi, want_witnesses: bool = False) -> ParityReach:
    """Parity-channel DP over all smooth numbers <= n (1 included).

    reached[v] is true iff some partition of n into distinct smooth parts
    has part product with exponent-parity vector v.  Memory: 2^t vectors
    of n+1 bits, plus per-part snapshots only when witnesses are wanted.
    """
    pi = pi if isinstance(pi, PrimeSet) else PrimeSet(pi)
    if pi.t > MAX_CHANNEL_DIM:
        raise CapacityError(f"parity DP supports at most {MAX_CHANNEL_DIM} primes, got {pi.t}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    parts = tuple(pi_numbers_upto(pi, n))
    vecs = tuple(part_parity_vector(p, pi.primes) for p in parts)
    ch, layers = _parity_channels(parts, vecs, pi.t, n, want_witnesses)
    reached = tuple((c >> n) & 1 == 1 for c in ch)
    witnesses = None
    if want_witnesses:
        witnesses = {v: _backtrack_witness(v, n, parts, vecs, layers)
                     for v in range(1 << pi.t) if reached[v]}
    return ParityReach(n, pi, reached, witnesses)


@dataclass(frozen=True)
class ParityProfile:
    """Parity-channel DP shared across every target sum in [0, L]: channel v
    holds the reachability bitset, byte-packed for O(1) per-sum queries."""

    limit: int
    primes: PrimeSet
    channels: tuple[bytes, ...]

    def reached_vectors(self, n: int) -> list[int]:
        if not 0 <= n <= self.limit:
            raise ValueError(f"n out of range [0, {self.limit}]")
        byte, bit = n >> 3, n & 7
        return [v for v, ch in enumerate(self.channels) if (ch[byte] >> bit) & 1]


def parity_profile(pi, L: int) -> ParityProfile:
    """One DP pass answering reachable_parity_vectors for every n <= L."""
    pi = pi if isinstance(pi, PrimeSet) else PrimeSet(pi)
    if pi.t > MAX_CHANNEL_DIM:
        raise CapacityError(f"parity DP supports at most {MAX_CHANNEL_DIM} primes, got {pi.t}")
    if L < 1:
        raise ValueError(f"L must be >= 1, got {L}")
    parts = tuple(pi_numbers_upto(pi, L))
    vecs = tuple(part_parity_vector(p, pi.primes) for p in parts)
    ch, _ = _parity_channels(parts, vecs, pi.t, L, False)
    nbytes = (L >> 3) + 1
    return ParityProfile(L, pi, tuple(c.to_bytes(nbytes, "little") for c in ch))
