"""Independent brute-force oracles used by the test suite.

The character-table oracle here never touches rim hooks: it counts
tabloids fixed by permutations (pure cycle combinatorics) and peels off
irreducible characters by exact Gram-Schmidt, using unitriangularity of
the Kostka matrix in descending lexicographic order.
"""

from fractions import Fraction
from functools import lru_cache

from charfield.schar import centralizer_sn, partitions_of


@lru_cache(maxsize=None)
def _count_fillings(caps: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    """Ways to assign each cycle to an (ordered) row so row sums hit caps."""
    if not cycles:
        return 1 if all(c == 0 for c in caps) else 0
    c, rest = cycles[0], cycles[1:]
    total = 0
    for i, cap in enumerate(caps):
        if cap >= c:
            total += _count_fillings(caps[:i] + (cap - c,) + caps[i + 1:], rest)
    return total


def permutation_character(lam, rho) -> int:
    """Number of tabloids of shape lam fixed by a permutation of type rho."""
    return _count_fillings(tuple(lam), tuple(sorted(rho, reverse=True)))


def sn_character_table(n: int) -> dict[tuple, dict[tuple, int]]:
    """Exact S_n table {shape: {class: value}} from fixed-tabloid counts."""
    classes = list(partitions_of(n))
    weights = {rho: Fraction(1, centralizer_sn(rho)) for rho in classes}

    def inner(f, g):
        return sum(weights[rho] * f[rho] * g[rho] for rho in classes)

    chars: dict[tuple, dict[tuple, int]] = {}
    for lam in sorted(classes, reverse=True):  # lex-descending refines dominance
        f = {rho: Fraction(permutation_character(lam, rho)) for rho in classes}
        for mu, chi in chars.items():
            c = inner(f, chi)
            assert c.denominator == 1
            if c:
                for rho in classes:
                    f[rho] -= c * chi[rho]
        assert inner(f, f) == 1, f"not irreducible at {lam}"
        chars[lam] = {rho: int(f[rho]) for rho in classes}
    return chars
