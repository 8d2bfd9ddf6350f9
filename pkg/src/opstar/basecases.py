"""Uniform base cases with classical direct constructions."""

from __future__ import annotations

from .core import Decomposition, TwoFactor
from .errors import BadInstance


def round_robin_digons(n: int) -> Decomposition:
    """OP*(2^(n/2)): each 1-factor of the circle-method round robin becomes a digon factor."""
    if n < 2 or n % 2:
        raise BadInstance(f"n={n} must be even and positive")
    N = n - 1
    factors = []
    for i in range(N):
        pairs = [(i, N)] + [((i - j) % N, (i + j) % N) for j in range(1, n // 2)]
        factors.append(TwoFactor(tuple(pairs)))
    return Decomposition(tuple(factors), n)


def walecki_cycles(n: int) -> list[tuple]:
    """(n-1)/2 edge-disjoint Hamilton cycles of K_n for odd n, zigzagging around Z_{n-1}."""
    if n < 3 or n % 2 == 0:
        raise BadInstance(f"n={n} must be odd and at least 3")
    N = n - 1
    out = []
    for i in range(N // 2):
        zig = [i]
        for j in range(1, N // 2 + 1):
            zig.append((i + j) % N)
            if len(zig) < N:
                zig.append((i - j) % N)
        out.append(tuple([N] + zig))
    return out


def doubled_walecki(n: int) -> Decomposition:
    """OP*(n) for odd n: every undirected Hamilton cycle taken in both directions."""
    factors = []
    for cyc in walecki_cycles(n):
        factors.append(TwoFactor((cyc,)))
        factors.append(TwoFactor(((cyc[0],) + cyc[:0:-1],)))
    return Decomposition(tuple(factors), n)
