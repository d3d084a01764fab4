"""Exact integer combinatorics over k-subsets of {1..n}.

Everything here is exact: Python's arbitrary-precision integers are used
throughout, so no count can overflow or lose precision.  Subsets are
strictly ascending tuples of 1-based elements, and lexicographic order on
those tuples is the canonical order used by every other module.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator


def binomial(n: int, k: int) -> int:
    """Number of k-subsets of an n-set; 0 when k > n."""
    return math.comb(n, k)


def mce(n: int, p: int, s: int) -> int:
    """Multiplicity of p-draws from {1..n} sharing s fixed common elements.

    Equals binomial(n - s, p - s): fix the s shared elements and count the
    ways to complete the draw.
    """
    if not 1 < s <= p <= n:
        raise ValueError(f"require 1 < s <= p <= n, got n={n}, p={p}, s={s}")
    return math.comb(n - s, p - s)


def hit_count(n: int, p: int, t: int) -> int:
    """Number of p-subsets of {1..n} meeting a fixed p-subset in exactly t elements.

    Summed over t = 0..p this exhausts all binomial(n, p) subsets.
    """
    if not 0 <= t <= p <= n:
        raise ValueError(f"require 0 <= t <= p <= n, got n={n}, p={p}, t={t}")
    return math.comb(p, t) * math.comb(n - p, p - t)


def ksubsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every k-subset of {1..n} exactly once, in lexicographic order."""
    if not 1 <= k <= n:
        raise ValueError(f"require 1 <= k <= n, got n={n}, k={k}")
    return iter(itertools.combinations(range(1, n + 1), k))


def _check_block(block: tuple[int, ...], n: int) -> None:
    if not block:
        raise ValueError("empty block")
    prev = 0
    for e in block:
        if not prev < e <= n:
            raise ValueError(f"block {block} is not strictly ascending within [1, {n}]")
        prev = e


def rank(block: tuple[int, ...], n: int) -> int:
    """Lexicographic index of a k-subset among all k-subsets of {1..n}."""
    _check_block(block, n)
    k = len(block)
    r = 0
    prev = 0
    for i, c in enumerate(block):
        for v in range(prev + 1, c):
            r += math.comb(n - v, k - i - 1)
        prev = c
    return r


def unrank(r: int, n: int, k: int) -> tuple[int, ...]:
    """Inverse of rank: the k-subset of {1..n} at lexicographic index r."""
    if not 1 <= k <= n:
        raise ValueError(f"require 1 <= k <= n, got n={n}, k={k}")
    if not 0 <= r < math.comb(n, k):
        raise ValueError(f"rank {r} out of range for {k}-subsets of {{1..{n}}}")
    out = []
    prev = 0
    rem = r
    for i in range(k):
        v = prev + 1
        while (skip := math.comb(n - v, k - i - 1)) <= rem:
            rem -= skip
            v += 1
        out.append(v)
        prev = v
    return tuple(out)
