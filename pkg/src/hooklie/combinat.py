"""Partitions, permutations by cycle type, tableaux, descents, subsets.

Conventions used across the package:

* partitions are weakly decreasing tuples of positive ints,
* permutations are tuples in one-line notation over {1, ..., n},
* subsets of [n] are n-bit masks, bit i-1 standing for the element i,
  so rotation i -> i+1 (mod n) is a shift with wraparound and all
  serialized output lists elements in increasing order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations as _one_line_perms
from typing import Iterator

__all__ = [
    "moebius",
    "is_squarefree",
    "divisors",
    "is_partition",
    "partitions",
    "partition_list",
    "centralizer_order",
    "class_size",
    "restricted_partitions",
    "cycle_type",
    "conjugacy_class",
    "descent_set",
    "cellini_descent_set",
    "full_mask",
    "rotate_subset",
    "subset_elements",
    "mask_from_elements",
    "Tableau",
    "ColumnRowShape",
    "standard_tableaux",
    "syt_descent_counts",
    "kostka_number",
]


# -- number theory -----------------------------------------------------------


@lru_cache(maxsize=None)
def _factor(d: int) -> tuple[tuple[int, int], ...]:
    if d < 1:
        raise ValueError(f"positive integer required, got {d}")
    out = []
    m = d
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def moebius(d: int) -> int:
    """Moebius function: 0 on non-squarefree d, else (-1)^(#prime factors)."""
    fac = _factor(d)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def is_squarefree(d: int) -> bool:
    return all(e == 1 for _, e in _factor(d))


@lru_cache(maxsize=None)
def divisors(d: int) -> tuple[int, ...]:
    """All positive divisors of d, increasing."""
    out = [1]
    for p, e in _factor(d):
        out = [a * p**k for a in out for k in range(e + 1)]
    return tuple(sorted(out))


# -- partitions --------------------------------------------------------------


def is_partition(mu) -> bool:
    t = tuple(mu)
    return all(isinstance(p, int) for p in t) and all(
        t[i] >= t[i + 1] for i in range(len(t) - 1)
    ) and (not t or t[-1] >= 1)


def _check_partition(mu) -> tuple[int, ...]:
    t = tuple(mu)
    if not is_partition(t):
        raise ValueError(f"not a partition: {mu!r}")
    return t


@lru_cache(maxsize=None)
def partition_list(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n, decreasing lexicographic, (n) first."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = []

    def rec(remaining: int, cap: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    return iter(partition_list(n))


def centralizer_order(mu) -> int:
    """prod_i i^(k_i) k_i! over part multiplicities k_i of mu."""
    mu = _check_partition(mu)
    z = 1
    i = 0
    while i < len(mu):
        j = i
        while j < len(mu) and mu[j] == mu[i]:
            j += 1
        k = j - i
        z *= mu[i] ** k * math.factorial(k)
        i = j
    return z


def class_size(mu) -> int:
    mu = _check_partition(mu)
    return math.factorial(sum(mu)) // centralizer_order(mu)


def restricted_partitions(i: int, r: int, s: int) -> Iterator[tuple[int, ...]]:
    """Partitions of i into at most s parts, each at most r.

    Yields lazily, in increasing lexicographic order, as weakly decreasing
    tuples of length exactly s (padded with zeros).
    """
    if i < 0 or r < 0 or s < 0:
        raise ValueError("arguments must be non-negative")

    def rec(remaining: int, slots: int, cap: int, acc: list[int]):
        if slots == 0:
            if remaining == 0:
                yield tuple(acc)
            return
        lo = -(-remaining // slots)  # smallest feasible leading part
        for v in range(lo, min(cap, remaining) + 1):
            acc.append(v)
            yield from rec(remaining - v, slots - 1, v, acc)
            acc.pop()

    return rec(i, s, r, [])


# -- permutations ------------------------------------------------------------


def cycle_type(pi) -> tuple[int, ...]:
    """Cycle type of a one-line permutation, as a partition."""
    n = len(pi)
    seen = bytearray(n)
    parts = []
    for a in range(n):
        if seen[a]:
            continue
        ln = 0
        b = a
        while not seen[b]:
            seen[b] = 1
            b = pi[b] - 1
            ln += 1
        parts.append(ln)
    parts.sort(reverse=True)
    return tuple(parts)


def conjugacy_class(mu) -> Iterator[tuple[int, ...]]:
    """All permutations of cycle type mu, lexicographic in one-line notation."""
    mu = _check_partition(mu)
    if not mu:
        raise ValueError("mu must be a partition of n >= 1")
    n = sum(mu)
    for pi in _one_line_perms(range(1, n + 1)):
        if cycle_type(pi) == mu:
            yield pi


def descent_set(pi) -> int:
    """Mask of {i in [n-1] : pi_i > pi_(i+1)}."""
    mask = 0
    for i in range(len(pi) - 1):
        if pi[i] > pi[i + 1]:
            mask |= 1 << i
    return mask


def cellini_descent_set(pi) -> int:
    """Cellini's cyclic descent set: descents of pi read cyclically.

    Position n is a descent iff pi_n > pi_1, so the identity gets {n}
    for n > 1 and the result is never empty nor all of [n] when n > 1.
    """
    n = len(pi)
    mask = descent_set(pi)
    if n and pi[n - 1] > pi[0]:
        mask |= 1 << (n - 1)
    return mask


# -- subsets as bitmasks -----------------------------------------------------


def full_mask(n: int) -> int:
    return (1 << n) - 1


def rotate_subset(mask: int, n: int) -> int:
    """Image of a subset of [n] under i -> i+1 (mod n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if mask < 0 or mask >> n:
        raise ValueError(f"mask {mask} is not a subset of [{n}]")
    return ((mask << 1) | (mask >> (n - 1))) & ((1 << n) - 1)


def subset_elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_from_elements(elems) -> int:
    mask = 0
    for e in elems:
        if e < 1:
            raise ValueError(f"elements must be >= 1, got {e}")
        mask |= 1 << (e - 1)
    return mask


# -- tableaux ----------------------------------------------------------------


@dataclass(frozen=True)
class ColumnRowShape:
    """Disconnected shape: a column of `column` cells strictly below and
    left of a row of `row` cells.  The only skew-like family supported."""

    column: int
    row: int

    def __post_init__(self):
        if self.column < 0 or self.row < 1:
            raise ValueError("need column >= 0 and row >= 1")

    @property
    def size(self) -> int:
        return self.column + self.row


@dataclass(frozen=True)
class Tableau:
    """Rows of entries, top row first; lower rows have larger index."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def descent_set(self) -> int:
        """Mask of {i : i+1 sits in a strictly lower row than i}."""
        row_of = {}
        for ri, row in enumerate(self.rows):
            for v in row:
                row_of[v] = ri
        mask = 0
        for v in range(1, self.size):
            if row_of[v + 1] > row_of[v]:
                mask |= 1 << (v - 1)
        return mask


def _straight_syt(shape: tuple[int, ...]) -> Iterator[Tableau]:
    n = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def rec(v: int) -> Iterator[Tableau]:
        if v > n:
            yield Tableau(tuple(tuple(r) for r in rows))
            return
        for idx in range(len(shape)):
            filled = len(rows[idx])
            if filled < shape[idx] and (idx == 0 or len(rows[idx - 1]) > filled):
                rows[idx].append(v)
                yield from rec(v + 1)
                rows[idx].pop()

    return rec(1)


def _column_row_syt(shape: ColumnRowShape) -> Iterator[Tableau]:
    n = shape.size
    universe = range(1, n + 1)
    for col in combinations(universe, shape.column):
        taken = set(col)
        top = tuple(v for v in universe if v not in taken)
        yield Tableau((top,) + tuple((c,) for c in col))


def standard_tableaux(shape) -> Iterator[Tableau]:
    """Standard Young tableaux of a straight shape, or of a column-plus-row
    direct sum.  General skew shapes are rejected."""
    if isinstance(shape, ColumnRowShape):
        return _column_row_syt(shape)
    if isinstance(shape, tuple):
        return _straight_syt(_check_partition(shape))
    raise TypeError(
        "shape must be a partition tuple or ColumnRowShape; "
        "general skew shapes are not supported"
    )


@lru_cache(maxsize=None)
def syt_descent_counts(shape) -> dict:
    """Number of standard tableaux of the shape per descent-set mask."""
    counts: dict[int, int] = {}
    for t in standard_tableaux(shape):
        d = t.descent_set()
        counts[d] = counts.get(d, 0) + 1
    return counts


# -- Kostka numbers ----------------------------------------------------------


def _strips_below(shape: tuple[int, ...], t: int) -> Iterator[tuple[int, ...]]:
    # partitions nu inside shape with shape/nu a horizontal strip of size t
    ell = len(shape)

    def rec(i: int, remaining: int, acc: list[int]):
        if i == ell:
            if remaining == 0:
                while acc and acc[-1] == 0:
                    acc = acc[:-1]
                yield tuple(acc)
            return
        lo = shape[i + 1] if i + 1 < ell else 0
        hi = shape[i]
        for keep in range(max(lo, hi - remaining), hi + 1):
            acc.append(keep)
            yield from rec(i + 1, remaining - (hi - keep), acc)
            acc.pop()

    return rec(0, t, [])


@lru_cache(maxsize=None)
def _kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not shape else 0
    t = content[-1]
    rest = content[:-1]
    if t == 0:
        return _kostka(shape, rest)
    if t > sum(shape):
        return 0
    return sum(_kostka(nu, rest) for nu in _strips_below(shape, t))


def kostka_number(shape, content) -> int:
    """Count of semistandard tableaux of the given shape and content.

    The content may be any composition (order does not change the count);
    entries i appear content[i-1] times.
    """
    shape = _check_partition(shape)
    content = tuple(content)
    if any(not isinstance(c, int) or c < 0 for c in content):
        raise ValueError(f"content must be non-negative ints: {content!r}")
    if sum(shape) != sum(content):
        raise ValueError("shape and content must have equal size")
    return _kostka(shape, content)
