"""Cyclic descent extensions on conjugacy classes.

A cyclic extension assigns to every pi in the class a set cDes(pi) with
cDes(pi) intersect [n-1] = Des(pi), together with a bijection p of the
class satisfying cDes(p(pi)) = sh(cDes(pi)), such that no cDes is empty
or all of [n].  Fiber sizes c_J = #{pi : cDes(pi) = J} are pinned down
by the descent distribution: c_D + c_(D u {n}) must match the Des fiber
of D, c is constant on rotation orbits, and c_() = c_([n]) = 0.  The
solver propagates those constraints from the empty set across all 2^n
subsets (the constraint graph is connected: rotating any set moves an
element into position n and pairing then drops it, so induction reaches
the empty set), which also makes the solution unique when it exists.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union

from . import characters
from .combinat import (
    cellini_descent_set,
    class_size,
    conjugacy_class,
    descent_set,
    full_mask,
    is_partition,
    kostka_number,
    rotate_subset,
    subset_elements,
    syt_descent_counts,
)

__all__ = [
    "DescentDistribution",
    "Infeasible",
    "FiberSolution",
    "CyclicExtensionSolution",
    "descent_distribution",
    "solve_extension",
    "construct_extension",
    "check_axioms",
    "cellini_closed",
    "cyclic_composition",
    "affine_ribbon_fiber",
    "straight_ribbon_fiber",
    "extension_records",
]

DEFAULT_N_LIMIT = 10


@dataclass(frozen=True)
class DescentDistribution:
    """Des-fiber sizes of a conjugacy class, keyed by subset mask."""

    n: int
    fibers: Dict[int, int]

    def count(self, mask: int) -> int:
        return self.fibers.get(mask, 0)


@dataclass(frozen=True)
class Infeasible:
    """No cyclic extension exists; reason names the violated constraint."""

    reason: str
    subset: Optional[Tuple[int, ...]] = None
    note: str = ""


@dataclass(frozen=True)
class FiberSolution:
    """The unique consistent cDes-fiber sizes c_J (nonzero entries only)."""

    n: int
    counts: Dict[int, int]

    def count(self, mask: int) -> int:
        return self.counts.get(mask, 0)


@dataclass(frozen=True)
class CyclicExtensionSolution:
    """An explicit cyclic extension: fiber sizes, the cDes of every class
    element, and the rotation-equivariant bijection p."""

    mu: Tuple[int, ...]
    n: int
    fibers: FiberSolution
    cdes: Dict[Tuple[int, ...], int]
    p_map: Dict[Tuple[int, ...], Tuple[int, ...]]


def _check_class(mu, n_limit: int) -> Tuple[int, ...]:
    mu = tuple(mu)
    if not is_partition(mu) or not mu:
        raise ValueError(f"not a partition: {mu!r}")
    n = sum(mu)
    if n > n_limit:
        raise ValueError(f"class of S_{n} exceeds the enumeration limit {n_limit}")
    return mu


def descent_distribution(mu, n_limit: int = DEFAULT_N_LIMIT) -> DescentDistribution:
    """Des-fiber sizes over the full conjugacy class of mu."""
    mu = _check_class(mu, n_limit)
    fibers: Dict[int, int] = {}
    total = 0
    for pi in conjugacy_class(mu):
        d = descent_set(pi)
        fibers[d] = fibers.get(d, 0) + 1
        total += 1
    if total != class_size(mu):
        raise ArithmeticError(f"class size mismatch for {mu}")
    return DescentDistribution(sum(mu), fibers)


def solve_extension(dist: DescentDistribution) -> Union[FiberSolution, Infeasible]:
    """Unique cDes-fiber sizes consistent with the distribution, or
    Infeasible with the violated constraint.

    Propagates c_() = 0 through pairing (c_D + c_(D u {n}) = Des fiber
    of D) and rotation-orbit equality over all subsets of [n].
    """
    n = dist.n
    top = 1 << (n - 1)
    full = full_mask(n)
    c = {0: 0}
    stack = [0]
    while stack:
        j = stack.pop()
        v = c[j]
        rot = rotate_subset(j, n)
        if j & top:
            partner, pv = j ^ top, dist.count(j ^ top) - v
        else:
            partner, pv = j | top, dist.count(j) - v
        for k, kv in ((rot, v), (partner, pv)):
            known = c.get(k)
            if known is None:
                c[k] = kv
                stack.append(k)
            elif known != kv:
                return Infeasible("conflicting-counts", subset_elements(k))
    if len(c) != full + 1:
        raise AssertionError("constraint graph failed to reach every subset")
    if c[full] != 0:
        return Infeasible("nonzero-full-set", subset_elements(full))
    for j in range(full + 1):
        if c[j] < 0:
            return Infeasible("negative-count", subset_elements(j))
    return FiberSolution(n, {j: v for j, v in c.items() if v})


def _escher_note(mu: Tuple[int, ...]) -> str:
    if all(p == mu[0] for p in mu) and mu[0] in (1, 2) and sum(mu) > 1:
        return (
            "Escher-type degeneration: this class only supports a cyclic "
            "descent set that is empty or all of [n]"
        )
    return ""


def construct_extension(
    mu, n_limit: int = DEFAULT_N_LIMIT
) -> Union[CyclicExtensionSolution, Infeasible]:
    """Explicit cyclic extension of Des on the class of mu, or Infeasible.

    Deterministic rule: within each Des-fiber in lexicographic order, the
    first c_(D u {n}) permutations get D u {n} and the rest keep D; p
    sends the k-th element of the fiber of J to the k-th element of the
    fiber of sh(J).  All axioms are verified exhaustively before return.
    """
    mu = _check_class(mu, n_limit)
    n = sum(mu)
    dist = descent_distribution(mu, n_limit)
    sol = solve_extension(dist)
    if isinstance(sol, Infeasible):
        note = _escher_note(mu)
        return Infeasible(sol.reason, sol.subset, note) if note else sol
    top = 1 << (n - 1)
    by_des: Dict[int, list] = {}
    for pi in conjugacy_class(mu):  # lexicographic
        by_des.setdefault(descent_set(pi), []).append(pi)
    cdes: Dict[Tuple[int, ...], int] = {}
    by_cdes: Dict[int, list] = {}
    for d, elems in by_des.items():
        head = sol.count(d | top)
        for idx, pi in enumerate(elems):
            j = (d | top) if idx < head else d
            cdes[pi] = j
            by_cdes.setdefault(j, []).append(pi)
    p_map: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
    seen = set()
    for j0 in sorted(by_cdes):
        if j0 in seen:
            continue
        orbit = [j0]
        seen.add(j0)
        nxt = rotate_subset(j0, n)
        while nxt != j0:
            orbit.append(nxt)
            seen.add(nxt)
            nxt = rotate_subset(nxt, n)
        for a, b in zip(orbit, orbit[1:] + orbit[:1]):
            for src, dst in zip(by_cdes[a], by_cdes.get(b, ())):
                p_map[src] = dst
    result = CyclicExtensionSolution(mu, n, sol, cdes, p_map)
    checks = check_axioms(result)
    if not all(checks.values()):
        failed = [name for name, ok in checks.items() if not ok]
        raise AssertionError(f"constructed extension violates {failed} on {mu}")
    return result


def check_axioms(sol: CyclicExtensionSolution) -> Dict[str, bool]:
    """Exhaustive verification of a constructed extension."""
    n = sol.n
    top = 1 << (n - 1)
    full = full_mask(n)
    extension = all(
        (j & ~top) == descent_set(pi) for pi, j in sol.cdes.items()
    )
    non_escher = all(0 < j < full for j in sol.cdes.values())
    bijection = set(sol.p_map) == set(sol.cdes) and set(sol.p_map.values()) == set(
        sol.cdes
    )
    equivariance = bijection and all(
        sol.cdes[img] == rotate_subset(sol.cdes[src], n)
        for src, img in sol.p_map.items()
    )
    observed = Counter(sol.cdes.values())
    fiber_counts = dict(observed) == sol.fibers.counts
    return {
        "extension": extension,
        "equivariance": equivariance,
        "non-escher": non_escher,
        "fiber-counts": fiber_counts,
    }


def cellini_closed(mu, n_limit: int = DEFAULT_N_LIMIT) -> bool:
    """Whether the multiset of Cellini cyclic descent sets of the class
    is invariant under rotation."""
    mu = _check_class(mu, n_limit)
    n = sum(mu)
    counts = Counter(cellini_descent_set(pi) for pi in conjugacy_class(mu))
    rotated = Counter()
    for mask, k in counts.items():
        rotated[rotate_subset(mask, n)] += k
    return counts == rotated


def cyclic_composition(n: int, mask: int) -> Tuple[int, ...]:
    """Cyclic composition of n attached to a nonempty subset {j_1<...<j_t}:
    (j_2-j_1, ..., j_t-j_(t-1), j_1+n-j_t); a singleton gives (n)."""
    elems = subset_elements(mask)
    if not elems or elems[-1] > n:
        raise ValueError(f"need a nonempty subset of [{n}]")
    if len(elems) == 1:
        return (n,)
    diffs = [b - a for a, b in zip(elems, elems[1:])]
    diffs.append(elems[0] + n - elems[-1])
    return tuple(diffs)


def affine_ribbon_fiber(mu, mask: int, schur_mults: Dict[tuple, int]) -> int:
    """Size of {pi in the class : cDes(pi) = J} predicted from the Schur
    expansion, via inclusion-exclusion of cyclic ribbon characters:
    sum over nonempty I inside J of (-1)^(|J|-|I|) times the Kostka
    pairing of the expansion with the cyclic composition of I.

    J must be a proper nonempty subset of [n].
    """
    mu = tuple(mu)
    n = sum(mu)
    if not 0 < mask < full_mask(n):
        raise ValueError("J must be a proper nonempty subset of [n]")
    jbits = bin(mask).count("1")
    total = 0
    sub = mask
    while sub:
        beta = cyclic_composition(n, sub)
        inner = sum(
            m * kostka_number(lam, beta) for lam, m in schur_mults.items() if m
        )
        sign = -1 if (jbits - bin(sub).count("1")) % 2 else 1
        total += sign * inner
        sub = (sub - 1) & mask
    return total


def straight_ribbon_fiber(
    mu, mask: int, guard: int = characters.DEFAULT_GUARD
) -> int:
    """Size of {pi in the class : Des(pi) = J} predicted from the Schur
    expansion: sum over lam of the multiplicity of chi^lam times the
    number of standard tableaux of shape lam with descent set J.

    J must be a subset of [n-1].
    """
    mu = tuple(mu)
    n = sum(mu)
    if mask < 0 or mask >> (n - 1):
        raise ValueError("J must be a subset of [n-1]")
    mults = characters.schur_multiplicities(mu, guard)
    return sum(
        m * syt_descent_counts(lam).get(mask, 0) for lam, m in mults.items() if m
    )


def extension_records(sol: CyclicExtensionSolution) -> dict:
    """Serializable dump of a constructed extension: one record per class
    element in lexicographic order plus the fiber size table."""
    perms = sorted(sol.cdes)
    return {
        "mu": list(sol.mu),
        "n": sol.n,
        "fibers": [
            {"subset": list(subset_elements(j)), "count": c}
            for j, c in sorted(sol.fibers.counts.items())
        ],
        "elements": [
            {
                "one_line": list(pi),
                "des": list(subset_elements(descent_set(pi))),
                "cdes": list(subset_elements(sol.cdes[pi])),
                "p_image": list(sol.p_map[pi]),
            }
            for pi in perms
        ],
    }
