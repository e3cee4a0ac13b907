"""Closed formulas for hook constituents of higher Lie characters.

Everything is driven by the Witt coefficients f_0..f_r of a part size r:
the column-plus-row multiplicities e_i come from a sum over restricted
partitions with parity-twisted binomials, the hook multiplicities m_k are
their partial alternating sums, and the certificate d_k decides whether
the class carries a cyclic descent extension.  Each quantity is computed
along two independent routes and cross-checked where feasible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional, Tuple, Union

from . import characters
from .combinat import centralizer_order, divisors, is_partition, is_squarefree, moebius
from .series import BiSeries, IntPolynomial, binomial_power, reciprocal_power, witt_transform

__all__ = [
    "NoExtension",
    "HookProfile",
    "SquarefreeReport",
    "SquareQuotient",
    "witt_coeffs",
    "column_row_mults",
    "hook_mults",
    "hook_poly",
    "column_row_series",
    "extension_certificate",
    "squarefree_criterion",
    "quotient_series",
    "hook_profile",
    "subset_sum_count",
]

# generic-polynomial cross-check of the Witt coefficient formula is gated
# to keep large-r scans inside their time budget
_POLY_CHECK_MAX = 64

# rectangular classes small enough to cross-check against the character oracle
_ORACLE_CHECK_MAX = 100_000


@dataclass(frozen=True)
class NoExtension:
    """Why a class admits no cyclic descent extension.

    reason is "alternating-sum-nonzero" (the full alternating sum of the
    hook multiplicities is not zero) or "negative-partial-sum" (some
    partial alternating sum d_k is negative, with k in `index`).
    """

    reason: str
    index: Optional[int] = None


@lru_cache(maxsize=None)
def witt_coeffs(r: int) -> Tuple[int, ...]:
    """Coefficients f_0..f_r with f_j = (1/r) * sum over d | gcd(r, j)
    of moebius(d) * (-1)^(j + j/d) * binom(r/d, j/d).

    Equivalently the coefficients of the Witt transform of 1-x taken at
    -x; for r <= 64 that second, generic-polynomial route is computed
    too and any mismatch aborts.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    f = []
    for j in range(r + 1):
        total = 0
        for d in divisors(math.gcd(r, j) if j else r):
            md = moebius(d)
            if md == 0:
                continue
            q = j // d
            term = md * math.comb(r // d, q)
            total += -term if (j + q) % 2 else term
        if total % r:
            raise ArithmeticError(f"Witt coefficient f_{j} not integral at r={r}")
        f.append(total // r)
    if f[1] != 1:
        raise ArithmeticError(f"f_1 = {f[1]} != 1 at r={r}")
    if f[0] != (1 if r == 1 else 0):
        raise ArithmeticError(f"f_0 = {f[0]} wrong at r={r}")
    if r <= _POLY_CHECK_MAX:
        check = witt_transform(IntPolynomial((1, -1)), r).reflect()
        if check != IntPolynomial(f):
            raise ArithmeticError(f"Witt coefficient routes disagree at r={r}")
    return tuple(f)


def _parity_binomials(f: Tuple[int, ...], s: int) -> list:
    """B[j][k] = binom(f_j + (k-1)[j even], k): the number of ways to use
    the part size j exactly k times (even sizes repeat with multiplicity)."""
    table = []
    for j, fj in enumerate(f):
        bump = 1 if j % 2 == 0 else 0
        # k = 0 is the empty choice (1 way) even when f_j = 0 would make
        # the multichoose upper index negative.
        table.append(
            [1] + [math.comb(fj + (k - 1) * bump, k) for k in range(1, s + 1)]
        )
    return table


@lru_cache(maxsize=None)
def column_row_mults(r: int, s: int) -> Tuple[int, ...]:
    """Multiplicities e_0..e_(rs) of the column-plus-row characters
    chi^((1^k) + (n-k)) in the higher Lie character of the class (r^s).

    Sum over partitions gamma of i into exactly s parts from {0..r} of
    the product of parity-twisted binomials; parts equal to 0 only ever
    contribute when r = 1 (otherwise binom(k_0 - 1, k_0) = 0), so the
    enumeration pads with zeros once instead of generating them.
    """
    if r < 1 or s < 1:
        raise ValueError("need r >= 1 and s >= 1")
    f = witt_coeffs(r)
    B = _parity_binomials(f, s)
    B0 = B[0]
    e = [0] * (r * s + 1)

    def rec(vmax: int, slots: int, weight: int, prod: int) -> None:
        z = B0[slots]
        if z:
            e[weight] += prod * z
        for v in range(vmax, 0, -1):
            Bv = B[v]
            w = weight
            for k in range(1, slots + 1):
                w += v
                p = prod * Bv[k]
                if p:
                    if k == slots:
                        e[w] += p
                    else:
                        rec(v - 1, slots - k, w, p)

    rec(r, s, 0, 1)
    return tuple(e)


@lru_cache(maxsize=None)
def hook_mults(r: int, s: int) -> Tuple[int, ...]:
    """Hook multiplicities m_0..m_(rs-1) of the class (r^s): partial
    alternating sums of the column-plus-row multiplicities.

    A negative partial sum or a nonzero full alternating sum would
    contradict character positivity and raises immediately.
    """
    e = column_row_mults(r, s)
    n = r * s
    m = []
    prev = 0
    for k in range(n):
        cur = e[k] - prev
        if cur < 0:
            raise ArithmeticError(f"negative hook multiplicity m_{k} at (r,s)=({r},{s})")
        m.append(cur)
        prev = cur
    if e[n] - prev != 0:
        raise ArithmeticError(f"alternating sum of e is nonzero at (r,s)=({r},{s})")
    return tuple(m)


def hook_poly(r: int, s: int) -> IntPolynomial:
    """N_(r,s)(x) = sum_k m_k x^k."""
    return IntPolynomial(hook_mults(r, s))


def column_row_series(r: int, s_max: int) -> BiSeries:
    """Generating series: the coefficient of x^i y^s is e_i for (r^s).

    Product over part sizes j of (1 - (-1)^j x^j y) to the power
    (-1)^(j+1) f_j, truncated after y^s_max and exact in x.
    """
    if r < 1 or s_max < 0:
        raise ValueError("need r >= 1 and s_max >= 0")
    f = witt_coeffs(r)
    acc = BiSeries.one(s_max)
    for j, fj in enumerate(f):
        if fj == 0:
            continue
        t = BiSeries.monomial(s_max, x_deg=j)
        factor = binomial_power(t, fj) if j % 2 else reciprocal_power(t, fj)
        acc = acc * factor
    return acc


def _rectangle(mu: tuple) -> Optional[Tuple[int, int]]:
    if mu and all(p == mu[0] for p in mu):
        return mu[0], len(mu)
    return None


def _certificate_from_mults(m: Tuple[int, ...]) -> Union[Tuple[int, ...], NoExtension]:
    n = len(m)
    d = []
    prev = 0
    for k in range(n):
        cur = m[k] - prev
        if k == n - 1:
            if cur != 0:
                return NoExtension("alternating-sum-nonzero", n - 1)
        else:
            if cur < 0:
                return NoExtension("negative-partial-sum", k)
            d.append(cur)
        prev = cur
    return tuple(d)


def extension_certificate(
    mu, guard: int = characters.DEFAULT_GUARD
) -> Union[Tuple[int, ...], NoExtension]:
    """Certificate (d_0, ..., d_(n-2)) for a cyclic descent extension on
    the class mu, or NoExtension naming the first violated condition.

    d_k is the k-th partial alternating sum of the hook multiplicities;
    an extension exists iff every d_k is non-negative and the full
    alternating sum d_(n-1) vanishes.  Rectangular classes go through
    the closed formula (cross-checked against the character oracle when
    the centralizer is small enough); everything else through the oracle.
    """
    mu = tuple(mu)
    if not is_partition(mu) or not mu:
        raise ValueError(f"not a partition: {mu!r}")
    rect = _rectangle(mu)
    if rect is not None:
        m = hook_mults(*rect)
        if centralizer_order(mu) <= min(_ORACLE_CHECK_MAX, guard):
            oracle = characters.hook_mults_oracle(mu, guard)
            if oracle != m:
                raise ArithmeticError(
                    f"hook multiplicity routes disagree on {mu}: {m} vs {oracle}"
                )
    else:
        m = characters.hook_mults_oracle(mu, guard)
    return _certificate_from_mults(m)


@dataclass(frozen=True)
class SquarefreeReport:
    """Divisibility of each y-coefficient of the generating series by
    (1+x)^2, plus the first-moment identity of the Witt coefficients."""

    r: int
    s_max: int
    squarefree: bool
    divisible: Tuple[bool, ...]  # index s-1 holds the verdict for y^s
    moment: int

    @property
    def dichotomy_holds(self) -> bool:
        return all(div == (not self.squarefree) for div in self.divisible)


def squarefree_criterion(r: int, s_max: int) -> SquarefreeReport:
    """Check (1+x)^2 | [y^s] of the generating series for s <= s_max and
    the moment identity sum_j (-1)^(j+1) j f_j == moebius(r)."""
    if r < 1 or s_max < 1:
        raise ValueError("need r >= 1 and s_max >= 1")
    f = witt_coeffs(r)
    moment = sum((j * fj if j % 2 else -j * fj) for j, fj in enumerate(f))
    if moment != moebius(r):
        raise ArithmeticError(f"moment identity fails at r={r}: {moment}")
    series = column_row_series(r, s_max)
    square = IntPolynomial((1, 2, 1))
    divisible = tuple(
        series.coeff(s).divide_exact(square) is not None for s in range(1, s_max + 1)
    )
    return SquarefreeReport(r, s_max, is_squarefree(r), divisible, moment)


@dataclass(frozen=True)
class SquareQuotient:
    """(series - 1) / (1+x)^2 and the polynomial quotient of the Witt
    polynomial by (1+x)^2, both with non-negative coefficients."""

    series: BiSeries
    poly: IntPolynomial


def quotient_series(r: int, s_max: int) -> Optional[SquareQuotient]:
    """Exact quotient of the generating series minus 1 by (1+x)^2, or
    None for square-free r (where no such quotient exists).

    Both quotients must come out with non-negative coefficients; a
    negative coefficient is a bug signal and raises.
    """
    if r < 1 or s_max < 1:
        raise ValueError("need r >= 1 and s_max >= 1")
    if is_squarefree(r):
        return None
    square = IntPolynomial((1, 2, 1))
    series = column_row_series(r, s_max)
    polys = [IntPolynomial()]  # [y^0](series - 1) = 0
    for s in range(1, s_max + 1):
        q = series.coeff(s).divide_exact(square)
        if q is None:
            raise ArithmeticError(f"(1+x)^2 does not divide [y^{s}] at r={r}")
        if any(c < 0 for c in q.coeffs):
            raise ArithmeticError(f"negative quotient coefficient at r={r}, s={s}")
        polys.append(q)
    fpoly = IntPolynomial(witt_coeffs(r))
    g = fpoly.divide_exact(square)
    if g is None:
        raise ArithmeticError(f"(1+x)^2 does not divide the Witt polynomial at r={r}")
    if any(c < 0 for c in g.coeffs):
        raise ArithmeticError(f"negative Witt quotient coefficient at r={r}")
    return SquareQuotient(BiSeries(s_max, polys), g)


@dataclass(frozen=True)
class HookProfile:
    """Everything the closed formulas say about the class (r^s)."""

    r: int
    s: int
    n: int
    witt: Tuple[int, ...]
    column_row: Tuple[int, ...]
    hooks: Tuple[int, ...]
    certificate: Union[Tuple[int, ...], NoExtension]


def hook_profile(r: int, s: int) -> HookProfile:
    f = witt_coeffs(r)
    e = column_row_mults(r, s)
    m = hook_mults(r, s)
    for k in range(r * s):
        expected = m[k] + (m[k - 1] if k else 0)
        if e[k] != expected:
            raise ArithmeticError(f"e/m consistency fails at k={k}, (r,s)=({r},{s})")
    return HookProfile(r, s, r * s, f, e, m, extension_certificate((r,) * s))


def subset_sum_count(n: int, k: int, include_n: bool = False) -> int:
    """Count of k-subsets of {1..n-1} (or {1..n} when include_n) whose
    element sum is 1 modulo n."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    top = n + 1 if include_n else n
    return sum(
        1 for c in combinations(range(1, top), k) if sum(c) % n == 1 % n
    )
