"""Tests for the closed hook-multiplicity formulas, their generating series,
the square-divisibility dichotomy, and extension certificates.

Every closed formula is compared against the independent character-theoretic
oracle on a range where the oracle stays cheap; frozen vectors were produced
by that oracle and spot-checked by hand.
"""

import pytest

from hooklie import lie
from hooklie.characters import hook_mults_oracle
from hooklie.combinat import is_squarefree, moebius
from hooklie.lie import (
    NoExtension,
    column_row_mults,
    column_row_series,
    extension_certificate,
    hook_mults,
    hook_poly,
    hook_profile,
    quotient_series,
    squarefree_criterion,
    subset_sum_count,
    witt_coeffs,
)
from hooklie.series import IntPolynomial, is_unimodal, witt_transform

ONE_PLUS_X = IntPolynomial((1, 1))
X = IntPolynomial((0, 1))


def xpow(k, c=1):
    return IntPolynomial([0] * k + [c])


# -- Witt coefficients -------------------------------------------------------


def test_witt_coeffs_factored_forms():
    # frozen closed forms for r = 1..6
    assert IntPolynomial(witt_coeffs(1)) == ONE_PLUS_X
    assert IntPolynomial(witt_coeffs(2)) == ONE_PLUS_X * X
    assert IntPolynomial(witt_coeffs(3)) == ONE_PLUS_X * X
    assert IntPolynomial(witt_coeffs(4)) == ONE_PLUS_X * ONE_PLUS_X * X
    assert IntPolynomial(witt_coeffs(5)) == ONE_PLUS_X * X * IntPolynomial((1, 1, 1))
    assert IntPolynomial(witt_coeffs(6)) == ONE_PLUS_X * X * IntPolynomial((1, 2, 1, 1))


def test_witt_coeffs_normalization():
    for r in range(1, 30):
        f = witt_coeffs(r)
        assert len(f) == r + 1
        assert f[1] == 1
        assert f[0] == (1 if r == 1 else 0)
        assert all(c >= 0 for c in f)


def test_witt_coeffs_match_transform_route():
    # same numbers via generic polynomial arithmetic on 1 - x
    for r in range(1, 41):
        direct = witt_coeffs(r)
        generic = witt_transform(IntPolynomial((1, -1)), r).reflect()
        assert IntPolynomial(direct) == generic


def test_witt_moment_identity():
    # alternating first moment equals the moebius function
    for r in range(1, 101):
        f = witt_coeffs(r)
        moment = sum((-1) ** (j + 1) * j * fj for j, fj in enumerate(f))
        assert moment == moebius(r)


def test_witt_coeffs_rejects_bad_input():
    with pytest.raises(ValueError):
        witt_coeffs(0)


# -- column-row and hook multiplicities --------------------------------------


def test_column_row_mults_hand_example():
    # r = 4, s = 2: two parts from {1..4} weighted by parity binomials
    assert column_row_mults(4, 2) == (0, 0, 0, 2, 4, 2, 0, 0, 0)


def test_hook_mults_hand_examples():
    assert hook_mults(4, 2) == (0, 0, 0, 2, 2, 0, 0, 0)
    assert hook_mults(2, 2) == (0, 0, 0, 1)
    assert hook_mults(1, 1) == (1,)
    assert hook_mults(2, 1) == (0, 1)
    assert hook_mults(3, 1) == (0, 1, 0)


def test_column_row_equals_adjacent_hook_sums():
    # e_k = m_k + m_(k-1) for 0 <= k <= n, with m_(-1) = m_n = 0
    for r in range(1, 9):
        for s in range(1, 4):
            e = column_row_mults(r, s)
            m = hook_mults(r, s)
            n = r * s
            for k in range(n + 1):
                left = m[k] if k < n else 0
                right = m[k - 1] if k >= 1 else 0
                assert e[k] == left + right


def test_hook_mults_match_character_oracle():
    # the closed formula against brute-force induced-character expansion
    for r in range(1, 11):
        for s in range(1, 11):
            if r * s > 8:
                continue
            mu = (r,) * s
            assert hook_mults(r, s) == hook_mults_oracle(mu)


def test_hook_mults_match_oracle_one_column():
    # (1^10): the induced character is trivial, so only m_0 = 1 survives;
    # this also exercises the largest centralizer the oracle ever sees here
    assert hook_mults(1, 10) == (1,) + (0,) * 9
    assert hook_mults_oracle((1,) * 10) == (1,) + (0,) * 9


def test_hook_mults_nonnegative_and_double_count():
    # every hook multiplicity appears in exactly two column-row sums, so
    # the totals satisfy sum(e) = 2 sum(m)
    for r in range(1, 13):
        for s in range(1, 5):
            m = hook_mults(r, s)
            assert all(v >= 0 for v in m)
            e = column_row_mults(r, s)
            assert sum(e) == 2 * sum(m)


# -- generating series -------------------------------------------------------


def test_series_matches_direct_multiplicities():
    for r in range(1, 13):
        s_max = 4
        series = column_row_series(r, s_max)
        for s in range(1, s_max + 1):
            coeffs = series.coeff(s).coeffs
            direct = column_row_mults(r, s)
            padded = coeffs + (0,) * (len(direct) - len(coeffs))
            assert padded == direct


def test_series_constant_term_is_one():
    for r in (1, 2, 5, 9):
        assert column_row_series(r, 3).coeff(0) == IntPolynomial((1,))


def test_series_r2_closed_form():
    # [y^s] = x^(2s-1) (1 + x) for the two-cycle column
    series = column_row_series(2, 5)
    for s in range(1, 6):
        assert series.coeff(s) == xpow(2 * s - 1) * ONE_PLUS_X


# -- extension certificates --------------------------------------------------


def test_certificate_single_cycle_of_four():
    assert extension_certificate((4,)) == (0, 1, 0)


def test_certificate_two_rows_of_two_fails():
    cert = extension_certificate((2, 2))
    assert isinstance(cert, NoExtension)
    assert cert.reason == "alternating-sum-nonzero"
    assert cert.index == 3


def test_certificate_squarefree_cycles_fail():
    for r in (1, 2, 3, 5, 6, 7):
        assert isinstance(extension_certificate((r,)), NoExtension)


def test_certificate_non_rectangular_class():
    assert extension_certificate((2, 1)) == (0, 1)
    cert = extension_certificate((3, 2))
    assert not isinstance(cert, NoExtension)


def test_certificate_matches_squarefree_dichotomy():
    # rectangles: certificate exists iff the part size is not square-free
    for r in range(1, 9):
        for s in range(1, 4):
            if r * s > 12:
                continue
            cert_exists = not isinstance(
                extension_certificate((r,) * s), NoExtension
            )
            assert cert_exists == (not is_squarefree(r))


def test_certificate_reconstructs_hooks():
    # m_k = d_k + d_(k-1) whenever the certificate exists
    for (r, s) in [(4, 1), (4, 2), (8, 1), (9, 1), (4, 3)]:
        cert = extension_certificate((r,) * s)
        assert not isinstance(cert, NoExtension)
        m = hook_mults(r, s)
        n = r * s
        for k in range(n - 1):
            prev = cert[k - 1] if k >= 1 else 0
            assert m[k] == cert[k] + prev
        assert m[n - 1] == cert[n - 2]


# -- square-divisibility dichotomy -------------------------------------------


def test_squarefree_criterion_r4():
    rep = squarefree_criterion(4, 4)
    assert not rep.squarefree
    assert all(rep.divisible)
    assert rep.moment == moebius(4) == 0
    assert rep.dichotomy_holds


def test_squarefree_criterion_r6():
    rep = squarefree_criterion(6, 4)
    assert rep.squarefree
    assert not any(rep.divisible)
    assert rep.moment == moebius(6) == 1
    assert rep.dichotomy_holds


def test_squarefree_criterion_r1():
    rep = squarefree_criterion(1, 4)
    assert rep.squarefree
    assert rep.moment == 1
    assert rep.dichotomy_holds


def test_dichotomy_sweep():
    for r in range(1, 31):
        rep = squarefree_criterion(r, 4)
        assert rep.dichotomy_holds, r


def test_quotient_series_r4():
    q = quotient_series(4, 4)
    assert q is not None
    assert q.poly == X  # (x + 2x^2 + x^3) / (1 + x)^2
    # [y^s] of the quotient series is s * x^(2s-1)
    for s in range(1, 5):
        assert q.series.coeff(s) == xpow(2 * s - 1, s)


def test_quotient_series_r8_nonnegative():
    q = quotient_series(8, 4)
    assert q is not None
    assert q.poly.coeffs == (0, 1, 2, 2, 2, 1)
    for s in range(5):
        assert all(c >= 0 for c in q.series.coeff(s).coeffs)


def test_quotient_series_squarefree_is_none():
    assert quotient_series(6, 3) is None
    assert quotient_series(1, 3) is None
    assert quotient_series(30, 3) is None


# -- hook profile ------------------------------------------------------------


def test_hook_profile_bundles_consistent_data():
    prof = hook_profile(4, 2)
    assert prof.n == 8
    assert prof.witt == witt_coeffs(4)
    assert prof.column_row == column_row_mults(4, 2)
    assert prof.hooks == hook_mults(4, 2)
    assert prof.certificate == (0, 0, 0, 2, 0, 0, 0)


def test_hook_poly_special_families():
    # frozen closed forms: single cycles of prime-squared length stay
    # concentrated; N(2,s) = N(3,s) = x^(2s-1); N(4,s) = s x^(2s-1)(1+x)
    for s in range(1, 6):
        assert hook_poly(2, s) == xpow(2 * s - 1)
        assert hook_poly(3, s) == xpow(2 * s - 1)
        assert hook_poly(4, s) == xpow(2 * s - 1, s) * ONE_PLUS_X


# -- subset-sum identities ---------------------------------------------------


def test_subset_sum_counts_match_hooks_of_full_cycle():
    for n in range(1, 13):
        m = hook_mults(n, 1)
        for k in range(n):
            assert m[k] == subset_sum_count(n, k, include_n=False)


def test_subset_sum_counts_match_witt():
    for n in range(1, 13):
        f = witt_coeffs(n)
        for k in range(n + 1):
            assert f[k] == subset_sum_count(n, k, include_n=True)


def test_subset_sum_edge_cases():
    # k = 0: empty sum is 0, which is 1 mod n only for n = 1
    assert subset_sum_count(1, 0, include_n=False) == 1
    assert subset_sum_count(2, 0, include_n=False) == 0
    # k = n - 1 inside [n-1] picks all of it
    assert subset_sum_count(3, 2, include_n=False) == (1 if (1 + 2) % 3 == 1 else 0)


# -- unimodality -------------------------------------------------------------


def test_hook_mults_unimodal_single_cycles():
    for r in range(1, 41):
        assert is_unimodal(hook_mults(r, 1)), r


def test_hook_mults_unimodal_small_rectangles():
    for r in range(1, 13):
        for s in range(1, 5):
            assert is_unimodal(hook_mults(r, s)), (r, s)
