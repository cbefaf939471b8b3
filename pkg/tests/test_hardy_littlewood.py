import pytest

from cmtrace.errors import PreconditionError
from cmtrace.hardy_littlewood import HLPoly, hl_admissible, hl_count, hl_delta
from oracles import slow_prime_count_quadratic


def test_poly_basics():
    f = HLPoly(1, 0, 1)
    assert f(0) == 1 and f(4) == 17
    assert f.disc == -4
    g = HLPoly(2, 3, -1)
    assert g(5) == 64 and g.disc == 17


def test_admissible():
    assert hl_admissible(HLPoly(1, 0, 1))
    assert hl_admissible((1, 0, 4))       # x^2 + 4
    assert hl_admissible((4, 4, 5))       # (2x+1)^2 + 4
    assert not hl_admissible((1, 0, -1))  # factors as (x-1)(x+1)
    assert not hl_admissible((2, 2, 2))   # common factor
    assert not hl_admissible((2, 0, 4))   # always even
    assert not hl_admissible((1, 1, 0))   # reducible, disc = 1
    assert not hl_admissible((-1, 0, -1))  # negative leading coefficient
    assert not hl_admissible((1, 3, 2))   # disc = 1


def test_delta_exact_tiny_truncation():
    # only p = 3 in the product: disc = -4 is a non-residue mod 3, so the
    # whole thing is 1 * (1 - (-1)/2) = 3/2, exactly representable
    assert hl_delta((1, 0, 1), prime_bound=3) == 1.5


def test_delta_x2_plus_1():
    d = hl_delta((1, 0, 1), prime_bound=100_000)
    assert abs(d - 1.3728) < 2e-3
    # truncation is stable in the third decimal past 10^5
    d2 = hl_delta((1, 0, 1), prime_bound=400_000)
    assert abs(d - d2) < 1e-3


def test_delta_ratio_shared_tail():
    # x^2+9 and x^2+1 have the same symbol at every p > 3 (disc -36 vs -4,
    # same class away from 3); they differ only in the p = 3 factor, which
    # is 1 for -36 ≡ 0 and 3/2 for the non-residue -4, so the ratio is 2/3
    a = hl_delta((1, 0, 9), prime_bound=50_000)
    b = hl_delta((1, 0, 1), prime_bound=50_000)
    assert abs(a / b - 2 / 3) < 1e-9


def test_delta_parity_and_leading_factors():
    # 4x^2+1 against x^2+1: the symbol product is identical (disc -16 and
    # -4 agree at every odd p), and 2/sqrt(4) == 1/sqrt(1), so the two
    # constants must come out equal factor for factor
    a = hl_delta((4, 0, 1), prime_bound=20_000)
    b = hl_delta((1, 0, 1), prime_bound=20_000)
    assert abs(a - b) < 1e-9


def test_delta_rejects():
    with pytest.raises(PreconditionError):
        hl_delta((1, 0, -1))
    with pytest.raises(PreconditionError):
        hl_delta((1, 0, 1), prime_bound=2)


def test_count_examples():
    # x^2+1 primes up to 100: 2, 5, 17, 37; 101 just misses
    assert hl_count((1, 0, 1), 100) == 4
    assert hl_count((1, 0, 1), 101) == 5
    assert hl_count((1, 0, 4), 100) == 4   # 5, 13, 29, 53
    assert hl_count((4, 4, 5), 100) == 4   # same primes via odd arguments
    assert hl_count((1, 0, 1), 0) == 0
    assert hl_count((1, 0, 1), 2) == 1     # f(1) = 2


def test_count_vs_slow_oracle():
    for coeffs in ((1, 0, 1), (1, 0, 4), (2, 2, 1), (3, 1, 1), (9, 3, 1)):
        f = HLPoly(*coeffs)
        for n in (10, 100, 1000, 5000):
            assert hl_count(f, n) == slow_prime_count_quadratic(f.a, f.b, f.c, n), (
                coeffs,
                n,
            )


def test_count_negative_n_rejects():
    with pytest.raises(PreconditionError):
        hl_count((1, 0, 1), -1)


def test_count_matches_delta_asymptotics():
    # loose sanity bound: delta * sqrt(n)/log(n) should be within ~20% of
    # the true count at n = 10^7 (log n understates the integral, so the
    # true count runs a little hot; the window is asymmetric on purpose)
    from math import log, sqrt

    n = 10_000_000
    d = hl_delta((1, 0, 1), prime_bound=200_000)
    predicted = d * sqrt(n) / log(n)
    actual = hl_count((1, 0, 1), n)
    assert 0.9 < actual / predicted < 1.25, (actual, predicted)
