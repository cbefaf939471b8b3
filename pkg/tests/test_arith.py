import random
from math import gcd

import pytest

from cmtrace.arith import (
    euler_phi,
    factorize,
    progression_set,
    rad_odd,
    rho,
    shape_of,
    split_d,
    tau,
    v2,
)
from cmtrace.errors import PreconditionError


def test_factorize():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(-17) == {17: 1}
    assert factorize(1) == {}
    with pytest.raises(PreconditionError):
        factorize(0)


def test_tau_examples():
    assert tau(5) == 3
    assert tau(21) == 21
    assert tau(25) == 15
    assert tau(2) == 2
    assert tau(8) == 8
    assert tau(1) == 1
    assert tau(-1) == 1
    assert tau(13) == 11
    assert tau(169) == 13 * 11


def test_tau_multiplicative():
    rng = random.Random(616)
    for _ in range(500):
        a = rng.randint(1, 3000)
        b = rng.randint(1, 3000)
        if gcd(a, b) != 1:
            continue
        assert tau(a * b) == tau(a) * tau(b)


def test_euler_phi():
    assert euler_phi(1) == 1
    assert euler_phi(12) == 4
    assert euler_phi(-12) == 4
    assert euler_phi(97) == 96
    # brute force agreement
    for n in range(1, 200):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_rad_odd():
    assert rad_odd(72) == 3
    assert rad_odd(-21) == 21
    assert rad_odd(16) == 1
    assert rad_odd(1) == 1


def test_v2():
    assert v2(40) == 3
    assert v2(-12) == 2
    assert v2(7) == 0
    with pytest.raises(PreconditionError):
        v2(0)


def test_shape_of_examples():
    s = shape_of(-21)
    assert s.sign == -1 and s.sigma == 0
    assert s.p_list == (3, 7) and s.q_list == () and s.l_list == ()
    assert s.r_counts[3] == 1 and s.r_counts[7] == 1 and s.r_counts[1] == 0
    assert (s.r, s.s, s.t) == (2, 0, 0)

    s = shape_of(72)  # 8 * 9
    assert s.sigma == 3 and s.q_list == (3,) and s.s == 1 and s.r == 0

    s = shape_of(250)  # 2 * 125
    assert s.sigma == 1 and s.l_list == (5,) and s.t == 1
    assert s.t_counts[5] == 1


def test_shape_roundtrip():
    rng = random.Random(14)
    count = 0
    while count < 400:
        D = rng.randint(-5000, 5000)
        if D == 0:
            continue
        try:
            s = shape_of(D)
        except PreconditionError:
            assert any(e >= 4 for e in factorize(D).values())
            continue
        assert s.value == D
        count += 1


def test_shape_rejects_fourth_powers():
    for D in (16, -16, 48, 81, 32 * 2):
        with pytest.raises(PreconditionError):
            shape_of(D)


def test_split_examples():
    sp = split_d(-21, 9)
    assert (sp.d, sp.dbar) == (3, -7)
    sp = split_d(-21, 5)
    assert (sp.d, sp.dbar) == (1, -21)
    sp = split_d(15, 3)
    assert (sp.d, sp.dbar) == (3, 5)
    sp = split_d(18, 6)
    assert (sp.d, sp.dbar) == (9, 2)


def test_split_invariants():
    rng = random.Random(2718)
    done = 0
    while done < 600:
        D = rng.randint(-3000, 3000)
        r = rng.randint(-40, 40)
        if D == 0 or r == 0:
            continue
        try:
            sp = split_d(D, r)
        except PreconditionError:
            continue
        assert sp.d * sp.dbar == D
        assert gcd(sp.d, sp.dbar) == 1
        assert sp.d > 0 and sp.d % 2 == 1
        assert r % rad_odd(sp.d) == 0
        assert gcd(rad_odd(sp.dbar), r) == 1
        done += 1


def test_progression_set_examples():
    assert progression_set(5, 1).ks == (2, 3, 5, 7, 8, 10)
    assert progression_set(3, 1).ks == (1, 2, 3, 4, 5, 6)
    assert progression_set(1, 1).ks == (1, 2)


def test_progression_set_count():
    """|ks| = 2 * phi(d) * tau(dbar); the simpler 2 * tau(D) only when d = 1."""
    for D in [x for x in range(-60, 61) if x != 0]:
        try:
            shape_of(D)
        except PreconditionError:
            continue
        for r in [x for x in range(-12, 13) if x != 0]:
            ps = progression_set(D, r)
            sp = split_d(D, r)
            want = 2 * euler_phi(sp.d) * tau(sp.dbar)
            assert len(ps.ks) == want, (D, r)
            assert len(ps.ks_odd) == len(ps.ks_even)
            if sp.d == 1:
                assert len(ps.ks) == 2 * tau(D)


def test_progression_y_values():
    ps = progression_set(5, 1)
    assert ps.y_of(ps.ks[0], 0) == 2 * ps.ks[0]
    assert ps.y_of(ps.ks[0], 3) == 4 * 5 * 3 + 2 * ps.ks[0]
    ps = progression_set(5, 2)
    assert ps.y_of(ps.ks[0], 0) == 2 * ps.ks[0] + 1  # odd leg for even r


def test_rho():
    assert rho(3) == 0
    assert rho(-7) == 0
    assert rho(2) == 1
    assert rho(-10) == 1
