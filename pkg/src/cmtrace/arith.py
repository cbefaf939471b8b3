"""Integer bookkeeping for the density formulas.

The closed-form densities only see D through a small amount of structure:
the 2-adic valuation, the odd primes split by residue mod 8 and by exponent
(1, 2, or 3 after fourth-power reduction), and how that factors against r.
DShape captures the structure of one integer, DSplit the interaction with r,
ProgressionSet the residue classes the progression oracle walks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, prod

from .errors import PreconditionError


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| by trial division, n != 0."""
    if n == 0:
        raise PreconditionError("factorize(0)")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # wheel over 6k±1
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def v2(n: int) -> int:
    """2-adic valuation of n != 0."""
    if n == 0:
        raise PreconditionError("v2(0)")
    n = abs(n)
    return (n & -n).bit_length() - 1


def tau(D: int) -> int:
    """The local weight attached to D's prime powers.

    Multiplicative; on l^e it is l^e unless l ≡ 1 (mod 4), where one factor
    of l is traded for l-2 (the split primes cost a class): l^(e-1) * (l-2).
    tau(±1) = 1 and tau(2^e) = 2^e.
    """
    if D == 0:
        raise PreconditionError("tau(0)")
    t = 1
    for l, e in factorize(D).items():
        if l % 4 == 1:
            t *= l ** (e - 1) * (l - 2)
        else:
            t *= l**e
    return t


def euler_phi(n: int) -> int:
    if n == 0:
        raise PreconditionError("euler_phi(0)")
    n = abs(n)
    if n == 1:
        return 1
    out = 1
    for p, e in factorize(n).items():
        out *= p ** (e - 1) * (p - 1)
    return out


def rad_odd(n: int) -> int:
    """Product of the distinct odd primes dividing n (1 if none)."""
    if n == 0:
        raise PreconditionError("rad_odd(0)")
    return prod(p for p in factorize(n) if p != 2)


_RESIDUES = (1, 3, 5, 7)


@dataclass(frozen=True, slots=True)
class DShape:
    """Structure of a fourth-power-free integer.

    Odd primes are binned by exponent: p_list (exponent 1), q_list (2),
    l_list (3). r_counts / t_counts histogram the exponent-1 / exponent-3
    primes by residue mod 8. s is the number of exponent-2 primes, r and t
    the sizes of the other two bins.
    """

    sign: int
    sigma: int  # 2-adic valuation, 0..3
    p_list: tuple[int, ...]
    q_list: tuple[int, ...]
    l_list: tuple[int, ...]
    r_counts: dict[int, int]
    t_counts: dict[int, int]
    s: int
    r: int
    t: int

    @property
    def value(self) -> int:
        v = self.sign * 2**self.sigma
        v *= prod(self.p_list) * prod(q * q for q in self.q_list)
        v *= prod(l**3 for l in self.l_list)
        return v

    @property
    def odd_primes(self) -> tuple[int, ...]:
        return tuple(sorted(self.p_list + self.q_list + self.l_list))


def shape_of(D: int) -> DShape:
    if D == 0:
        raise PreconditionError("shape_of(0)")
    fac = factorize(D)
    if any(e >= 4 for e in fac.values()):
        raise PreconditionError(f"shape_of wants fourth-power-free input, got {D}")
    sigma = fac.pop(2, 0)
    buckets: dict[int, list[int]] = {1: [], 2: [], 3: []}
    for l, e in sorted(fac.items()):
        buckets[e].append(l)
    p_list, q_list, l_list = (tuple(buckets[e]) for e in (1, 2, 3))
    r_counts = {i: sum(1 for l in p_list if l % 8 == i) for i in _RESIDUES}
    t_counts = {i: sum(1 for l in l_list if l % 8 == i) for i in _RESIDUES}
    return DShape(
        sign=1 if D > 0 else -1,
        sigma=sigma,
        p_list=p_list,
        q_list=q_list,
        l_list=l_list,
        r_counts=r_counts,
        t_counts=t_counts,
        s=len(q_list),
        r=len(p_list),
        t=len(l_list),
    )


@dataclass(frozen=True, slots=True)
class DSplit:
    """D = d * dbar split against r.

    d collects the full power of every odd prime of D that divides r, so
    d > 0 is odd, rad(d) | r, gcd(d, dbar) = 1 and gcd(r, odd part of dbar)
    = 1. The formulas read d's primes through shape_d (the "primed" counts)
    and dbar's through shape_dbar (the "double-primed" ones).
    """

    D: int
    r: int
    d: int
    dbar: int
    shape_d: DShape
    shape_dbar: DShape


def split_d(D: int, r: int) -> DSplit:
    if D == 0 or r == 0:
        raise PreconditionError("split_d wants nonzero D and r")
    fac = factorize(D)
    if any(e >= 4 for e in fac.values()):
        raise PreconditionError(f"split_d wants fourth-power-free D, got {D}")
    d = prod(l**e for l, e in fac.items() if l != 2 and r % l == 0)
    dbar = D // d
    assert d * dbar == D and gcd(d, dbar) == 1
    assert gcd(rad_odd(dbar), r) == 1 and d % 2 == 1 and d > 0
    return DSplit(D=D, r=r, d=d, dbar=dbar, shape_d=shape_of(d), shape_dbar=shape_of(dbar))


def rho(r: int) -> int:
    """Parity offset of the progression: 0 for odd r, 1 for even."""
    return 0 if r % 2 else 1


@dataclass(frozen=True, slots=True)
class ProgressionSet:
    """Residue classes k whose progression can contain good primes.

    For trace parameter r the candidate primes are p = r^2 + y^2 with
    y = 4*|D|*x + 2k + rho(r); k runs over 1..2|D| and survives iff
    gcd(|D|, (2k + rho)^2 + r^2) = 1. ks_odd / ks_even split by the parity
    of k, which the quartic sums track separately.
    """

    D_abs: int
    r: int
    ks: tuple[int, ...]
    ks_odd: tuple[int, ...]
    ks_even: tuple[int, ...]

    def y_of(self, k: int, x: int) -> int:
        return 4 * self.D_abs * x + 2 * k + rho(self.r)


def progression_set(D: int, r: int) -> ProgressionSet:
    if D == 0 or r == 0:
        raise PreconditionError("progression_set wants nonzero D and r")
    D_abs = abs(D)
    off = rho(r)
    ks = tuple(
        k for k in range(1, 2 * D_abs + 1) if gcd(D_abs, (2 * k + off) ** 2 + r * r) == 1
    )
    ks_odd = tuple(k for k in ks if k % 2 == 1)
    ks_even = tuple(k for k in ks if k % 2 == 0)
    assert len(ks_odd) == len(ks_even), (D, r, ks)
    return ProgressionSet(D_abs=D_abs, r=r, ks=ks, ks_odd=ks_odd, ks_even=ks_even)


def reduce_quartic_twist(D: int) -> int:
    """Strip fourth powers from D; the curve's traces only see the result."""
    if D == 0:
        raise PreconditionError("reduce_quartic_twist(0)")
    out = 1 if D > 0 else -1
    for l, e in factorize(D).items():
        out *= l ** (e % 4)
    return out


def isqrt_exact(n: int) -> int | None:
    """isqrt(n) when n is a perfect square, else None (n >= 0)."""
    if n < 0:
        return None
    s = isqrt(n)
    return s if s * s == n else None
