"""Gaussian integer arithmetic and two-squares decompositions.

Everything downstream that touches a prime p ≡ 1 (mod 4) goes through
two_squares(p): the normalized writing p = alpha^2 + beta^2 with
alpha ≡ 1 (mod 4) and beta > 0 even. The normalization is load-bearing,
traces of Frobenius are read off these two numbers with signs attached.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .errors import PreconditionError


@dataclass(frozen=True, slots=True)
class GaussianInt:
    re: int
    im: int

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianInt(a * c - b * d, a * d + b * c)

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_odd(self) -> bool:
        # odd = coprime to 1+i, i.e. odd norm
        return self.norm() % 2 == 1

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


GI_ZERO = GaussianInt(0, 0)
GI_ONE = GaussianInt(1, 0)
GI_I = GaussianInt(0, 1)

_UNITS = (GI_ONE, GI_I, GaussianInt(-1, 0), GaussianInt(0, -1))


def gi_mul(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    return a * b


def _round_half_down(x: int, n: int) -> int:
    # nearest integer to x/n (n > 0), ties toward -infinity: 2.5 -> 2, -2.5 -> -3
    return (2 * x + n - 1) // (2 * n)


def gi_divmod(a: GaussianInt, b: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Division with remainder, norm(r) < norm(b).

    Quotient coordinates are the nearest integers to the exact quotient,
    ties rounding toward -infinity. That pins a unique (q, r) and keeps
    norm(r) <= norm(b)/2.
    """
    if b.is_zero():
        raise PreconditionError("gi_divmod by zero")
    n = b.norm()
    t = a * b.conj()
    q = GaussianInt(_round_half_down(t.re, n), _round_half_down(t.im, n))
    r = a - q * b
    assert r.norm() * 2 <= n, (a, b, q, r)
    return q, r


def gi_mod(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    return gi_divmod(a, b)[1]


def gi_powmod(base: GaussianInt, exp: int, mod: GaussianInt) -> GaussianInt:
    """base^exp reduced mod `mod` at every step (exp >= 0)."""
    if exp < 0:
        raise PreconditionError("gi_powmod wants exp >= 0")
    result = gi_mod(GI_ONE, mod)
    acc = gi_mod(base, mod)
    while exp:
        if exp & 1:
            result = gi_mod(result * acc, mod)
        exp >>= 1
        if exp:
            acc = gi_mod(acc * acc, mod)
    return result


def is_primary(z: GaussianInt) -> bool:
    """Primary: the associate normal form for odd nonunits.

    z = a+bi qualifies iff (a, b) ≡ (1, 0) or (3, 2) (mod 4). Exactly one
    associate of every odd nonunit qualifies; units and even elements never do.
    """
    if z.is_unit() or not z.is_odd():
        return False
    a4, b4 = z.re % 4, z.im % 4
    return (a4, b4) in ((1, 0), (3, 2))


def make_primary(z: GaussianInt) -> tuple[int, GaussianInt]:
    """Return (k, w) with w = i^k * z primary, k in 0..3."""
    if z.is_zero() or z.is_unit():
        raise PreconditionError(f"make_primary: {z} is zero or a unit")
    if not z.is_odd():
        raise PreconditionError(f"make_primary: {z} is even (norm divisible by 2)")
    w = z
    for k in range(4):
        if is_primary(w):
            return k, w
        w = GI_I * w
    raise AssertionError(f"no primary associate for {z}")  # unreachable


def gi_gcd(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    """Greatest common divisor, canonically normalized.

    Odd nonunit gcds come back primary. Even nonunit gcds have no primary
    associate, so those are normalized to re > 0, im >= 0 instead. Unit gcds
    come back as 1.
    """
    if a.is_zero() and b.is_zero():
        raise PreconditionError("gi_gcd(0, 0) undefined")
    while not b.is_zero():
        a, b = b, gi_divmod(a, b)[1]
    if a.is_unit():
        return GI_ONE
    if a.is_odd():
        return make_primary(a)[1]
    w = a
    for _ in range(3):
        if w.re > 0 and w.im >= 0:
            break
        w = GI_I * w
    assert w.re > 0 and w.im >= 0
    return w


@dataclass(frozen=True, slots=True)
class TwoSquares:
    """p = alpha^2 + beta^2 with alpha odd, alpha ≡ 1 (mod 4), beta > 0 even."""

    p: int
    alpha: int
    beta: int

    def __post_init__(self):
        assert self.alpha % 4 == 1
        assert self.beta > 0 and self.beta % 2 == 0
        assert self.alpha * self.alpha + self.beta * self.beta == self.p


def sqrt_minus_one(p: int) -> int:
    """The smaller square root of -1 mod p, for prime p ≡ 1 (mod 4)."""
    if p % 4 != 1:
        raise PreconditionError(f"sqrt_minus_one wants p ≡ 1 (mod 4), got {p}")
    e = (p - 1) // 2
    g = 2
    while pow(g, e, p) != p - 1:
        g += 1
        if g > 100 and g * g > p:  # way past any plausible least nonresidue
            raise PreconditionError(f"sqrt_minus_one: {p} does not look prime")
    z = pow(g, (p - 1) // 4, p)
    assert z * z % p == p - 1
    return min(z, p - z)


@lru_cache(maxsize=1 << 16)
def two_squares(p: int) -> TwoSquares:
    """Normalized two-squares decomposition of a prime p ≡ 1 (mod 4).

    Cornacchia-style descent: run Euclid on (p, sqrt(-1) mod p); the first
    remainder below sqrt(p) is the odd leg up to sign. Primality of p is the
    caller's responsibility; the exactness assert catches most abuse.
    """
    if p % 4 != 1 or p < 5:
        raise PreconditionError(f"two_squares wants a prime ≡ 1 (mod 4), got {p}")
    a, b = p, sqrt_minus_one(p)
    while b * b > p:
        a, b = b, a % b
    x = b
    y2 = p - x * x
    y = isqrt(y2)
    if y * y != y2:
        raise PreconditionError(f"two_squares: {p} is not prime")
    if x % 2 == 0:
        x, y = y, x
    alpha = x if x % 4 == 1 else -x
    beta = abs(y)
    return TwoSquares(p=p, alpha=alpha, beta=beta)


def primary_prime_above(p: int) -> GaussianInt:
    """The primary Gaussian prime over p ≡ 1 (mod 4) with positive imaginary part.

    This is the generator the quartic residue conventions are anchored to:
    beta ≡ 0 (mod 4) gives alpha + beta*i itself, beta ≡ 2 (mod 4) flips the
    real part's sign to restore primarity while keeping im > 0.
    """
    ts = two_squares(p)
    re = ts.alpha if ts.beta % 4 == 0 else -ts.alpha
    g = GaussianInt(re, ts.beta)
    assert is_primary(g)
    return g
