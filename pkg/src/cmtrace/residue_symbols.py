"""Quadratic and quartic residue symbols, and the four-way trace classes.

For p ≡ 1 (mod 4) the value of D^((p-1)/4) mod p lands in a four-element
group {1, -1, i_p, -i_p} (i_p a square root of -1 mod p) and that value
decides which of the four candidates ±2*alpha, ±2*beta the trace of
Frobenius is. FourClass names those outcomes relative to the normalized
decomposition from two_squares; QuarticValue is the abstract fourth root of
unity when we need actual Gaussian-unit arithmetic (sums, products).
"""

from __future__ import annotations

import enum

from .errors import PreconditionError
from .gaussian import (
    GI_ONE,
    GaussianInt,
    TwoSquares,
    gi_gcd,
    gi_mod,
    gi_powmod,
    is_primary,
    two_squares,
)
from .primes import is_prime_u64


class QuarticValue(enum.Enum):
    """Fourth roots of unity; the enum value is the exponent of i."""

    ONE = 0
    I = 1
    MINUS_ONE = 2
    MINUS_I = 3

    def __mul__(self, other: "QuarticValue") -> "QuarticValue":
        return QuarticValue((self.value + other.value) % 4)

    def conjugate(self) -> "QuarticValue":
        return QuarticValue((-self.value) % 4)

    def to_gaussian(self) -> GaussianInt:
        return _UNIT_GI[self.value]

    def __str__(self) -> str:
        return ("1", "i", "-1", "-i")[self.value]


_UNIT_GI = (
    GaussianInt(1, 0),
    GaussianInt(0, 1),
    GaussianInt(-1, 0),
    GaussianInt(0, -1),
)


class FourClass(enum.Enum):
    PLUS_ALPHA = "+alpha"
    MINUS_ALPHA = "-alpha"
    PLUS_BETA = "+beta"
    MINUS_BETA = "-beta"


def legendre(a: int, p: int) -> int:
    """Quadratic residue symbol (a/p) in {-1, 0, 1} for an odd prime p."""
    if p < 3 or p % 2 == 0:
        raise PreconditionError(f"legendre wants an odd prime modulus, got {p}")
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    if t == 1:
        return 1
    assert t == p - 1, f"legendre: {p} is not prime"
    return -1


def _check_primary_prime(pi: GaussianInt, who: str) -> int:
    """Validate that pi is a primary Gaussian prime not dividing 2; return its norm."""
    if not is_primary(pi):
        raise PreconditionError(f"{who}: {pi} is not primary")
    n = pi.norm()
    if n % 2 == 0:
        raise PreconditionError(f"{who}: {pi} divides 2")
    if pi.im == 0:
        q = abs(pi.re)
        if not (q % 4 == 3 and is_prime_u64(q)):
            raise PreconditionError(f"{who}: {pi} is not prime")
    elif not is_prime_u64(n):
        raise PreconditionError(f"{who}: {pi} is not prime")
    return n


def quartic_symbol(lam: GaussianInt, pi: GaussianInt) -> QuarticValue:
    """The quartic residue symbol of lam modulo the primary prime pi.

    Defined by lam^((N(pi)-1)/4) ≡ value (mod pi); requires lam coprime
    to pi. Computed honestly in the quotient ring, one reduction per
    multiply, no shortcuts through F_p.
    """
    n = _check_primary_prime(pi, "quartic_symbol")
    if gi_gcd(lam, pi) != GI_ONE:
        raise PreconditionError(f"quartic_symbol: {lam} shares a factor with {pi}")
    w = gi_powmod(lam, (n - 1) // 4, pi)
    hit = None
    for val in QuarticValue:
        if gi_mod(w - val.to_gaussian(), pi).is_zero():
            assert hit is None
            hit = val
    assert hit is not None, (lam, pi, w)
    return hit


def reciprocity_check(lam: GaussianInt, pi: GaussianInt) -> bool:
    """Check biquadratic reciprocity for a pair of distinct primary primes.

    (lam/pi) must equal (pi/lam) * (-1)^(((N(lam)-1)/4) * ((N(pi)-1)/4)).
    Returns True when the identity holds.
    """
    nl = _check_primary_prime(lam, "reciprocity_check")
    npi = _check_primary_prime(pi, "reciprocity_check")
    if gi_gcd(lam, pi) != GI_ONE:
        raise PreconditionError("reciprocity_check wants coprime arguments")
    lhs = quartic_symbol(lam, pi)
    rhs = quartic_symbol(pi, lam)
    if ((nl - 1) // 4) * ((npi - 1) // 4) % 2 == 1:
        rhs = rhs * QuarticValue.MINUS_ONE
    return lhs == rhs


def quartic_class_of(D: int, p: int, ts: TwoSquares | None = None) -> FourClass:
    """Which of {1, -1, beta/alpha, -beta/alpha} D^((p-1)/4) is mod p.

    beta/alpha is a square root of -1 mod p (alpha^2 + beta^2 ≡ 0), so for
    any D coprime to p the four cases are exhaustive and exclusive.
    """
    if p % 4 != 1:
        raise PreconditionError(f"quartic_class_of wants p ≡ 1 (mod 4), got {p}")
    if D % p == 0:
        raise PreconditionError(f"quartic_class_of: p={p} divides D={D}")
    if ts is None:
        ts = two_squares(p)
    c = pow(D % p, (p - 1) // 4, p)
    if c == 1:
        return FourClass.PLUS_ALPHA
    if c == p - 1:
        return FourClass.MINUS_ALPHA
    ba = ts.beta * pow(ts.alpha % p, p - 2, p) % p
    if c == ba:
        return FourClass.PLUS_BETA
    assert c == p - ba, (D, p, c, ba)
    return FourClass.MINUS_BETA


def two_quartic_class(p: int, ts: TwoSquares | None = None) -> FourClass:
    """Closed form for the class of 2, read off beta mod 8.

    With alpha ≡ 1 (mod 4) the congruences 2*alpha ≡ 2 and 6*alpha ≡ 6
    (mod 8) hold identically, so the case split collapses to beta mod 8:
    0 -> +alpha, 4 -> -alpha, 2 -> +beta, 6 -> -beta. No exponentiation.
    """
    if ts is None:
        ts = two_squares(p)
    b8 = ts.beta % 8
    if b8 == 0:
        return FourClass.PLUS_ALPHA
    if b8 == 4:
        return FourClass.MINUS_ALPHA
    if b8 == 2:
        return FourClass.PLUS_BETA
    return FourClass.MINUS_BETA


# Translation between the class labels (anchored to alpha ≡ 1 mod 4, beta > 0)
# and the quartic symbol anchored to the primary prime with im > 0. The image
# of i in F_p under that prime is -re/im, and whether the primary generator is
# alpha + beta*i or -alpha + beta*i depends on beta mod 4; hence the flip.

def class_to_value(cls: FourClass, beta: int) -> QuarticValue:
    if cls is FourClass.PLUS_ALPHA:
        return QuarticValue.ONE
    if cls is FourClass.MINUS_ALPHA:
        return QuarticValue.MINUS_ONE
    if beta % 4 == 0:
        return QuarticValue.I if cls is FourClass.PLUS_BETA else QuarticValue.MINUS_I
    return QuarticValue.MINUS_I if cls is FourClass.PLUS_BETA else QuarticValue.I


def quartic_value_of(D: int, p: int, ts: TwoSquares | None = None) -> QuarticValue:
    """The quartic symbol of D at p as a fourth root of unity.

    Equals quartic_symbol(D, pi) for the primary prime pi over p with
    im(pi) > 0, but computed through the residue class machinery.
    """
    if ts is None:
        ts = two_squares(p)
    return class_to_value(quartic_class_of(D, p, ts), ts.beta)
