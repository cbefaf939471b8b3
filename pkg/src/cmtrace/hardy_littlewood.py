"""Hardy-Littlewood constants for prime values of a quadratic polynomial.

For admissible f(x) = a*x^2 + b*x + c the count of x in [0, n] with f(x)
prime grows like delta(f) * sqrt(n)/(something log), and delta has the
classical Euler product. This package only ever needs f = (4Dx + j)^2 + r^2
shapes, which collapse to x^2 + r^2 up to finite factors, but the general
evaluator is cheap to have and easy to test on its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, sqrt

from .errors import PreconditionError
from .primes import is_prime_u64, sieve_primes

__all__ = ["HLPoly", "hl_admissible", "hl_delta", "hl_count"]


@dataclass(frozen=True, slots=True)
class HLPoly:
    """f(x) = a*x^2 + b*x + c with integer coefficients."""

    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, x: int) -> int:
        return (self.a * x + self.b) * x + self.c


def _as_poly(f) -> HLPoly:
    return f if isinstance(f, HLPoly) else HLPoly(*f)


def hl_admissible(f) -> bool:
    """Can f(x) be prime infinitely often, as far as the obvious obstructions go?

    Needs a > 0, gcd(a, b, c) = 1, f not always even (a+b and c not both
    even), and an irreducible f, i.e. the discriminant is not a perfect
    square.
    """
    f = _as_poly(f)
    if f.a <= 0:
        return False
    if gcd(gcd(f.a, f.b), f.c) != 1:
        return False
    if (f.a + f.b) % 2 == 0 and f.c % 2 == 0:
        return False
    d = f.disc
    if d >= 0 and isqrt(d) ** 2 == d:
        return False
    return True


def hl_delta(f, prime_bound: int = 1_000_000) -> float:
    """Truncated Hardy-Littlewood constant for f.

    gcd(2, a+b)/sqrt(a) * prod_{p | a, p | b, p > 2} p/(p-1)
    * prod_{p ∤ a, 2 < p <= prime_bound} (1 - (disc/p)/(p-1)).

    Plain float product over a sieve; the tail beyond 10^6 moves the value
    in the fourth decimal, which is accuracy enough for everything here.
    """
    f = _as_poly(f)
    if not hl_admissible(f):
        raise PreconditionError(f"hl_delta: {f} is not admissible")
    if prime_bound < 3:
        raise PreconditionError(f"hl_delta: prime_bound too small: {prime_bound}")
    value = gcd(2, f.a + f.b) / sqrt(f.a)
    disc = f.disc
    for p in sieve_primes(prime_bound)[1:].tolist():  # odd primes only
        if f.a % p == 0:
            if f.b % p == 0:
                value *= p / (p - 1)
            continue
        d = disc % p
        if d == 0:
            leg = 0
        else:
            t = pow(d, (p - 1) // 2, p)
            leg = 1 if t == 1 else -1
        value *= 1 - leg / (p - 1)
    return value


def hl_count(f, n: int) -> int:
    """Number of distinct primes <= n of the form f(x), x >= 0 an integer."""
    f = _as_poly(f)
    if n < 0:
        raise PreconditionError(f"hl_count wants n >= 0, got {n}")
    found: set[int] = set()
    x = 0
    while True:
        v = f(x)
        # past the vertex and above n means every later value is too big
        if v > n and 2 * f.a * x + f.a + f.b > 0:
            break
        if 2 <= v <= n and is_prime_u64(v):
            found.add(v)
        x += 1
    return len(found)
