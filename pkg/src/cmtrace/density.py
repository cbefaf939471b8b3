"""Exact densities of the trace classes a_p = ±2r, and their zero sets.

density_formula evaluates the closed forms: among primes p = r^2 + y^2 (the
only p ≡ 1 (mod 4) that can have a_p = ±2r at all), the fraction of residue
classes whose trace comes out +2r, and the fraction giving -2r, as exact
rationals. density_oracle measures the same two numbers by walking every
progression class, finding an actual prime in each, and computing its trace;
it shares no formulas with the closed forms, which is what makes the
agreement test meaningful.

All formulas are stated for a normalized trace parameter (odd r: the
representative ≡ 1 mod 4; singly-even r: the representative ≡ 2 mod 8).
_normalize handles the bookkeeping and the final swap back to the caller's
orientation.
"""

from __future__ import annotations

import concurrent.futures
import os
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .arith import (
    DSplit,
    ProgressionSet,
    progression_set,
    rad_odd,
    reduce_quartic_twist,
    rho,
    split_d,
    tau,
    v2,
)
from .errors import NoRepresentativeFound, PreconditionError
from .frobenius import ap_fast
from .gaussian import GaussianInt, two_squares
from .hardy_littlewood import HLPoly, hl_delta
from .primes import is_prime_u64
from .residue_symbols import quartic_value_of

__all__ = [
    "DensityPair",
    "ClassCounts",
    "SigmaTriple",
    "ZeroVerdict",
    "density_formula",
    "density_oracle",
    "sigma_sums",
    "is_zero_pair",
    "lt_constant",
    "cm_threads",
]


@dataclass(frozen=True, slots=True)
class DensityPair:
    """Densities of a_p = +2r (d_plus) and a_p = -2r (d_minus)."""

    d_plus: Fraction
    d_minus: Fraction

    def __post_init__(self):
        assert 0 <= self.d_plus <= 1 and 0 <= self.d_minus <= 1
        assert self.d_plus + self.d_minus <= 1

    def swapped(self) -> "DensityPair":
        return DensityPair(self.d_minus, self.d_plus)


@dataclass(frozen=True, slots=True)
class ClassCounts:
    """How many progression classes landed in each trace class.

    Counted against the normalized decomposition of each representative
    prime (alpha ≡ 1 mod 4, beta > 0), not against r's sign.
    """

    x_alpha: int
    x_minus_alpha: int
    x_beta: int
    x_minus_beta: int

    @property
    def total(self) -> int:
        return self.x_alpha + self.x_minus_alpha + self.x_beta + self.x_minus_beta


@dataclass(frozen=True, slots=True)
class SigmaTriple:
    """Character sums over one representative prime per progression class.

    sigma counts classes, sigma2 sums the quadratic symbol of D, sigma4 the
    quartic symbol (a Gaussian integer). The _i / _ii parts split by the
    parity of the class index k (odd k / even k), which is the split the
    closed forms are built from.
    """

    sigma: int
    sigma2: int
    sigma4: GaussianInt
    sigma_i: int
    sigma_ii: int
    sigma2_i: int
    sigma2_ii: int
    sigma4_i: GaussianInt
    sigma4_ii: GaussianInt


@dataclass(frozen=True, slots=True)
class ZeroVerdict:
    """Whether each side's density vanishes, and the matched table row if any."""

    D: int
    r: int
    plus_zero: bool
    minus_zero: bool
    table_row: str | None


def cm_threads() -> int:
    """Worker count for the oracle and sweeps; CM_THREADS overrides."""
    raw = os.environ.get("CM_THREADS", "")
    if raw.strip():
        try:
            n = int(raw)
        except ValueError:
            raise PreconditionError(f"CM_THREADS is not an integer: {raw!r}") from None
        if n < 1:
            raise PreconditionError(f"CM_THREADS must be >= 1, got {n}")
        return n
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# closed forms


def _T1(split: DSplit) -> int:
    # weight over dbar's odd primes of exponent 1 and 3
    sh = split.shape_dbar
    return prod(tau(l) for l in sh.p_list + sh.l_list)


def _T2(split: DSplit) -> int:
    # weight over all of dbar's odd primes
    sh = split.shape_dbar
    return prod(tau(l) for l in sh.p_list + sh.q_list + sh.l_list)


def _dbar_parity_sign(split: DSplit) -> int:
    # (-1)^(number of exponent-1 plus exponent-3 primes of dbar)
    sh = split.shape_dbar
    return -1 if (sh.r + sh.t) % 2 else 1


def _sym_pair(split: DSplit, sign: int) -> DensityPair:
    """(1/4)(1 + sign * (-1)^(r''+t'') / T1) on both sides."""
    v = Fraction(1, 4) * (1 + Fraction(sign * _dbar_parity_sign(split), _T1(split)))
    return DensityPair(v, v)


def _odd_pair(D: int, alpha: int) -> DensityPair:
    """Densities of (a_p = 2*alpha, a_p = -2*alpha), alpha ≡ 1 (mod 4)."""
    split = split_d(D, alpha)
    sigma = v2(D)
    if sigma in (1, 3):
        quarter = Fraction(1, 4)
        return DensityPair(quarter, quarter)
    asym = (sigma == 0 and D % 4 == 1) or (sigma == 2 and (D // 4) % 4 == 3)
    if not asym:
        return _sym_pair(split, +1)
    base = Fraction(1, 4) * (1 + Fraction(_dbar_parity_sign(split), _T1(split)))
    sh_d, sh_db = split.shape_d, split.shape_dbar
    e = (
        sh_d.r_counts[3] + sh_d.r_counts[5] + sh_d.t_counts[3] + sh_d.t_counts[5]
        + sh_db.r_counts[1] + sh_db.r_counts[7] + sh_db.t_counts[1] + sh_db.t_counts[7]
        + sh_db.s
    )
    term = Fraction((-1) ** e, 2 * _T2(split))
    return DensityPair(base + term, base - term)


def _even_pair(D: int, m: int) -> DensityPair:
    """Densities of (a_p = 2m, a_p = -2m) for even m; 2||m implies m ≡ 2 (mod 8)."""
    split = split_d(D, m)
    sigma = v2(D)
    if v2(m) >= 2 or sigma in (0, 2):
        # symmetric across the board; vanishes iff dbar has no odd prime
        return _sym_pair(split, -1)
    # now 2||m (m ≡ 2 mod 8 by normalization) and sigma in {1, 3}
    if split.shape_dbar.r + split.shape_dbar.s + split.shape_dbar.t == 0:
        # dbar is ±2 or ±8: one side takes everything
        if sigma == 1:
            plus_takes_all = (D // 2) % 4 == 1
        else:
            plus_takes_all = (D // 8) % 4 == 3
        one, zero = Fraction(1), Fraction(0)
        return DensityPair(one, zero) if plus_takes_all else DensityPair(zero, one)
    base = Fraction(1, 4) * (1 + Fraction(_dbar_parity_sign(split), _T1(split)))
    sh_db = split.shape_dbar
    e = (
        sh_db.r_counts[1] + sh_db.r_counts[5] + sh_db.t_counts[1] + sh_db.t_counts[5]
        + sh_db.s + ((split.d - 1) // 2)
    )
    term = Fraction((-1) ** e, 2 * _T2(split))
    if (sigma == 1) != (D > 0):
        term = -term
    return DensityPair(base + term, base - term)


def _normalize(r: int) -> tuple[int, bool]:
    """Normalized trace parameter and whether the output pair must swap.

    Odd r maps to the representative ≡ 1 (mod 4); singly even r to the one
    ≡ 2 (mod 8); doubly even r to |r|. The swap records that the caller's
    +2r is the normalized -2m.
    """
    if r % 2:
        m = r if r % 4 == 1 else -r
    elif r % 4 == 2:
        m = r if r % 8 == 2 else -r
    else:
        m = abs(r)
    return m, m != r


def density_formula(D: int, r: int) -> DensityPair:
    """Exact densities of a_p = +2r and a_p = -2r among p = r^2 + y^2.

    The density is over the 2|D| progression classes (equivalently, natural
    density along the progression primes). D is reduced by fourth powers
    first; both inputs must be nonzero.
    """
    if D == 0 or r == 0:
        raise PreconditionError("density_formula wants nonzero D and r")
    D0 = reduce_quartic_twist(D)
    m, swap = _normalize(r)
    pair = _odd_pair(D0, m) if r % 2 else _even_pair(D0, m)
    return pair.swapped() if swap else pair


# ---------------------------------------------------------------------------
# the progression oracle


def _find_representative(D_abs: int, r: int, k: int, x_max: int) -> int:
    off = rho(r)
    r2 = r * r
    base = 2 * k + off
    step = 4 * D_abs
    for x in range(x_max + 1):
        p = r2 + (step * x + base) ** 2
        if is_prime_u64(p):
            return p
    raise NoRepresentativeFound(D_abs, r, k, x_max)


def _classify_class(args: tuple[int, int, int, int]) -> tuple[int, int]:
    D0, r, k, x_max = args
    p = _find_representative(abs(D0), r, k, x_max)
    return k, ap_fast(D0, p)


def density_oracle(
    D: int, r: int, x_max: int = 100_000
) -> tuple[DensityPair, ClassCounts]:
    """Measure the densities by brute force, one prime per progression class.

    Every class k gets an actual prime p = r^2 + (4|D|x + 2k + rho)^2 (first
    x wins), its trace is computed, and the four outcomes are tallied. The
    trace of the class is well defined: primes in one class share their
    quartic data, which a dedicated test checks separately.
    """
    if D == 0 or r == 0:
        raise PreconditionError("density_oracle wants nonzero D and r")
    D0 = reduce_quartic_twist(D)
    ps = progression_set(D0, r)
    jobs = [(D0, r, k, x_max) for k in ps.ks]
    workers = cm_threads()
    if workers > 1 and len(jobs) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_classify_class, jobs))
    else:
        results = [_classify_class(j) for j in jobs]
    assert [k for k, _ in results] == list(ps.ks)  # deterministic order
    plus = minus = 0
    xa = xma = xb = xmb = 0
    for _, a in results:
        if a == 2 * r:
            plus += 1
        elif a == -2 * r:
            minus += 1
        # bucket against the normalized decomposition: odd traces are
        # ±2*alpha with alpha ≡ 1 (mod 4), even ones ±2*beta with beta > 0
        half = a // 2
        if half % 2:
            if half % 4 == 1:
                xa += 1
            else:
                xma += 1
        elif half > 0:
            xb += 1
        else:
            xmb += 1
    n = len(ps.ks)
    pair = DensityPair(Fraction(plus, n), Fraction(minus, n))
    counts = ClassCounts(x_alpha=xa, x_minus_alpha=xma, x_beta=xb, x_minus_beta=xmb)
    assert counts.total == n
    return pair, counts


def sigma_sums(D: int, r: int, x_max: int = 100_000) -> SigmaTriple:
    """Quadratic and quartic symbol sums over class representatives (odd D).

    One prime per progression class, as in density_oracle; sums the
    quadratic symbol (D/p) and the quartic value of D at p, split by the
    parity of k. These are the raw sums the closed forms solve for, so the
    identities relating them to the class counts make good cross-checks.
    """
    if D == 0 or r == 0:
        raise PreconditionError("sigma_sums wants nonzero D and r")
    D0 = reduce_quartic_twist(D)
    if D0 % 2 == 0:
        raise PreconditionError(f"sigma_sums wants odd D (after reduction), got {D0}")
    ps = progression_set(D0, r)
    per_parity: dict[int, list[GaussianInt]] = {0: [], 1: []}
    for k in ps.ks:
        p = _find_representative(ps.D_abs, r, k, x_max)
        ts = two_squares(p)
        per_parity[k % 2].append(quartic_value_of(D0, p, ts).to_gaussian())
    def q2(v: GaussianInt) -> int:
        # square of a fourth root of unity, as ±1
        assert v.im == 0 or v.re == 0
        return 1 if v.im == 0 else -1
    s4_i = sum(per_parity[1], GaussianInt(0, 0))
    s4_ii = sum(per_parity[0], GaussianInt(0, 0))
    s2_i = sum(q2(v) for v in per_parity[1])
    s2_ii = sum(q2(v) for v in per_parity[0])
    n_i, n_ii = len(per_parity[1]), len(per_parity[0])
    return SigmaTriple(
        sigma=n_i + n_ii,
        sigma2=s2_i + s2_ii,
        sigma4=s4_i + s4_ii,
        sigma_i=n_i,
        sigma_ii=n_ii,
        sigma2_i=s2_i,
        sigma2_ii=s2_ii,
        sigma4_i=s4_i,
        sigma4_ii=s4_ii,
    )


# ---------------------------------------------------------------------------
# vanishing: formula-derived verdicts plus the published row patterns


def _odd_zero_row(D0: int, m: int) -> tuple[str, bool] | None:
    """Literal odd-trace row patterns. Returns (row id, plus side is the zero).

    'plus' here means a_p = +2m for the normalized m ≡ 1 (mod 4). The three
    rows share the shape |dbar| in {1,4} x {1,3,5,27,125}; the parity that
    picks the zero side comes from the prime counts ≡ 3,5 (mod 8).
    """
    split = split_d(D0, m)
    sigma = v2(D0)
    block1 = (sigma == 0 and D0 % 4 == 1) or (sigma == 2 and (D0 // 4) % 4 == 3)
    if not block1:
        return None
    dbar_odd = abs(split.dbar) >> sigma
    sh_d, sh_db = split.shape_d, split.shape_dbar
    if dbar_odd == 1:
        s = (
            sh_d.r_counts[3] + sh_d.r_counts[5] + sh_d.t_counts[3] + sh_d.t_counts[5]
            + sh_db.r_counts[3] + sh_db.r_counts[5] + sh_db.t_counts[3] + sh_db.t_counts[5]
        )
        return ("odd:unit-cofactor", s % 2 == 1)
    if dbar_odd in (3, 5, 27, 125):
        s = sh_d.r_counts[3] + sh_d.r_counts[5] + sh_d.t_counts[3] + sh_d.t_counts[5]
        row = "odd:prime-cofactor" if sigma == 0 else "odd:prime-cofactor-x4"
        return (row, s % 2 == 1)
    return None


_EVEN_MIXED_PLUS = {2 * 5, 2 * 125, -2 * 3, -2 * 27, -8 * 5, -8 * 125, 8 * 3, 8 * 27}
_EVEN_MIXED_MINUS = {2 * 3, 2 * 27, -2 * 5, -2 * 125, -8 * 3, -8 * 27, 8 * 5, 8 * 125}


def _even_zero_row(D0: int, m: int) -> tuple[str, bool, bool] | None:
    """Literal even-trace rows. Returns (row id, plus_zero, minus_zero)."""
    sigma = v2(D0)
    if sigma in (0, 2):
        if m % rad_odd(D0) == 0:
            return ("even:radical", True, True)
        return None
    if v2(m) != 1:
        return None  # the published rows only cover 2||beta here
    split = split_d(D0, m)
    dbar = split.dbar
    if dbar in (2, -2):
        plus_zero = (D0 // 2) % 4 == 3
        return ("even:cofactor-2", plus_zero, not plus_zero)
    if dbar in (8, -8):
        plus_zero = (D0 // 8) % 4 == 1
        return ("even:cofactor-8", plus_zero, not plus_zero)
    if dbar in _EVEN_MIXED_PLUS:
        plus_zero = split.d % 4 == 1
        return ("even:mixed", plus_zero, not plus_zero)
    if dbar in _EVEN_MIXED_MINUS:
        plus_zero = split.d % 4 == 3
        return ("even:mixed", plus_zero, not plus_zero)
    return None


def is_zero_pair(D: int, r: int) -> ZeroVerdict:
    """Formula-derived vanishing for both signs, tagged with the matched row.

    The verdict always comes from density_formula. table_row reports which
    published row pattern (if any) covers the instance; a dedicated check
    asserts the two agree wherever a row matches, so a silent divergence
    cannot hide here.
    """
    pair = density_formula(D, r)
    plus_zero = pair.d_plus == 0
    minus_zero = pair.d_minus == 0
    D0 = reduce_quartic_twist(D)
    m, swap = _normalize(r)
    row: str | None = None
    if r % 2:
        hit = _odd_zero_row(D0, m)
        if hit is not None:
            row, norm_plus_zero = hit
            # normalized +2m is the caller's -2r exactly when we swapped
            side_is_plus = norm_plus_zero != swap
            side = pair.d_plus if side_is_plus else pair.d_minus
            assert side == 0, f"zero row disagrees with formula at (D={D}, r={r})"
    else:
        hit = _even_zero_row(D0, m)
        if hit is not None:
            row, z_plus_n, z_minus_n = hit
            if swap:
                z_plus_n, z_minus_n = z_minus_n, z_plus_n
            assert (not z_plus_n or plus_zero) and (not z_minus_n or minus_zero), (
                f"zero row disagrees with formula at (D={D}, r={r})"
            )
    return ZeroVerdict(D=D, r=r, plus_zero=plus_zero, minus_zero=minus_zero, table_row=row)


# ---------------------------------------------------------------------------
# Lang-Trotter constants


def lt_constant(D: int, r: int, prime_bound: int = 1_000_000) -> float:
    """The constant in pi_{D,2r}(N) ~ C * sqrt(N)/log N.

    Product of the universal quadratic-progression constant for r^2 + y^2
    (truncated Euler product over p <= prime_bound) and the exact class
    density of a_p = +2r. Exactly 0.0 when the density side vanishes.
    """
    pair = density_formula(D, r)
    if pair.d_plus == 0:
        return 0.0
    delta = hl_delta(HLPoly(1, 0, r * r), prime_bound)
    return delta * float(pair.d_plus)
