import json

import pytest

from cmtrace.density import cm_threads, lt_constant
from cmtrace.errors import PreconditionError
from cmtrace.lab import (
    _COLUMNS,
    SweepReport,
    is_prime_u64,
    lt_predict,
    report_emit,
    report_from_dict,
    sweep,
)
from oracles import brute_ap, trial_is_prime


# ---------------------------------------------------------------------------
# primality front door

def test_is_prime_u64_examples():
    assert is_prime_u64(2)
    assert is_prime_u64(3)
    assert not is_prime_u64(0)
    assert not is_prime_u64(1)
    assert is_prime_u64(1_000_003)
    assert not is_prime_u64(1_000_001)  # 101 * 9901
    assert is_prime_u64(18446744073709551557)  # largest prime below 2^64
    assert not is_prime_u64((1 << 64) - 1)


def test_is_prime_u64_strong_pseudoprimes():
    # classic strong pseudoprimes to the first few bases; the fixed
    # 12-base battery must still reject them
    assert not is_prime_u64(3215031751)          # spsp to 2, 3, 5, 7
    assert not is_prime_u64(3474749660383)       # spsp to 2..13
    assert not is_prime_u64(341550071728321)     # spsp to 2..17


def test_is_prime_u64_vs_trial_division():
    for n in range(10_000):
        assert is_prime_u64(n) == trial_is_prime(n), n


def test_is_prime_u64_rejects():
    with pytest.raises(PreconditionError):
        is_prime_u64(-1)
    with pytest.raises(PreconditionError):
        is_prime_u64(1 << 64)


# ---------------------------------------------------------------------------
# sweeps

def test_sweep_tiny_all_plus():
    rep = sweep(1, 1, 100)
    # p = 1 + y^2 <= 100: 5, 17, 37; all have trace +2 on y^2 = x^3 + x
    assert rep.n_primes == 3
    assert (rep.n_plus, rep.n_minus, rep.n_other) == (3, 0, 0)
    assert rep.empirical_plus == 1.0 and rep.empirical_minus == 0.0
    assert rep.predicted.d_plus == 1 and rep.predicted.d_minus == 0
    assert rep.pi_lt == 3


def test_sweep_fixed_even_leg():
    rep = sweep(2, 2, 200)
    # p = 4 + y^2 <= 200: 5, 13, 29, 53, 173; beta = 2 for each, and the
    # doubling curve sends them all to +4
    assert rep.n_primes == 5
    assert (rep.n_plus, rep.n_minus, rep.n_other) == (5, 0, 0)


def test_sweep_all_minus():
    rep = sweep(1, 3, 1_000_000)
    assert rep.n_primes > 50
    assert rep.n_plus == 0
    assert rep.n_minus == rep.n_primes
    assert rep.empirical_minus == 1.0


def test_sweep_tallies_consistent():
    rep = sweep(-21, 1, 50_000)
    assert rep.n_plus + rep.n_minus + rep.n_other == rep.n_primes
    assert rep.n_other > 0  # other trace values certainly occur
    assert abs(rep.empirical_plus - rep.n_plus / rep.n_primes) < 1e-6
    assert abs(rep.empirical_minus - rep.n_minus / rep.n_primes) < 1e-6
    assert rep.pi_lt == rep.n_plus


def test_sweep_matches_brute_force_classification():
    D, r, N = 3, 1, 10_000
    n_primes = n_plus = n_minus = 0
    for y in range(2, 100, 2):
        p = 1 + y * y
        if p > N:
            break
        if not trial_is_prime(p) or (2 * abs(D)) % p == 0:
            continue
        a = brute_ap(D, p)
        n_primes += 1
        n_plus += a == 2 * r
        n_minus += a == -2 * r
    rep = sweep(D, r, N)
    assert (rep.n_primes, rep.n_plus, rep.n_minus) == (n_primes, n_plus, n_minus)


def test_sweep_excludes_bad_reduction():
    # r = 2: p = 4 + 1 = 5 divides 2D for D = 5, so it must be skipped
    rep5 = sweep(5, 2, 200)
    rep3 = sweep(3, 2, 200)
    assert rep5.n_primes == rep3.n_primes - 1


def test_sweep_thread_count_invariance(monkeypatch):
    from cmtrace.lab import report_to_dict

    monkeypatch.setenv("CM_THREADS", "1")
    a = report_to_dict(sweep(-21, 1, 100_000_000))
    monkeypatch.setenv("CM_THREADS", "4")
    b = report_to_dict(sweep(-21, 1, 100_000_000))
    a.pop("elapsed_seconds")
    b.pop("elapsed_seconds")
    assert a == b


def test_sweep_rejects():
    with pytest.raises(PreconditionError):
        sweep(0, 1, 100)
    with pytest.raises(PreconditionError):
        sweep(1, 0, 100)
    with pytest.raises(PreconditionError):
        sweep(1, 5, 25)  # N below r^2 + 1
    with pytest.raises(PreconditionError):
        sweep(1, 1, 1 << 65)


# ---------------------------------------------------------------------------
# the count prediction

def test_lt_predict_value():
    v = lt_predict(1, 1, 100_000_000)
    assert 740 < v < 750  # ~745 x^2+1 style primes with trace +2 up to 1e8


def test_lt_predict_identity():
    from math import log, sqrt

    v = lt_predict(5, 1, 10**6, prime_bound=10_000)
    c = lt_constant(5, 1, 10_000)
    assert v == c * sqrt(10**6) / log(10**6)


def test_lt_predict_rejects():
    with pytest.raises(PreconditionError):
        lt_predict(1, 1, 2)


# ---------------------------------------------------------------------------
# report plumbing

def test_report_json_round_trip(tmp_path):
    rep = sweep(-21, 2, 200_000)
    out = tmp_path / "report.json"
    text = report_emit(rep, "json", str(out))
    assert out.read_text(encoding="utf-8") == text
    back = report_from_dict(json.loads(text))
    assert back == rep


def test_report_csv_header():
    rep = sweep(2, 2, 200)
    text = report_emit(rep, "csv")
    lines = text.strip().splitlines()
    assert lines[0] == ",".join(_COLUMNS)
    assert len(lines) == 2
    row = lines[1].split(",")
    assert row[0] == "2" and row[3] == "5"  # D and n_primes


def test_report_emit_rejects():
    rep = sweep(1, 1, 100)
    with pytest.raises(PreconditionError):
        report_emit(rep, "xml")
    with pytest.raises(PreconditionError):
        report_emit(rep, "json", "/nonexistent-dir/report.json")


def test_report_fields_are_rounded():
    rep = sweep(-21, 1, 300_000)
    for v in (rep.empirical_plus, rep.empirical_minus, rep.lt_predicted):
        assert v == float(f"{v:.6g}")


# ---------------------------------------------------------------------------
# worker count plumbing

def test_cm_threads_env(monkeypatch):
    monkeypatch.setenv("CM_THREADS", "3")
    assert cm_threads() == 3
    monkeypatch.setenv("CM_THREADS", "0")
    with pytest.raises(PreconditionError):
        cm_threads()
    monkeypatch.setenv("CM_THREADS", "two")
    with pytest.raises(PreconditionError):
        cm_threads()
    monkeypatch.delenv("CM_THREADS")
    assert cm_threads() >= 1
