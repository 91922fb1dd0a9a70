import math
from fractions import Fraction

import pytest

from franelcheck.modring import jacobi
from franelcheck.primes import primes_in_range
from franelcheck.report import render_json
from franelcheck.suite import REGISTRY, check_ids, run_check, run_suite

ALL_IDS = [
    "T14_r", "C15", "C16", "C17", "C18", "C19", "C110", "C111", "C112_r",
    "K3", "K4", "T21_rx", "C25", "C26_x", "C27_x", "L24", "L25", "L26a",
    "L26b", "WOL", "LEH", "ST11_anchor", "JV", "R1a", "R1b", "R1c", "S11conj",
]


def test_registry_is_complete():
    assert set(check_ids()) == set(ALL_IDS)
    classes = {REGISTRY[c].check_class for c in ALL_IDS}
    assert classes == {"theorem", "lemma", "derived", "conjecture"}
    assert REGISTRY["R1a"].check_class == "conjecture"
    assert REGISTRY["R1c"].check_class == "derived"
    assert REGISTRY["L26b"].modulus_exponent == 4


def test_spot_values_at_p5():
    r = run_check("C15", 5)[0]
    assert (r.lhs, r.rhs, r.passed) == (24, 24, True)
    r = run_check("C111", 5)[0]
    assert (r.lhs, r.rhs) == (19, 19)
    r = run_check("L25", 5)[0]
    assert (r.lhs, r.rhs, r.modulus_exponent) == (96, 96, 3)


def test_run_check_errors():
    with pytest.raises(ValueError):
        run_check("NOPE", 5)
    with pytest.raises(ValueError):
        run_check("C15", 4)
    with pytest.raises(ValueError):
        run_check("C15", 3)


def test_c112_rows_respect_min_prime():
    rows = run_check("C112_r", 5)
    assert [r.params["r"] for r in rows] == [1, 2, 3, 4]
    rows = run_check("C112_r", 7)
    assert [r.params["r"] for r in rows] == [1, 2, 3, 4, 5, 6]
    assert all(r.passed for r in rows)


def test_t14_skips_r_with_bad_denominator():
    rows = run_check("T14_r", 5)
    rs = [r.params["r"] for r in rows]
    assert "7/5" not in rs
    assert "-1/2" in rs
    rows7 = run_check("T14_r", 7)
    assert "7/5" in [r.params["r"] for r in rows7]


def test_t14_at_r0_reproduces_c15_sides():
    for p in (7, 11, 97):
        t14 = {r.params["r"]: r for r in run_check("T14_r", p)}
        c15 = run_check("C15", p)[0]
        assert (t14["0"].lhs, t14["0"].rhs) == (c15.lhs, c15.rhs)


def test_t14_at_negative_half_reproduces_c18_sides():
    for p in (7, 11, 97):
        t14 = {r.params["r"]: r for r in run_check("T14_r", p)}
        c18 = run_check("C18", p)[0]
        assert (t14["-1/2"].lhs, t14["-1/2"].rhs) == (c18.lhs, c18.rhs)


def test_t21_at_x1_matches_t14():
    for p in (7, 13):
        t21 = {(r.params["r"], r.params["x"]): r for r in run_check("T21_rx", p)}
        t14 = {r.params["r"]: r for r in run_check("T14_r", p)}
        for rkey, row in t14.items():
            assert t21[(rkey, "1")].lhs == row.lhs
            assert t21[(rkey, "1")].rhs == row.rhs


def test_c16_mutation_sensitivity():
    # replacing the coefficient -2/3 by -1/3 must break the check at every prime
    for p in primes_in_range(5, 97):
        row = run_check("C16", p)[0]
        m = p * p
        wrong = Fraction(-1, 3) * jacobi(p, 3)
        wrong_rhs = wrong.numerator * pow(wrong.denominator, -1, m) % m
        assert row.lhs == row.rhs
        assert row.lhs != wrong_rhs


def test_l24_rows_brute_force():
    p, m = 7, 49
    rows = run_check("L24", p)
    assert [r.params["k"] for r in rows] == list(range(1, p))
    for r in rows:
        k = r.params["k"]
        lhs = k * math.comb(2 * k, k) * math.comb(2 * (p - k), p - k) % m
        rhs = (-1) ** (2 * k // p - 1) * 2 * p % m
        assert (r.lhs, r.rhs) == (lhs, rhs) and r.passed


def test_l26_rows_brute_force():
    p = 7
    m2, m4 = p**2, p**4
    for r in run_check("L26a", p):
        k = r.params["k"]
        assert r.lhs == math.comb(p - 1, k) * math.comb(p + k, k) % m2
        assert r.rhs == (-1) ** k % m2
        assert r.passed
    rows = run_check("L26b", p)
    assert [r.params["k"] for r in rows] == list(range(p - 1))  # k = p-1 excluded
    for r in rows:
        k = r.params["k"]
        lhs = math.comb(2 * k, k) * sum(
            (2 * n + 1) * math.comb(n + k, 2 * k) for n in range(k, p)
        ) % m4
        assert r.lhs == lhs and r.passed


def test_wol_parts():
    rows = {r.params["part"]: r for r in run_check("WOL", 11)}
    assert rows["H1"].modulus_exponent == 2
    assert rows["H2"].modulus_exponent == 1
    assert rows["CB"].modulus_exponent == 3
    assert rows["CB"].lhs == math.comb(21, 10) % 11**3 == rows["CB"].rhs == 1


def test_jv_rows():
    p = 11
    rows = run_check("JV", p)
    assert len(rows) == p and all(r.passed for r in rows)


def test_s11conj_branches():
    row = run_check("S11conj", 7)[0]
    assert row.params == {"x": 2, "y": 1}
    assert row.rhs == (4 * 4 - 14) % 49
    row = run_check("S11conj", 5)[0]
    assert row.params == {"branch": "p=2 (mod 3)"}
    assert row.rhs == 0
    assert row.passed


def test_st11_anchor_small():
    row = run_check("ST11_anchor", 7)[0]
    assert row.lhs == sum(math.comb(2 * k, k) for k in range(7)) % 49
    assert row.rhs == 1  # 7 = 1 mod 3
    assert row.passed


def _fpoly_frac(n, x):
    return sum(
        Fraction(math.comb(n, k) * math.comb(k, n - k) * math.comb(2 * k, k)) * x**k
        for k in range((n + 1) // 2, n + 1)
    )


def _binom_shift_frac(r, k):
    v = Fraction(1)
    for j in range(1, k + 1):
        v *= Fraction(r + j, j)
    return v


def _modfrac(q, m):
    return q.numerator * pow(q.denominator, -1, m) % m


def test_parameterized_rows_match_exact_rational_summation():
    # both sides of the table-built rows recomputed by Fraction arithmetic
    p = 31
    m2 = p * p
    for row in run_check("T21_rx", p):
        r, x = Fraction(row.params["r"]), Fraction(row.params["x"])
        lhs = _modfrac(sum((-1) ** l * _binom_shift_frac(r, l) * _fpoly_frac(l, x) for l in range(p)), m2)
        rhs = _modfrac(sum(math.comb(2 * k, k) * x**k * _binom_shift_frac(r, k) ** 2 for k in range(p)), m2)
        assert (lhs, rhs) == (row.lhs, row.rhs), row.params
    for row in run_check("C27_x", p):
        x = Fraction(row.params["x"])
        lhs = _modfrac(sum(Fraction((-1) ** l, l) * _fpoly_frac(l, x) for l in range(1, p)), m2)
        rhs = _modfrac(p * sum(x**k / Fraction(k * k) for k in range((p + 1) // 2, p)), m2)
        assert (lhs, rhs) == (row.lhs, row.rhs), row.params
    for row in run_check("C112_r", p):
        r = row.params["r"]
        gf = lambda k: sum(math.comb(k, j) ** r for j in range(k + 1))
        lhs = _modfrac(sum(Fraction((-1) ** (k * r) * gf(k), k ** (r - 1)) for k in range(1, p)), p)
        assert (lhs, 0) == (row.lhs, row.rhs), row.params
    row = run_check("R1b", p)[0]
    fr = [sum(math.comb(n, k) ** 3 for k in range(n + 1)) for n in range(p)]
    assert row.lhs == _modfrac(sum(Fraction(fr[k], 8**k) for k in range(p)), m2)
    row = run_check("R1c", p)[0]
    assert row.lhs == _modfrac(sum(Fraction(fr[k], k * 8**k) for k in range(1, p)), p)


def test_full_suite_small_range_passes():
    rep = run_suite(primes=primes_in_range(5, 23))
    assert not rep.failures()
    assert not rep.errors()
    assert rep.exit_code() == 0
    assert rep.exit_code(strict_conjectures=True) == 0


def test_suite_row_ordering_and_filters():
    rep = run_suite(ids=["C15"], primes=[5])
    assert len(rep.rows) == 1
    rep = run_suite(ids=["C16", "C15"], primes=[7, 5])
    assert [(r.check_id, r.prime) for r in rep.rows] == [
        ("C15", 5), ("C15", 7), ("C16", 5), ("C16", 7),
    ]


def test_suite_errors():
    with pytest.raises(ValueError):
        run_suite(primes=[])
    with pytest.raises(ValueError):
        run_suite(primes=[4])
    with pytest.raises(ValueError):
        run_suite(ids=["NOPE"], primes=[5])
    with pytest.raises(ValueError):
        run_suite(primes=[3])  # prime, but below every check's smallest admissible p
    with pytest.raises(ValueError):
        run_suite(ids=[], primes=[5])


def test_suite_deterministic_across_workers():
    primes = primes_in_range(5, 31)
    rep1 = run_suite(primes=primes, workers=1)
    rep2 = run_suite(primes=primes, workers=2)
    rep8 = run_suite(primes=primes, workers=8)
    assert render_json(rep1) == render_json(rep2) == render_json(rep8)
