"""Kernel-level tests, including the native/pure parity contract."""

import math

import pytest

from franelcheck.kernels import _native, pure

RINGS = [(5, 1), (5, 2), (7, 2), (11, 1), (13, 3), (17, 4), (23, 2), (31, 3)]

needs_native = pytest.mark.skipif(_native is None, reason="compiled kernels not built")


def test_inverse_table_small():
    inv = pure.inverse_table(7, 49, 6)
    assert inv[0] == 0
    for i in range(1, 7):
        assert inv[i] * i % 49 == 1


def test_inverse_table_bound():
    with pytest.raises(ValueError):
        pure.inverse_table(7, 49, 7)


def test_factorial_tables_small():
    fact, inv_fact = pure.factorial_tables(7, 343, 6)
    assert fact == [1, 1, 2, 6, 24, 120, 720 % 343]
    for i in range(7):
        assert fact[i] * inv_fact[i] % 343 == 1


def test_franel_table_values():
    assert pure.franel_table(5, 25, 5) == [1, 2, 10, 6, 21]
    assert pure.franel_table(5, 125, 5)[-1] == 96
    assert pure.franel_table(11, 11, 1) == [1]
    with pytest.raises(ValueError):
        pure.franel_table(5, 25, 6)


def test_central_binom_table_values():
    assert pure.central_binom_table(7, 343, 5) == [1, 2, 6, 20, 70 % 343]
    # upper-range entries are divisible by p but nonzero mod p^2
    assert pure.central_binom_table(5, 5, 5)[3:] == [0, 0]
    assert pure.central_binom_table(5, 25, 5)[3] == 20
    assert pure.central_binom_table(5, 25, 5)[4] == 70 % 25


def test_central_binom_against_comb():
    for p, e in RINGS:
        m = p**e
        got = pure.central_binom_table(p, m, p)
        assert got == [math.comb(2 * k, k) % m for k in range(p)]


def test_binom_shift_table_integer_r():
    # r = 0: all ones; r = 2: binom(k+2,k)
    assert pure.binom_shift_table(7, 49, 0, 7) == [1] * 7
    got = pure.binom_shift_table(7, 49, 2, 7)
    assert got == [math.comb(k + 2, k) % 49 for k in range(7)]


def test_fpoly_table_values():
    # x = 0 collapses to [1, 0, 0, ...]
    assert pure.fpoly_table(7, 49, 0, 7) == [1, 0, 0, 0, 0, 0, 0]
    got = pure.fpoly_table(7, 49, 2, 7)
    assert got[2] == 32
    # x = 1 must reproduce the cubed-row sums
    assert pure.fpoly_table(7, 49, 1, 7) == pure.franel_table(7, 49, 7)


def test_genfranel_closed_forms():
    for p, e in [(7, 2), (11, 1), (13, 2)]:
        m = p**e
        assert pure.genfranel_table(p, m, 2, p) == pure.central_binom_table(p, m, p)
        assert pure.genfranel_table(p, m, 3, p) == pure.franel_table(p, m, p)
        assert pure.genfranel_table(p, m, 1, p) == [pow(2, k, m) for k in range(p)]


def test_genfranel_exact_small():
    got = pure.genfranel_table(13, 13**2, 4, 8)
    for k in range(8):
        assert got[k] == sum(math.comb(k, j) ** 4 for j in range(k + 1)) % 13**2


def test_weighted_cube_table_against_direct():
    p, m, w = 11, 121, 121 - 8  # w = -8
    got = pure.weighted_cube_table(p, m, w, p)
    for n in range(p):
        direct = sum(math.comb(n, k) ** 3 * (-8) ** k for k in range(n + 1)) % m
        assert got[n] == direct
    assert pure.weighted_cube_table(p, m, 1, p) == pure.franel_table(p, m, p)


def test_triangle_weighted_sums_against_direct():
    for p in (5, 7, 11):
        m = p**4
        got = pure.triangle_weighted_sums(p, m)
        assert len(got) == p - 1
        for k in range(p - 1):
            direct = math.comb(2 * k, k) * sum(
                (2 * n + 1) * math.comb(n + k, 2 * k) for n in range(k, p)
            )
            assert got[k] == direct % m


@needs_native
@pytest.mark.parametrize("p,e", RINGS)
def test_native_pure_parity(p, e):
    m = p**e
    assert _native.inverse_table(p, m, p - 1) == pure.inverse_table(p, m, p - 1)
    assert _native.factorial_tables(p, m, p - 1) == pure.factorial_tables(p, m, p - 1)
    assert _native.franel_table(p, m, p) == pure.franel_table(p, m, p)
    assert _native.central_binom_table(p, m, p) == pure.central_binom_table(p, m, p)
    for rbar in (0, 2, m - 1, m // 2):
        assert _native.binom_shift_table(p, m, rbar, p) == pure.binom_shift_table(p, m, rbar, p)
    for x in (0, 1, 2, m - 2):
        assert _native.fpoly_table(p, m, x, p) == pure.fpoly_table(p, m, x, p)
    for r in (1, 2, 3, 4, 6):
        assert _native.genfranel_table(p, m, r, p) == pure.genfranel_table(p, m, r, p)
    for w in (1, (m - 8) % m):
        assert _native.weighted_cube_table(p, m, w, p) == pure.weighted_cube_table(p, m, w, p)
    assert _native.triangle_weighted_sums(p, p**4) == pure.triangle_weighted_sums(p, p**4)


@needs_native
def test_native_parity_larger_prime():
    p = 499
    m = p * p
    assert _native.fpoly_table(p, m, 3, p) == pure.fpoly_table(p, m, 3, p)
    assert _native.triangle_weighted_sums(p, p**4) == pure.triangle_weighted_sums(p, p**4)


def test_dispatch_large_modulus_falls_back():
    from franelcheck import kernels

    p = 2_000_003  # p^4 far beyond the 64-bit native range
    assert kernels.backend_name(p**4) == "pure"
    # table construction still works through the dispatcher
    assert kernels.franel_table(p, p**4, 3) == [1, 2, 10]
