"""Prime enumeration and deterministic primality testing."""

from __future__ import annotations

# Witness set making Miller-Rabin deterministic for n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Above this bound a sieve is no longer worthwhile; fall back to per-number tests.
SIEVE_LIMIT = 10**7


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin, exact below 3.3e24)."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi, ascending."""
    if hi < lo:
        return []
    if hi <= SIEVE_LIMIT:
        return _sieve_range(max(lo, 2), hi)
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


def _sieve_range(lo: int, hi: int) -> list[int]:
    if hi < 2:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(hi**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, hi + 1, i)))
    return [n for n in range(lo, hi + 1) if sieve[n]]
