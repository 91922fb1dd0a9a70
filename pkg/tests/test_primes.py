from franelcheck.primes import is_prime, primes_in_range


def test_small_primes():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_carmichael_numbers_rejected():
    for n in (561, 1105, 1729, 2465, 2821, 6601):
        assert not is_prime(n)


def test_large_prime_and_composite():
    assert is_prime(2**61 - 1)
    assert not is_prime((2**31 - 1) * (2**19 - 1))


def test_primes_in_range():
    assert primes_in_range(5, 20) == [5, 7, 11, 13, 17, 19]
    assert primes_in_range(4, 4) == []
    assert primes_in_range(10, 5) == []
    assert len(primes_in_range(1, 200)) == 46


def test_range_above_sieve_limit_uses_direct_tests():
    lo = 10**7 + 1
    out = primes_in_range(lo, lo + 40)
    assert out == [n for n in range(lo, lo + 41) if is_prime(n)]
    assert all(is_prime(n) for n in out)
