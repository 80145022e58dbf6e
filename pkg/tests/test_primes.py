import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hwbound.primes import DETERMINISTIC_LIMIT, is_prime, is_semiprime


def test_examples():
    assert is_semiprime(35) == (5, 7)
    assert is_semiprime(26) == (2, 13)
    assert is_semiprime(12) is None
    assert is_semiprime(49) == (7, 7)
    assert is_semiprime(1) is None and is_semiprime(7) is None


def test_small_range_against_sympy():
    for d in range(1, 20000):
        assert is_prime(d) == sympy.isprime(d)
        f = sympy.factorint(d)
        semi = sum(f.values()) == 2
        got = is_semiprime(d)
        assert (got is not None) == semi
        if got:
            p, q = got
            assert p <= q and p * q == d


@settings(max_examples=300)
@given(st.integers(2, 10 ** 18))
def test_large_against_sympy(n):
    assert is_prime(n) == sympy.isprime(n)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 10 ** 6), st.integers(2, 10 ** 6))
def test_products_of_two_primes(a, b):
    p, q = sympy.nextprime(a), sympy.nextprime(b)
    assert is_semiprime(p * q) == (min(p, q), max(p, q))
    assert is_semiprime(p * q * 2) is None


def test_strong_pseudoprimes_rejected():
    # strong pseudoprimes to several small bases
    for n in (2047, 1373653, 3215031751, 3825123056546413051):
        assert not is_prime(n)


def test_limit_enforced():
    with pytest.raises(ValueError):
        is_prime(DETERMINISTIC_LIMIT)
