"""Deterministic primality and semiprime factorization for module dimensions."""

from __future__ import annotations

# The first 13 primes form a deterministic Miller-Rabin base set below 3.3e24.
_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _BASES:
        if n % p == 0:
            return n == p
    if n >= DETERMINISTIC_LIMIT:
        raise ValueError(f"{n} is beyond the deterministic Miller-Rabin range")
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _icbrt(n: int) -> int:
    """Floor of the real cube root, exact for any size."""
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x ** 3 > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def is_semiprime(d: int) -> tuple[int, int] | None:
    """``(p, q)`` with ``p <= q`` prime and ``p q = d``, else ``None``.

    Trial division runs to the cube root; a composite with no factor there is
    a product of exactly two primes, found by continuing to the square root.
    """
    if d < 4 or is_prime(d):
        return None
    cube = _icbrt(d) + 1
    p = 2
    while p <= cube:
        if d % p == 0:
            q = d // p
            return (p, q) if is_prime(q) else None
        p += 1 if p == 2 else 2
    while d % p:
        p += 2
    return p, d // p
