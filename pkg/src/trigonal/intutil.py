"""Integer helpers: primality, factorization, divisors, square-free split.

Deterministic: Miller-Rabin uses a fixed witness set (sound for < 3.3e24,
falls back to many fixed witnesses above), Brent-Pollard rho uses a fixed
parameter sequence.
"""

import math

from .errors import InvalidInput

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]

# Deterministic Miller-Rabin witnesses, sufficient for n < 3.3 * 10^24.
_MR_WITNESSES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def is_prime(n):
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n):
    # Brent's cycle variant of Pollard rho with a deterministic seed sweep.
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                k += m
                g = math.gcd(q, n)
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise InvalidInput(f"factorization failed for {n}")


def factorize(n):
    """Return the prime factorization of |n| as a dict prime -> exponent."""
    n = abs(n)
    if n == 0:
        raise InvalidInput("cannot factor 0")
    out = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _brent_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def divisors(n, limit=200000):
    """All positive divisors of |n| (n != 0), ascending."""
    fac = factorize(n)
    divs = [1]
    for p, e in fac.items():
        powers = [p ** i for i in range(e + 1)]
        divs = [d * q for d in divs for q in powers]
        if len(divs) > limit:
            raise InvalidInput("divisor enumeration limit exceeded")
    return sorted(divs)


def squarefree_split(n):
    """Write |n| = s^2 * d with d square-free; return (s, d)."""
    fac = factorize(n)
    s = 1
    d = 1
    for p, e in fac.items():
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return s, d


def is_perfect_square(n):
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n
