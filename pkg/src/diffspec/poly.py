"""Dense polynomials over Z_p as constant-first coefficient lists.

Only what field construction needs: multiplication and reduction modulo a
monic polynomial, gcd, and the irreducibility test used to pick moduli.
"""

import itertools
import math


def factorize(m):
    """Prime factorization of a positive integer by trial division."""
    factors = {}
    f = 2
    while f * f <= m:
        while m % f == 0:
            factors[f] = factors.get(f, 0) + 1
            m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def is_prime(m):
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    return all(m % f for f in range(3, math.isqrt(m) + 1, 2))


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim([c % p for c in out])


def rem(a, f, p):
    """Remainder of a modulo f; f need not be monic but must be nonzero."""
    a = [c % p for c in a]
    trim(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        trim(a)
    return a


def mulmod(a, b, f, p):
    return rem(mul(a, b, p), f, p)


def powmod(a, e, f, p):
    result = [1]
    base = rem(a, f, p)
    while e:
        if e & 1:
            result = mulmod(result, base, f, p)
        e >>= 1
        if e:
            base = mulmod(base, base, f, p)
    return result


def sub(a, b, p):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return trim([(x - y) % p for x, y in zip(a, b)])


def gcd(a, b, p):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, rem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def has_root(f, p):
    for r in range(p):
        acc = 0
        for c in reversed(f):
            acc = (acc * r + c) % p
        if acc == 0:
            return True
    return False


def is_irreducible(f, p):
    """Irreducibility of a monic f over Z_p.

    Degrees up to 3 are irreducible iff they have no root. Above that the
    Ben-Or criterion is used: gcd(x^(p^i) - x, f) = 1 for 1 <= i <= deg/2.
    """
    deg = len(f) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if f[0] == 0 or has_root(f, p):
        return False
    if deg <= 3:
        return True
    x = [0, 1]
    xp = x
    for _ in range(deg // 2):
        xp = powmod(xp, p, f, p)
        if len(gcd(f, sub(xp, x, p), p)) > 1:
            return False
    return True


def first_irreducible(p, n):
    """Lexicographically first monic irreducible of degree n.

    Candidates are ordered by their lower coefficient tuple (c0, ..., c_{n-1})
    compared constant-first.
    """
    for lower in itertools.product(range(p), repeat=n):
        f = list(lower) + [1]
        if is_irreducible(f, p):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {n} over Z_{p}")
