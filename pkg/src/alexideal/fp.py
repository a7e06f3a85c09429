"""Dense univariate polynomials over F_p.

Polynomials are lists of ints in ``[0, p)``, lowest degree first, with no
trailing zeros; the zero polynomial is ``[]``.
"""

from __future__ import annotations

import random


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce(a, p: int) -> list[int]:
    return trim([x % p for x in a])


def add(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def sub(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return trim(out)


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = a[:]
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] = (a[i + k] - c * y) % p
        trim(a)
    return trim(q), a


def monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def gcd(a, b, p):
    while b:
        a, b = b, divmod_(a, b, p)[1]
    return monic(a, p)


def powmod(base, e: int, mod, p):
    result = [1]
    base = divmod_(base, mod, p)[1]
    while e:
        if e & 1:
            result = divmod_(mul(result, base, p), mod, p)[1]
        base = divmod_(mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def derivative(a, p):
    return trim([(i * a[i]) % p for i in range(1, len(a))])


def strip_t(a: list[int]) -> list[int]:
    """Remove factors of ``t`` (units in the Laurent ring)."""
    i = 0
    while i < len(a) and a[i] == 0:
        i += 1
    return a[i:]


def is_irreducible(f, p: int) -> bool:
    """Ben-Or test: ``f`` of degree n is irreducible iff gcd(f, t^(p^i) - t) = 1 for i <= n/2."""
    n = len(f) - 1
    if n < 1:
        return False
    f = monic(f, p)
    x = [0, 1]
    h = x
    for _ in range(n // 2):
        h = powmod(h, p, f, p)
        if len(gcd(f, sub(h, x, p), p)) > 1:
            return False
    return True


def is_irreducible_trial(f, p: int) -> bool:
    """Trial division by every monic polynomial of degree at most deg(f)/2."""
    n = len(f) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for idx in range(p ** d):
            g = []
            k = idx
            for _ in range(d):
                g.append(k % p)
                k //= p
            g.append(1)
            if not divmod_(f, g, p)[1]:
                return False
    return True


def _squarefree(f, p):
    """Squarefree decomposition as a list of (factor, multiplicity)."""
    out = []
    f = monic(f, p)
    if len(f) <= 1:
        return out
    d = derivative(f, p)
    if not d:
        # f is a p-th power
        root = [f[i * p] for i in range(len(f) // p + 1) if i * p < len(f)]
        return [(g, m * p) for g, m in _squarefree(root, p)]
    c = gcd(f, d, p)
    w = divmod_(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = gcd(w, c, p)
        z = divmod_(w, y, p)[0]
        if len(z) > 1:
            out.append((monic(z, p), i))
        i += 1
        w = y
        c = divmod_(c, y, p)[0]
    if len(c) > 1:
        root = [c[i * p] for i in range(len(c) // p + 1) if i * p < len(c)]
        out.extend((g, m * p) for g, m in _squarefree(root, p))
    return out


def _distinct_degree(f, p):
    out = []
    x = [0, 1]
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, d))
            f = divmod_(f, g, p)[0]
            h = divmod_(h, f, p)[1]
    if len(f) > 1:
        out.append((monic(f, p), len(f) - 1))
    return out


def _equal_degree(f, d, p, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            t = a
            acc = a
            for _ in range(d - 1):
                t = divmod_(mul(t, t, p), f, p)[1]
                acc = add(acc, t, p)
            b = acc
        else:
            b = sub(powmod(a, (p ** d - 1) // 2, f, p), [1], p)
        g = gcd(f, b, p)
        if 1 < len(g) < len(f):
            h = divmod_(f, g, p)[0]
            return _equal_degree(g, d, p, rng) + _equal_degree(monic(h, p), d, p, rng)


def factor(f, p: int) -> list[tuple[list[int], int]]:
    """Monic irreducible factors with multiplicity, sorted canonically."""
    rng = random.Random(0x5EED)
    out = []
    for g, m in _squarefree(f, p):
        for h, d in _distinct_degree(g, p):
            for q in _equal_degree(h, d, p, rng):
                out.append((q, m))
    out.sort(key=lambda fm: (len(fm[0]), fm[0][::-1], fm[1]))
    return out
