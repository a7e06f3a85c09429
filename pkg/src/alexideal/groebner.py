"""Strong Gröbner bases over the integers.

Polynomials are dicts mapping exponent tuples to nonzero ints.  A term order is
a key function on exponent tuples; larger key means larger monomial.

Completion follows the Euclidean-domain variant of Buchberger's algorithm:
every pair contributes an S-polynomial (lcm of leading coefficients) and, when
neither leading coefficient divides the other, a G-polynomial (Bezout
combination).  Reduction is Euclidean: a term ``c*m`` is reducible by ``g``
when ``lm(g) | m`` and ``c`` lies outside ``[0, lc(g))``.  With this remainder
system the reduced strong basis of an ideal is unique.
"""

from __future__ import annotations

from typing import Callable, Iterable

Monomial = tuple[int, ...]
Poly = dict[Monomial, int]
OrderKey = Callable[[Monomial], tuple]


def grlex(m: Monomial) -> tuple:
    return (sum(m), m)


def block_elim(m: Monomial) -> tuple:
    """First variable eliminated, remaining variables graded-lex."""
    rest = m[1:]
    return (m[0], sum(rest), rest)


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _quo(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def lead(f: Poly, key: OrderKey) -> tuple[Monomial, int]:
    m = max(f, key=key)
    return m, f[m]


def _axpy(f: Poly, c: int, mono: Monomial, g: Poly) -> None:
    """In place ``f -= c * x^mono * g``."""
    for m, v in g.items():
        mm = tuple(x + y for x, y in zip(m, mono))
        nv = f.get(mm, 0) - c * v
        if nv:
            f[mm] = nv
        else:
            f.pop(mm, None)


def _mul_term(g: Poly, c: int, mono: Monomial) -> Poly:
    return {tuple(x + y for x, y in zip(m, mono)): c * v for m, v in g.items()}


class _Basis:
    """Basis elements with cached leading data."""

    def __init__(self, key: OrderKey):
        self.key = key
        self.polys: list[Poly] = []
        self.lms: list[Monomial] = []
        self.lcs: list[int] = []

    def add(self, f: Poly) -> int:
        m, c = lead(f, self.key)
        if c < 0:
            f = {k: -v for k, v in f.items()}
            c = -c
        self.polys.append(f)
        self.lms.append(m)
        self.lcs.append(c)
        return len(self.polys) - 1

    def reducer(self, m: Monomial, c: int, skip: int = -1) -> int:
        """Index of the divisor of ``m`` with smallest leading coefficient that moves ``c``."""
        best = -1
        for i, lm in enumerate(self.lms):
            if i == skip:
                continue
            if _divides(lm, m) and not (0 <= c < self.lcs[i]):
                if best < 0 or self.lcs[i] < self.lcs[best]:
                    best = i
        return best


def reduce_full(f: Poly, basis: _Basis, skip: int = -1, tail_only: bool = False) -> Poly:
    """Euclidean normal form of ``f`` with respect to ``basis``."""
    key = basis.key
    f = dict(f)
    out: Poly = {}
    if tail_only and f:
        m, c = lead(f, key)
        out[m] = c
        del f[m]
    while f:
        m = max(f, key=key)
        c = f[m]
        i = basis.reducer(m, c, skip)
        if i < 0:
            out[m] = c
            del f[m]
            continue
        q = c // basis.lcs[i]
        _axpy(f, q, _quo(m, basis.lms[i]), basis.polys[i])
    return out


def _critical(basis: _Basis, i: int, j: int) -> list[Poly]:
    fi, fj = basis.polys[i], basis.polys[j]
    mi, mj = basis.lms[i], basis.lms[j]
    ci, cj = basis.lcs[i], basis.lcs[j]
    L = _lcm(mi, mj)
    ui, uj = _quo(L, mi), _quo(L, mj)
    out = []
    g, a, b = _ext_gcd(ci, cj)
    lc_lcm = ci // g * cj
    s = _mul_term(fi, lc_lcm // ci, ui)
    _axpy(s, lc_lcm // cj, uj, fj)
    if s:
        out.append(s)
    if ci % cj and cj % ci:
        gp = _mul_term(fi, a, ui)
        _axpy(gp, -b, uj, fj)
        if gp:
            out.append(gp)
    return out


def strong_groebner(gens: Iterable[Poly], key: OrderKey) -> list[Poly]:
    """Reduced strong Gröbner basis of the ideal generated by ``gens``.

    The result is sorted by leading monomial (ascending) and every element has
    a positive leading coefficient.
    """
    basis = _Basis(key)
    for g in gens:
        g = {m: c for m, c in g.items() if c}
        if not g:
            continue
        r = reduce_full(g, basis)
        if r:
            basis.add(r)
    pairs = [(i, j) for j in range(len(basis.polys)) for i in range(j)]
    while pairs:
        i, j = pairs.pop()
        for h in _critical(basis, i, j):
            r = reduce_full(h, basis)
            if r:
                k = basis.add(r)
                pairs.extend((a, k) for a in range(k))
    return _reduced(basis)


def _reduced(basis: _Basis) -> list[Poly]:
    key = basis.key
    n = len(basis.polys)
    # drop elements whose leading term is strongly divisible by another one
    order = sorted(range(n), key=lambda i: (key(basis.lms[i]), basis.lcs[i]))
    kept: list[int] = []
    for i in order:
        redundant = any(
            _divides(basis.lms[k], basis.lms[i]) and basis.lcs[i] % basis.lcs[k] == 0
            for k in kept
        )
        if not redundant:
            kept.append(i)
    small = _Basis(key)
    for i in kept:
        small.add(basis.polys[i])
    out = []
    for idx in range(len(small.polys)):
        out.append(reduce_full(small.polys[idx], small, skip=idx, tail_only=True))
    # tail reduction keeps leading terms, so re-reducing against the final set is stable
    final = _Basis(key)
    for f in out:
        final.add(f)
    result = [reduce_full(final.polys[k], final, skip=k, tail_only=True) for k in range(len(final.polys))]
    result.sort(key=lambda f: key(lead(f, key)[0]))
    return result


def normal_form(f: Poly, basis: list[Poly], key: OrderKey) -> Poly:
    b = _Basis(key)
    for g in basis:
        b.add(g)
    return reduce_full(f, b)
