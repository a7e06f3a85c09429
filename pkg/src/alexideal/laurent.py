"""Exact Laurent polynomials in one variable ``t`` with integer coefficients.

A :class:`LaurentPoly` is an immutable sparse map ``exponent -> coefficient``.
Zero coefficients are never stored, so the zero polynomial is the empty map.
"""

from __future__ import annotations

import math
import re
from functools import reduce
from typing import Iterable, Mapping


class LaurentPoly:
    """Element of Z[t, t^-1]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> LaurentPoly:
        return cls({k: c})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0) -> LaurentPoly:
        """Build from a dense coefficient list, lowest exponent first."""
        return cls((low + i, c) for i, c in enumerate(coeffs))

    # -- accessors ----------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, k: int) -> int:
        return self._terms.get(k, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True for the units ``±t^k`` of Z[t^{±1}]."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    @property
    def low(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no lowest exponent")
        return next(iter(self._terms))

    @property
    def high(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no highest exponent")
        return next(reversed(self._terms))

    def span(self) -> int:
        """Width ``high - low`` of the exponent support."""
        return self.high - self.low

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        return reduce(math.gcd, self._terms.values(), 0)

    def height(self) -> int:
        return max((abs(c) for c in self._terms.values()), default=0)

    def dense(self) -> list[int]:
        """Coefficients from ``low`` to ``high``."""
        if not self._terms:
            return []
        return [self._terms.get(k, 0) for k in range(self.low, self.high + 1)]

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_monomial() or abs(self.lead_coeff()) != 1:
                raise ValueError("only units can be raised to negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly({e * n: c ** abs(n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t^k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def scale(self, c: int) -> LaurentPoly:
        return LaurentPoly({e: c * v for e, v in self._terms.items()})

    def lead_coeff(self) -> int:
        return self._terms[self.high] if self._terms else 0

    def low_coeff(self) -> int:
        return self._terms[self.low] if self._terms else 0

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def sort_key(self) -> tuple:
        """Ordering used when printing generator lists: degree, then coefficients."""
        if not self._terms:
            return (-1, ())
        return (self.span(), tuple(self.dense()))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return format_poly(self)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
T = LaurentPoly({1: 1})


# ---------------------------------------------------------------------------
# unit normalization, evaluation, involution
# ---------------------------------------------------------------------------

def normalize_unit(a: LaurentPoly) -> LaurentPoly:
    """Return ``u*a`` for the unit ``u = ±t^k`` with lowest exponent 0 and positive leading coefficient."""
    if a.is_zero():
        raise ValueError("cannot unit-normalize the zero polynomial")
    b = a.shift(-a.low)
    return -b if b.lead_coeff() < 0 else b


def unit_equivalent(a: LaurentPoly, b: LaurentPoly) -> bool:
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    return normalize_unit(a) == normalize_unit(b)


def eval_at(a: LaurentPoly, x: int) -> int:
    """Evaluate at ``t = x`` for ``x`` in {1, -1}."""
    if x == 1:
        return sum(c for _, c in a.items())
    if x == -1:
        return sum(c if e % 2 == 0 else -c for e, c in a.items())
    raise ValueError(f"evaluation only defined at t=1 or t=-1, got t={x}")


def invert_t(a: LaurentPoly) -> LaurentPoly:
    """The substitution t -> t^-1."""
    return LaurentPoly({-e: c for e, c in a.items()})


# ---------------------------------------------------------------------------
# division and gcd
# ---------------------------------------------------------------------------

def div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly | None:
    """Return ``q`` with ``a == q*b``, or ``None`` when ``b`` does not divide ``a``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    bh, bc = b.high, b.lead_coeff()
    floor = a.low - b.low  # lowest exponent q could have
    rem = dict(a.items())
    q: dict[int, int] = {}
    while rem:
        top = max(rem)
        k = top - bh
        if k < floor:
            return None
        c, r = divmod(rem[top], bc)
        if r:
            return None
        q[k] = c
        for e, v in b.items():
            nv = rem.get(e + k, 0) - c * v
            if nv:
                rem[e + k] = nv
            else:
                rem.pop(e + k, None)
    return LaurentPoly(q)


def primitive_part(a: LaurentPoly) -> LaurentPoly:
    c = a.content()
    if c == 0:
        return ZERO
    p = LaurentPoly({e: v // c for e, v in a.items()})
    return p


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of dense polynomials (lowest degree first)."""
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        la = a[-1]
        a = [lb * x for x in a]
        for i, v in enumerate(b):
            a[da - db + i] -= la * v
        while a and a[-1] == 0:
            a.pop()
    return a


def _pp_dense(a: list[int]) -> list[int]:
    g = reduce(math.gcd, a, 0)
    out = [x // g for x in a]
    if out[-1] < 0:
        out = [-x for x in out]
    return out


def gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Unit-normalized gcd, via integer contents and a primitive remainder sequence."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if b.is_zero():
        return normalize_unit(a)
    if a.is_zero():
        return normalize_unit(b)
    cont = math.gcd(a.content(), b.content())
    # shifting to exponent 0 is a unit change; Z[t] gcd then lifts to Z[t^±1]
    u = _pp_dense(normalize_unit(a).dense())
    v = _pp_dense(normalize_unit(b).dense())
    if len(u) < len(v):
        u, v = v, u
    while len(v) > 1:
        r = _prem(u, v)
        u, v = v, (_pp_dense(r) if r else [])
        if not v:
            break
    g = u if not v else [1]
    return normalize_unit(LaurentPoly.from_coeffs(g).scale(cont))


def gcd_many(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        raise ValueError("gcd of zero polynomials is undefined")
    return reduce(gcd, nonzero[1:], normalize_unit(nonzero[0]))


def cyclotomic(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    f = LaurentPoly({n: 1, 0: -1})
    for d in range(1, n):
        if n % d == 0:
            q = div_exact(f, cyclotomic(d))
            assert q is not None
            f = q
    return f


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def _monomial_text(e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "t"
    return f"t^{e}"


def format_poly(a: LaurentPoly) -> str:
    """Compact text, highest exponent first, e.g. ``t^2-t+1`` or ``2t^-1+1``."""
    if a.is_zero():
        return "0"
    parts = []
    for e, c in sorted(a.items(), reverse=True):
        mono = _monomial_text(e)
        mag = abs(c)
        body = (str(mag) if mag != 1 or not mono else "") + mono
        sign = "-" if c < 0 else "+"
        parts.append(("-" if c < 0 else "") + body if not parts else sign + body)
    return "".join(parts)


class PolyParseError(ValueError):
    """Malformed polynomial text; ``pos`` is a 0-based character offset."""

    def __init__(self, msg: str, pos: int, text: str = ""):
        super().__init__(f"{msg} at column {pos + 1}")
        self.pos = pos
        self.text = text


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coef>\d+)\s*\*?\s*)?(?P<var>t(?:\s*\^\s*(?P<exp>[+-]?\d+))?)?"
)


def parse_poly(text: str) -> LaurentPoly:
    """Parse ``t^2 - t + 1``, ``3``, ``2t^-1 + 1``, ``2*t^-1`` and similar."""
    pos = 0
    n = len(text)
    acc: dict[int, int] = {}
    first = True
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos or (m.group("coef") is None and m.group("var") is None):
            raise PolyParseError("expected a term", pos, text)
        if m.group("sign") is None and not first:
            raise PolyParseError("expected '+' or '-' between terms", pos, text)
        c = int(m.group("coef")) if m.group("coef") is not None else 1
        if m.group("sign") == "-":
            c = -c
        e = 0
        if m.group("var") is not None:
            e = int(m.group("exp")) if m.group("exp") is not None else 1
        acc[e] = acc.get(e, 0) + c
        pos = m.end()
        first = False
    if first:
        raise PolyParseError("empty polynomial", 0, text)
    return LaurentPoly(acc)
