"""Finitely generated ideals of Z[t, t^-1].

Internally an ideal ``I`` is modelled as ``I + (ts - 1)`` inside Z[t, s] and
stored through its reduced strong Gröbner basis under graded-lex order with
t > s.  That basis is canonical, so ideal equality is basis equality, and
membership is reduction to zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable

from . import fp
from .groebner import Poly, block_elim, grlex, normal_form, strong_groebner
from .laurent import (
    LaurentPoly,
    div_exact,
    eval_at,
    gcd_many,
    invert_t,
    normalize_unit,
)

MAX_PRIME = 97
MAX_IRRED_DEGREE = 12


class ResourceBoundExceeded(RuntimeError):
    """A desk-scale bound was exceeded; ``bound`` names it."""

    def __init__(self, bound: str, value, limit):
        super().__init__(f"{bound} = {value} exceeds the limit {limit}")
        self.bound = bound
        self.value = value
        self.limit = limit


INFINITE = math.inf

_RELATOR: Poly = {(1, 1): 1, (0, 0): -1}


def _to_ts(f: LaurentPoly) -> Poly:
    # t^k for k < 0 becomes s^-k
    return {((e, 0) if e >= 0 else (0, -e)): c for e, c in f.items()}


def _to_ts3(f: LaurentPoly, w: int = 0) -> Poly:
    return {((w, e, 0) if e >= 0 else (w, 0, -e)): c for e, c in f.items()}


def _from_ts(f: Poly) -> LaurentPoly:
    acc: dict[int, int] = {}
    for m, c in f.items():
        e = m[-2] - m[-1]
        acc[e] = acc.get(e, 0) + c
    return LaurentPoly(acc)


class LaurentIdeal:
    """A nonzero ideal of Z[t^{±1}] with its canonical normal form."""

    def __init__(self, gens: Iterable[LaurentPoly | int]):
        gens = [g if isinstance(g, LaurentPoly) else LaurentPoly.const(g) for g in gens]
        if not any(not g.is_zero() for g in gens):
            raise ValueError("an ideal needs at least one nonzero generator")
        self.user_generators: tuple[LaurentPoly, ...] = tuple(gens)
        # Laurent generators are shifted into Z[t] first; units don't change the ideal
        seeds = [_to_ts(g.shift(-g.low)) for g in gens if not g.is_zero()]
        basis = strong_groebner(seeds + [_RELATOR], grlex)
        self.normal_form: tuple[tuple[tuple[tuple[int, int], int], ...], ...] = tuple(
            tuple(sorted(b.items())) for b in basis
        )

    # -- basic views -----------------------------------------------------
    @property
    def basis(self) -> list[Poly]:
        return [dict(b) for b in self.normal_form]

    @cached_property
    def generators(self) -> tuple[LaurentPoly, ...]:
        """Projected reduced basis, unit-normalized, deduplicated and sorted."""
        seen = {normalize_unit(_from_ts(b)) for b in self.basis if _from_ts(b)}
        return tuple(sorted(seen, key=LaurentPoly.sort_key))

    @cached_property
    def display_generators(self) -> tuple[LaurentPoly, ...]:
        """``generators`` with redundant members dropped greedily, largest first."""
        gens = list(self.generators)
        for g in sorted(gens, key=LaurentPoly.sort_key, reverse=True):
            rest = [h for h in gens if h != g]
            if rest and LaurentIdeal(rest) == self:
                gens = rest
        return tuple(gens)

    def is_unit(self) -> bool:
        return self.normal_form == (((((0, 0), 1),),))

    def __eq__(self, other):
        if not isinstance(other, LaurentIdeal):
            return NotImplemented
        return self.normal_form == other.normal_form

    def __hash__(self):
        return hash(self.normal_form)

    def __contains__(self, f) -> bool:
        return member(self, f)

    def __mul__(self, other: LaurentIdeal) -> LaurentIdeal:
        return product(self, other)

    def __add__(self, other: LaurentIdeal) -> LaurentIdeal:
        return ideal_sum(self, other)

    def __pow__(self, n: int) -> LaurentIdeal:
        return ideal_power(self, n)

    def __str__(self):
        return format_ideal(self)

    def __repr__(self):
        return f"LaurentIdeal({format_ideal(self)!r})"


class _ZeroIdeal:
    """The zero ideal, kept apart from :class:`LaurentIdeal`."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO_IDEAL"

    def __str__(self):
        return "0"


ZERO_IDEAL = _ZeroIdeal()


def new_ideal(gens: Iterable[LaurentPoly | int]) -> LaurentIdeal:
    return LaurentIdeal(gens)


def unit_ideal() -> LaurentIdeal:
    return LaurentIdeal([1])


def principal(f: LaurentPoly | int) -> LaurentIdeal:
    return LaurentIdeal([f])


def format_ideal(I) -> str:
    if I is ZERO_IDEAL:
        return "0"
    return "; ".join(str(g) for g in I.display_generators)


def parse_ideal(text: str) -> LaurentIdeal:
    """Parse ``"3; t+1"``."""
    from .laurent import PolyParseError, parse_poly

    gens = []
    offset = 0
    for chunk in text.split(";"):
        if chunk.strip():
            try:
                gens.append(parse_poly(chunk))
            except PolyParseError as exc:
                raise PolyParseError(str(exc).rsplit(" at column", 1)[0], offset + exc.pos, text) from None
        offset += len(chunk) + 1
    if not gens:
        raise PolyParseError("empty ideal", 0, text)
    if all(g.is_zero() for g in gens):
        raise PolyParseError("the zero ideal is not a valid input", 0, text)
    return LaurentIdeal(gens)


# ---------------------------------------------------------------------------
# membership and equality
# ---------------------------------------------------------------------------

def member(I: LaurentIdeal, f: LaurentPoly | int) -> bool:
    if isinstance(f, int):
        f = LaurentPoly.const(f)
    if f.is_zero():
        return True
    return not normal_form(_to_ts(f), I.basis, grlex)


def contains(I: LaurentIdeal, J: LaurentIdeal) -> bool:
    """``J ⊆ I``."""
    return all(member(I, g) for g in J.user_generators)


def equals(I: LaurentIdeal, J: LaurentIdeal) -> bool:
    return I.normal_form == J.normal_form


def product(I: LaurentIdeal, J: LaurentIdeal) -> LaurentIdeal:
    gi = [g for g in I.generators]
    gj = [g for g in J.generators]
    return LaurentIdeal([a * b for a in gi for b in gj])


def ideal_sum(I: LaurentIdeal, J: LaurentIdeal) -> LaurentIdeal:
    return LaurentIdeal(list(I.generators) + list(J.generators))


def ideal_power(I: LaurentIdeal, n: int) -> LaurentIdeal:
    if n < 0:
        raise ValueError("negative ideal power")
    result = unit_ideal()
    for _ in range(n):
        result = product(result, I)
    return result


def scale(f: LaurentPoly, I: LaurentIdeal) -> LaurentIdeal:
    """The product ``(f) I``."""
    if f.is_zero():
        raise ValueError("scaling by zero gives the zero ideal")
    return LaurentIdeal([f * g for g in I.generators])


def invert_t_ideal(I: LaurentIdeal) -> LaurentIdeal:
    return LaurentIdeal([invert_t(g) for g in I.generators])


# ---------------------------------------------------------------------------
# integers inside the ideal, evaluation, quotient size
# ---------------------------------------------------------------------------

def intersect_Z(I: LaurentIdeal) -> int:
    """Nonnegative generator of ``I ∩ Z``."""
    for b in I.basis:
        if set(b) == {(0, 0)}:
            return abs(b[(0, 0)])
    return 0


def eval_ideal(I: LaurentIdeal, x: int) -> int:
    """Nonnegative generator of ``{f(x) : f in I}`` for x = ±1."""
    return reduce(math.gcd, (eval_at(g, x) for g in I.generators), 0)


def quotient_size(I: LaurentIdeal) -> int | float:
    """Order of Z[t^{±1}]/I, or ``math.inf``.

    The strong basis filters the quotient by standard monomials; the graded
    piece at monomial m is Z/L_m, where L_m is generated by the leading
    coefficients of basis elements whose leading monomial divides m.
    """
    basis = I.basis
    leads = [(max(b, key=grlex), b[max(b, key=grlex)]) for b in basis]
    top = max((max(m) for m, _ in leads), default=0)

    def index(mono) -> int | float:
        g = 0
        for m, c in leads:
            if m[0] <= mono[0] and m[1] <= mono[1]:
                g = math.gcd(g, c)
        return INFINITE if g == 0 else g

    size = 1
    # monomials divisible by ts have index 1; only pure powers of t or s matter
    for var in (0, 1):
        for k in range(0, top + 1):
            if var == 1 and k == 0:
                continue
            mono = (k, 0) if var == 0 else (0, k)
            size *= index(mono)
            if size == INFINITE:
                return INFINITE
        tail = index((top + 1, 0) if var == 0 else (0, top + 1))
        if tail != 1:
            return INFINITE
    return size


# ---------------------------------------------------------------------------
# content, principality, classes
# ---------------------------------------------------------------------------

def content_split(I: LaurentIdeal) -> tuple[LaurentPoly, LaurentIdeal]:
    """Write ``I = (f) I0`` with ``f`` the gcd of the generators."""
    f = gcd_many(I.user_generators)
    quotients = []
    for g in I.user_generators:
        q = div_exact(g, f)
        assert q is not None
        quotients.append(q)
    return f, LaurentIdeal(quotients)


def principal_generator(I: LaurentIdeal) -> LaurentPoly | None:
    """Unit-normalized generator when ``I`` is principal, else ``None``.

    A principal ideal is generated by the gcd of any of its generating sets,
    so the test is ``I == (gcd)``.
    """
    g = gcd_many(I.generators)
    if equals(I, principal(g)):
        return g
    return None


def is_principal(I: LaurentIdeal) -> bool:
    return principal_generator(I) is not None


@dataclass(frozen=True)
class IdealClass:
    """Canonical representative of an ideal class: the content-free part."""

    primitive_normal_form: tuple
    generators: tuple[LaurentPoly, ...] = field(compare=False)

    def __str__(self):
        return "; ".join(str(g) for g in self.generators)


def class_canonical(I: LaurentIdeal) -> IdealClass:
    _, I0 = content_split(I)
    return IdealClass(I0.normal_form, I0.generators)


def class_equivalent(I: LaurentIdeal, J: LaurentIdeal) -> bool:
    """``(x) I = (y) J`` for some nonzero x, y.

    If gcd(I0) = 1 the elements of ``(x) I0`` have gcd ``x``, so an equation
    ``(x) I0 = (y) J0`` forces ``(x) = (y)`` and then ``I0 = J0``.
    """
    return content_split(I)[1] == content_split(J)[1]


# ---------------------------------------------------------------------------
# reduction mod p and maximality
# ---------------------------------------------------------------------------

def _to_fp(f: LaurentPoly, p: int) -> list[int]:
    return fp.reduce(f.shift(-f.low).dense(), p) if not f.is_zero() else []


def image_mod_p(I: LaurentIdeal, p: int) -> LaurentPoly:
    """Monic generator of the image of ``I`` in F_p[t^{±1}], t-powers stripped.

    Coefficients are returned in ``[0, p)``.  The zero polynomial means the
    image is zero and ``1`` means the image is everything.
    """
    if not fp.is_prime(p):
        raise ValueError(f"{p} is not prime")
    g: list[int] = []
    for f in I.generators:
        g = fp.gcd(g, _to_fp(f, p), p)
    g = fp.strip_t(g)
    return LaurentPoly.from_coeffs(g)


def _check_prime_bound(p: int) -> None:
    if p > MAX_PRIME:
        raise ResourceBoundExceeded("prime", p, MAX_PRIME)


def is_maximal(I: LaurentIdeal) -> bool:
    p = intersect_Z(I)
    if not fp.is_prime(p):
        return False
    _check_prime_bound(p)
    h = image_mod_p(I, p)
    if h.is_zero() or h.high < 1:
        return False
    if h.high > MAX_IRRED_DEGREE:
        raise ResourceBoundExceeded("degree", h.high, MAX_IRRED_DEGREE)
    return fp.is_irreducible(h.dense(), p)


def maximal_data(I: LaurentIdeal) -> tuple[int, LaurentPoly] | None:
    """``(p, h)`` with ``I = (p, h)`` when ``I`` is maximal."""
    if not is_maximal(I):
        return None
    p = intersect_Z(I)
    return p, image_mod_p(I, p)


# ---------------------------------------------------------------------------
# intersections, colon ideals and factorization into maximal ideals
# ---------------------------------------------------------------------------

_RELATOR3: Poly = {(0, 1, 1): 1, (0, 0, 0): -1}


def intersect(I: LaurentIdeal, J: LaurentIdeal) -> LaurentIdeal:
    """``I ∩ J`` by eliminating w from ``w I + (1 - w) J``."""
    seeds = [_to_ts3(g.shift(-g.low), 1) for g in I.generators]
    for g in J.generators:
        g = g.shift(-g.low)
        one_minus_w = _to_ts3(g, 0)
        one_minus_w.update((m, -c) for m, c in _to_ts3(g, 1).items())
        seeds.append(one_minus_w)
    basis = strong_groebner(seeds + [_RELATOR3], block_elim)
    kept = [_from_ts(b) for b in basis if all(m[0] == 0 for m in b)]
    kept = [k for k in kept if not k.is_zero()]
    return LaurentIdeal(kept)


def colon(J: LaurentIdeal, I: LaurentIdeal) -> LaurentIdeal:
    """``J : I = {x : x I ⊆ J}``."""
    parts = []
    for g in I.generators:
        inter = intersect(J, principal(g))
        qs = []
        for h in inter.generators:
            q = div_exact(h, g)
            assert q is not None
            qs.append(q)
        parts.append(LaurentIdeal(qs))
    return reduce(intersect, parts)


@dataclass
class Factorization:
    """Result of :func:`factor_maximals`; ``complete`` is False on failure."""

    factors: list[tuple[LaurentIdeal, int]]
    complete: bool
    remainder: LaurentIdeal | None = None


def _lift(h: list[int]) -> LaurentPoly:
    return LaurentPoly.from_coeffs(h)


def maximal_candidates(J: LaurentIdeal) -> list[LaurentIdeal]:
    """Maximal ideals containing ``J`` with residue characteristic dividing ``J ∩ Z``."""
    n = intersect_Z(J)
    out = []
    for p in fp.prime_factors(n) if n else []:
        _check_prime_bound(p)
        h = image_mod_p(J, p)
        if h.is_zero():
            continue
        if h.high > MAX_IRRED_DEGREE:
            raise ResourceBoundExceeded("degree", h.high, MAX_IRRED_DEGREE)
        for q, _ in fp.factor(h.dense(), p):
            out.append(LaurentIdeal([LaurentPoly.const(p), _lift(q)]))
    return out


def factor_maximals(I: LaurentIdeal) -> Factorization:
    """Factor the content-free part of ``I`` into maximal ideals, when possible."""
    _, J = content_split(I)
    counts: dict[LaurentIdeal, int] = {}
    order: list[LaurentIdeal] = []
    while not J.is_unit():
        for m in maximal_candidates(J):
            if not contains(m, J):
                continue
            Q = colon(J, m)
            if product(m, Q) == J:
                if m not in counts:
                    order.append(m)
                    counts[m] = 0
                counts[m] += 1
                J = Q
                break
        else:
            return Factorization([(m, counts[m]) for m in order], False, J)
    return Factorization([(m, counts[m]) for m in order], True)


def hilbert_function(m: LaurentIdeal, n: int) -> int:
    """``dim_{R/m} m^n / m^{n+1}`` read off from quotient sizes."""
    if not is_maximal(m):
        raise ValueError("hilbert_function needs a maximal ideal")
    q = quotient_size(m)
    lo = quotient_size(ideal_power(m, n))
    hi = quotient_size(ideal_power(m, n + 1))
    ratio, r = divmod(hi, lo)
    if r:
        raise AssertionError("quotient sizes of consecutive powers do not divide")
    k = 0
    while ratio > 1:
        ratio, r = divmod(ratio, q)
        if r:
            raise AssertionError("graded piece is not a vector space over R/m")
        k += 1
    return k
