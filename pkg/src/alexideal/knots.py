"""Constructions of surface knots from presentations, and their invariants."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import cached_property, reduce

from . import fp
from .fox import (
    Presentation,
    Word,
    alexander_ideal,
    alexander_matrix,
    commutator,
    elementary_ideal,
    fox_derivative_ab,
)
from .laurent import ONE, T, LaurentPoly, div_exact, eval_at, normalize_unit
from .zideal import (
    ZERO_IDEAL,
    LaurentIdeal,
    eval_ideal,
    ideal_sum,
    invert_t_ideal,
    principal,
    principal_generator,
    scale,
)


@dataclass(frozen=True)
class SurfaceKnot:
    """A surface knot given by a Wirtinger presentation of its group.

    ``genus`` is ``None`` for a classical knot in S^3.
    """

    name: str
    genus: int | None
    presentation: Presentation
    provenance: tuple = field(default=(), compare=False)

    @property
    def classical(self) -> bool:
        return self.genus is None

    @cached_property
    def alexander_ideal(self) -> LaurentIdeal:
        ideal = alexander_ideal(self.presentation)
        if ideal is ZERO_IDEAL:
            raise ValueError(f"{self.name}: Alexander ideal is zero; not a knot group presentation")
        return ideal

    def elementary_ideal(self, k: int):
        return elementary_ideal(self.presentation, k)


def _x(i: int) -> Word:
    return Word.letter(i)


def unknot(name: str = "unknot", genus: int = 0) -> SurfaceKnot:
    return SurfaceKnot(name, genus, Presentation(("x",), ()), ("Unknot",))


def two_bridge(p: int, q: int, name: str | None = None) -> SurfaceKnot:
    """Classical 2-bridge knot b(p, q) from its Schubert presentation."""
    if p < 3 or p % 2 == 0 or not 0 < q < p or math.gcd(p, q) != 1:
        raise ValueError(f"invalid 2-bridge parameters ({p}, {q})")
    x, y = _x(0), _x(1)
    w = Word()
    for i in range(1, p):
        eps = -1 if (i * q // p) % 2 else 1
        w = w * ((y if i % 2 else x) ** eps)
    r = x * w * y.inverse() * w.inverse()
    return SurfaceKnot(name or f"b({p},{q})", None, Presentation(("x", "y"), (r,)), ("TwoBridge", p, q))


def torus_2(p: int) -> SurfaceKnot:
    """The torus knot T(2, p) = b(p, 1)."""
    return two_bridge(p, 1, name=f"T(2,{p})")


def twist_spin(K: SurfaceKnot, n: int, power_form: bool = False) -> SurfaceKnot:
    """Zeeman's n-twist spin: add ``[x_0^n, x_i]`` (or ``x_0^n x_i^-n``) for each i > 0."""
    if not K.classical:
        raise ValueError("twist spinning needs a classical knot")
    P = K.presentation
    x0n = _x(0) ** n
    extra = []
    for i in range(1, P.n_gens):
        r = x0n * (_x(i) ** -n) if power_form else commutator(x0n, _x(i))
        if r:
            extra.append(r)
    pres = Presentation(P.names, P.relators + tuple(extra))
    label = "spun" if n == 0 else f"tau^{n}"
    return SurfaceKnot(f"{label} {K.name}", 0, pres, ("TwistSpin", n, K.name))


def spun(K: SurfaceKnot) -> SurfaceKnot:
    return twist_spin(K, 0)


def _fresh_names(taken: set[str], names: tuple[str, ...]) -> tuple[str, ...]:
    out = []
    for nm in names:
        new = nm
        while new in taken:
            new += "_"
        taken.add(new)
        out.append(new)
    return tuple(out)


def connect_sum(K: SurfaceKnot, J: SurfaceKnot) -> SurfaceKnot:
    """Merge presentations and identify the first meridians with ``x_1 y_1^-1``."""
    P, Q = K.presentation, J.presentation
    shift = P.n_gens
    names = P.names + _fresh_names(set(P.names), Q.names)
    moved = tuple(Word((i + shift, e) for i, e in r) for r in Q.relators)
    join = _x(0) * _x(shift).inverse()
    pres = Presentation(names, (join,) + P.relators + moved, P.weights + Q.weights)
    if K.classical and J.classical:
        genus = None
    else:
        genus = (K.genus or 0) + (J.genus or 0)
    return SurfaceKnot(f"{K.name} # {J.name}", genus, pres, ("ConnectSum", K.name, J.name))


# ---------------------------------------------------------------------------
# realizers
# ---------------------------------------------------------------------------

def kinoshita_word(f: LaurentPoly) -> Word:
    """Word w with ``<x, y | x w y^-1 w^-1>`` having Alexander ideal (f).

    Writes f = 1 + g (t - 1) and spells each term of g as a syllable pair
    y^n x^{±1}, with the y exponents telescoped so the prefixes land on the
    right powers of t.
    """
    g = div_exact(f - ONE, T - ONE)
    assert g is not None
    pairs: list[tuple[int, int]] = []
    for k, c in sorted(g.items()):
        pairs.extend([(k, 1) if c > 0 else (k + 1, -1)] * abs(c))
    x, y = _x(0), _x(1)
    w = Word()
    prev = 0
    for m_odd, m_even in pairs:
        w = w * (y ** (m_odd - prev)) * (x ** m_even)
        prev = m_odd + m_even
    return w


def _normalize_at_one(f: LaurentPoly) -> LaurentPoly:
    v = eval_at(f, 1)
    if v not in (1, -1):
        raise ValueError(f"need f(1) = ±1, got f(1) = {v}")
    f = normalize_unit(f) if not f.is_zero() else f
    return f if eval_at(f, 1) == 1 else -f


def kinoshita_relator(f: LaurentPoly) -> Word:
    f = _normalize_at_one(f)
    w = kinoshita_word(f)
    x, y = _x(0), _x(1)
    return x * w * y.inverse() * w.inverse()


def kinoshita_realize(f: LaurentPoly, name: str | None = None) -> SurfaceKnot:
    """Ribbon 2-knot of meridional rank 2 with Alexander ideal (f); needs f(1) = ±1."""
    r = kinoshita_relator(f)
    K = SurfaceKnot(name or f"kinoshita({f})", 0, Presentation(("x", "y"), (r,)), ("KinoshitaRealize", str(f)))
    if K.alexander_ideal != principal(f):
        raise AssertionError("Kinoshita construction failed its postcondition")
    return K


def _bezout(values: list[int]) -> list[int]:
    """Integers a_i with sum a_i v_i = gcd(values)."""
    coeffs = [0] * len(values)
    g = 0
    for idx, v in enumerate(values):
        # extend g = sum coeffs*values by v
        a0, a1, b0, b1, r0, r1 = 1, 0, 0, 1, g, v
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            a0, a1 = a1, a0 - q * a1
            b0, b1 = b1, b0 - q * b1
        if r0 < 0:
            r0, a0, b0 = -r0, -a0, -b0
        coeffs = [c * a0 for c in coeffs]
        coeffs[idx] = b0
        g = r0
    return coeffs


def realize_generators(I: LaurentIdeal) -> list[LaurentPoly]:
    """Generators f_0, ..., f_m of ``I`` with every f_i(1) = 1, for user generators g_1, ..., g_m."""
    gens = [g for g in I.user_generators if not g.is_zero()]
    values = [eval_at(g, 1) for g in gens]
    a = _bezout(values)
    f0 = reduce(lambda acc, ag: acc + ag[1].scale(ag[0]), zip(a, gens), LaurentPoly())
    if eval_at(f0, 1) != 1:
        raise ValueError("ideal does not evaluate to (1) at t = 1")
    # one f_i per g_i even when they repeat, so the genus is the generator count
    return [f0] + [g - f0.scale(v - 1) for g, v in zip(gens, values)]


def realize_ideal(I: LaurentIdeal, name: str | None = None) -> SurfaceKnot:
    """Ribbon surface knot of genus m with Alexander ideal I; needs ``I|_{t=1} = 1``."""
    if eval_ideal(I, 1) != 1:
        raise ValueError("no surface knot has this ideal: it must satisfy I|_{t=1} = 1")
    if I.is_unit():
        return replace(unknot(name or "unknot"), provenance=("IdealRealize", str(I)))
    g = principal_generator(I)
    fs = [g] if g is not None else realize_generators(I)
    rels = tuple(kinoshita_relator(f) for f in fs)
    K = SurfaceKnot(name or f"realize({I})", len(fs) - 1, Presentation(("x", "y"), rels), ("IdealRealize", str(I)))
    if K.alexander_ideal != I:
        raise AssertionError("ideal realization failed its postcondition")
    return K


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------

def determinant(K: SurfaceKnot) -> int:
    d = eval_ideal(K.alexander_ideal, -1)
    if d % 2 == 0:
        raise AssertionError(f"{K.name}: even determinant {d}; presentation is not a knot group")
    return d


def twist_spin_ideal_formula(K: SurfaceKnot, n: int) -> LaurentIdeal:
    """sum_j (t^n - 1)^{j-1} eps_j(K) over j = 1..(number of generators)."""
    if not K.classical:
        raise ValueError("the formula applies to classical knots")
    tn1 = LaurentPoly.monomial(n) - ONE
    total = None
    for j in range(1, K.presentation.n_gens + 1):
        eps = K.elementary_ideal(j)
        if eps is ZERO_IDEAL:
            continue
        if tn1.is_zero() and j > 1:
            continue
        term = scale(tn1 ** (j - 1), eps) if j > 1 else eps
        total = term if total is None else ideal_sum(total, term)
    if total is None:
        raise ValueError("all summands vanish")
    return total


def _nullity_mod_p(rows: list[list[int]], ncols: int, p: int) -> int:
    A = [[x % p for x in r] for r in rows]
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][c], -1, p)
        A[rank] = [v * inv % p for v in A[rank]]
        for i in range(len(A)):
            if i != rank and A[i][c]:
                f = A[i][c]
                A[i] = [(v - f * u) % p for v, u in zip(A[i], A[rank])]
        rank += 1
    return ncols - rank


def colorings_count(K: SurfaceKnot, p: int) -> int:
    """Number of Fox p-colorings, trivial ones included: p^(nullity of A(-1) mod p)."""
    if p < 3 or not fp.is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    A = alexander_matrix(K.presentation)
    rows = [[eval_at(a, -1) for a in row] for row in A.rows]
    return p ** _nullity_mod_p(rows, A.n_cols, p)


def has_nontrivial_coloring(K: SurfaceKnot, p: int) -> bool:
    return colorings_count(K, p) > p


def reverse_ideal(K: SurfaceKnot) -> LaurentIdeal:
    return invert_t_ideal(K.alexander_ideal)


def catalog() -> list[SurfaceKnot]:
    """Ten knots used throughout the test suite and tutorials."""
    tref = two_bridge(3, 1, "3_1")
    fig8 = two_bridge(5, 3, "4_1")
    stev = two_bridge(9, 7, "6_1")
    return [
        unknot(),
        tref,
        fig8,
        two_bridge(5, 1, "5_1"),
        twist_spin(tref, 2),
        twist_spin(tref, 3),
        spun(tref),
        twist_spin(fig8, 2),
        twist_spin(stev, 2),
        kinoshita_realize(LaurentPoly({1: 2, 0: -1}), name="K(2t-1)"),
    ]
