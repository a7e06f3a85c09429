"""Free-group words, presentations and Fox calculus in the abelianization.

Fox derivatives are never formed in the free group ring: each derivative is
pushed straight into Z[t^{±1}] through the weight map ``x_i -> t^{w_i}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .laurent import ONE, ZERO, LaurentPoly, normalize_unit
from .zideal import ZERO_IDEAL, LaurentIdeal, ResourceBoundExceeded

MAX_MATRIX = 12

Syllable = tuple[int, int]


class Word(tuple):
    """Freely reduced word: a tuple of ``(generator index, nonzero exponent)``.

    Adjacent syllables always use different generators.
    """

    def __new__(cls, syllables: Iterable[Syllable] = ()):
        return super().__new__(cls, _reduce(syllables))

    @classmethod
    def letter(cls, i: int, e: int = 1) -> Word:
        return cls([(i, e)])

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> Word:
        """From signed 1-based letters: ``2`` is x_1, ``-1`` is x_0^-1."""
        return cls((abs(a) - 1, 1 if a > 0 else -1) for a in letters)

    def __mul__(self, other: Word) -> Word:
        return Word(tuple(self) + tuple(other))

    def inverse(self) -> Word:
        return Word((i, -e) for i, e in reversed(self))

    def __pow__(self, n: int) -> Word:
        base = self if n >= 0 else self.inverse()
        return Word(tuple(base) * abs(n))

    def letters(self) -> list[tuple[int, int]]:
        """Expanded form, one ``(generator, ±1)`` per letter."""
        out = []
        for i, e in self:
            out.extend([(i, 1 if e > 0 else -1)] * abs(e))
        return out

    def exponent_sum(self, i: int) -> int:
        return sum(e for j, e in self if j == i)

    def __repr__(self):
        return f"Word({list(self)!r})"


def _reduce(syllables: Iterable[Syllable]) -> tuple[Syllable, ...]:
    stack: list[list[int]] = []
    for i, e in syllables:
        if e == 0:
            continue
        if stack and stack[-1][0] == i:
            stack[-1][1] += e
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([i, e])
    return tuple((i, e) for i, e in stack)


def commutator(a: Word, b: Word) -> Word:
    return a * b * a.inverse() * b.inverse()


@dataclass(frozen=True)
class Presentation:
    """``<x_1, ..., x_n | r_1, ..., r_m>`` with abelianization weights."""

    names: tuple[str, ...]
    relators: tuple[Word, ...]
    weights: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "relators", tuple(Word(r) for r in self.relators))
        if not self.weights:
            object.__setattr__(self, "weights", (1,) * len(self.names))
        object.__setattr__(self, "weights", tuple(self.weights))
        if len(self.weights) != len(self.names):
            raise ValueError("one weight per generator is required")
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be distinct")
        for k, r in enumerate(self.relators):
            for i, _ in r:
                if not 0 <= i < len(self.names):
                    raise ValueError(f"relator {k} uses an unknown generator index {i}")
            if sum(self.weights[i] * e for i, e in r) != 0:
                raise ValueError(f"relator {k} does not abelianize to 1")

    @property
    def n_gens(self) -> int:
        return len(self.names)

    @property
    def n_rels(self) -> int:
        return len(self.relators)

    def is_wirtinger(self) -> bool:
        return all(w == 1 for w in self.weights) and all(
            is_conjugation_relator(r) or _is_power_relator(r) for r in self.relators
        )


def is_conjugation_relator(r: Word) -> bool:
    """True if some cyclic rotation of ``r`` reads ``a w b^-1 w^-1`` for generators a, b."""
    letters = r.letters()
    n = len(letters)
    if n < 2 or n % 2:
        return False
    half = (n - 2) // 2
    for k in range(n):
        rot = letters[k:] + letters[:k]
        if rot[0][1] != 1 or rot[half + 1][1] != -1:
            continue
        w = rot[1:half + 1]
        w_inv = [(i, -e) for i, e in reversed(w)]
        if rot[half + 2:] == w_inv:
            return True
    return False


def _is_power_relator(r: Word) -> bool:
    """``x_a^n x_b^-n``, the power form of a twist-spin relation."""
    letters = r.letters()
    n = len(letters)
    if n == 0 or n % 2:
        return False
    for k in range(n):
        rot = letters[k:] + letters[:k]
        a, b = rot[0], rot[n // 2]
        if a[1] == -b[1] and all(x == a for x in rot[: n // 2]) and all(x == b for x in rot[n // 2:]):
            return True
    return False


# ---------------------------------------------------------------------------
# abelianized Fox calculus
# ---------------------------------------------------------------------------

def abelianize(w: Word, weights: Sequence[int]) -> LaurentPoly:
    return LaurentPoly.monomial(sum(weights[i] * e for i, e in w))


def fox_derivative_ab(w: Word, j: int, weights: Sequence[int]) -> LaurentPoly:
    """Image of ``∂w/∂x_j`` under ``x_i -> t^{w_i}``.

    Uses D(uv) = D(u) + u D(v) letter by letter from the left, tracking the
    abelianized prefix.
    """
    acc: dict[int, int] = {}
    prefix = 0
    for i, sign in w.letters():
        step = weights[i]
        if sign > 0:
            if i == j:
                acc[prefix] = acc.get(prefix, 0) + 1
            prefix += step
        else:
            prefix -= step
            if i == j:
                acc[prefix] = acc.get(prefix, 0) - 1
    return LaurentPoly(acc)


@dataclass(frozen=True)
class AlexanderMatrix:
    rows: tuple[tuple[LaurentPoly, ...], ...]
    n_cols: int
    wirtinger: bool

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.n_cols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


def alexander_matrix(P: Presentation) -> AlexanderMatrix:
    rows = []
    for k, r in enumerate(P.relators):
        row = tuple(fox_derivative_ab(r, j, P.weights) for j in range(P.n_gens))
        # fundamental formula: sum_j a_ij (t^{w_j} - 1) = abelianize(r) - 1 = 0
        check = sum(
            (a * (LaurentPoly.monomial(w) - ONE) for a, w in zip(row, P.weights)), ZERO
        )
        if not check.is_zero():
            raise ValueError(f"relator {k} violates the fundamental identity of Fox calculus")
        rows.append(row)
    return AlexanderMatrix(tuple(rows), P.n_gens, all(w == 1 for w in P.weights))


# ---------------------------------------------------------------------------
# determinants and elementary ideals
# ---------------------------------------------------------------------------

def bareiss_det(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free determinant over Z[t] after clearing negative exponents row by row.

    The result equals det(M) up to a unit ``t^k``.
    """
    from .laurent import div_exact

    n = len(M)
    if n == 0:
        return ONE
    A = []
    for row in M:
        low = min((a.low for a in row if not a.is_zero()), default=0)
        A.append([a.shift(-low) for a in row])
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if A[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not A[i][k].is_zero()), None)
            if swap is None:
                return ZERO
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[k][k] * A[i][j] - A[i][k] * A[k][j]
                q = div_exact(num, prev)
                assert q is not None, "Bareiss division must be exact"
                A[i][j] = q
            A[i][k] = ZERO
        prev = A[k][k]
    return A[n - 1][n - 1].scale(sign)


def _minor_ideal(rows: list[tuple[LaurentPoly, ...]], cols: list[int], size: int):
    if size <= 0:
        return LaurentIdeal([ONE])
    rows = [r for r in rows if any(not r[c].is_zero() for c in cols)]
    if size > len(rows) or size > len(cols):
        return ZERO_IDEAL
    dets = set()
    for rsel in combinations(range(len(rows)), size):
        for csel in combinations(cols, size):
            d = bareiss_det([[rows[i][j] for j in csel] for i in rsel])
            if not d.is_zero():
                dets.add(normalize_unit(d))
    if not dets:
        return ZERO_IDEAL
    return LaurentIdeal(sorted(dets, key=LaurentPoly.sort_key))


def elementary_ideal(P: Presentation, k: int, full: bool = False):
    """The k-th elementary ideal, generated by the (n-k)-minors of the Alexander matrix.

    For weight-1 presentations the first column is dropped (rows sum to zero,
    so it is minus the sum of the others) unless ``full`` is set.  Returns
    :data:`ZERO_IDEAL` when every minor vanishes.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    A = alexander_matrix(P)
    m, n = A.shape
    if max(m, n) > MAX_MATRIX:
        raise ResourceBoundExceeded("matrix size", max(m, n), MAX_MATRIX)
    size = n - k
    cols = list(range(n))
    if A.wirtinger and n > 0 and not full:
        cols = cols[1:]
    return _minor_ideal(list(A.rows), cols, size)


def alexander_ideal(P: Presentation):
    return elementary_ideal(P, 1)


# ---------------------------------------------------------------------------
# presentation text (DSL) round trip
# ---------------------------------------------------------------------------

def format_word(w: Word, names: Sequence[str]) -> str:
    if not w:
        return "1"
    return " ".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in w)


def format_presentation(P: Presentation) -> str:
    lines = [f"gens: {' '.join(P.names)} ;"]
    if any(w != 1 for w in P.weights):
        lines.append(f"weights: {' '.join(str(w) for w in P.weights)} ;")
    rels = " , ".join(format_word(r, P.names) for r in P.relators)
    lines.append(f"rels: {rels} ;" if rels else "rels: ;")
    return "\n".join(lines) + "\n"
