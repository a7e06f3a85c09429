"""0-concordance obstructions derived from Alexander ideals.

Every conclusion here runs in one direction only.  A nonprincipal ideal proves
the knot is not 0-slice; equal ideal classes prove nothing.  Likewise a ribbon
compatibility witness only says the ideal-level necessary condition holds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .knots import SurfaceKnot, determinant
from .laurent import LaurentPoly, div_exact, normalize_unit
from .zideal import (
    INFINITE,
    LaurentIdeal,
    class_canonical,
    class_equivalent,
    content_split,
    equals,
    invert_t_ideal,
    is_maximal,
    is_principal,
    maximal_data,
    quotient_size,
    scale,
)

NOT_ZERO_SLICE = "NotZeroSlice"
NOT_INVERTIBLE = "NotInvertible"
NOT_RIBBON = "NotRibbon"


@dataclass
class ObstructionReport:
    name: str
    genus: int | None
    ideal: LaurentIdeal
    ideal_class: tuple[LaurentPoly, ...]
    principal: bool
    determinant: int
    quotient_size: int | float
    maximal: bool
    symmetric_under_t_inversion: bool
    conclusions: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "genus": "classical" if self.genus is None else self.genus,
            "ideal": [str(g) for g in self.ideal.display_generators],
            "class": [str(g) for g in self.ideal_class],
            "principal": self.principal,
            "determinant": self.determinant,
            "quotient": "inf" if self.quotient_size == INFINITE else self.quotient_size,
            "maximal": self.maximal,
            "symmetric": self.symmetric_under_t_inversion,
            "conclusions": list(self.conclusions),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [f"{k}: {v}" for k, v in d.items() if k not in ("ideal", "class", "conclusions")]
        lines.insert(2, f"ideal: ({'; '.join(d['ideal'])})")
        lines.insert(3, f"class: ({'; '.join(d['class'])})")
        lines.append("conclusions: " + (", ".join(d["conclusions"]) or "none"))
        return "\n".join(lines)


def report(K: SurfaceKnot) -> ObstructionReport:
    I = K.alexander_ideal
    principal = is_principal(I)
    conclusions = []
    if not principal:
        conclusions += [NOT_ZERO_SLICE, NOT_INVERTIBLE]
        # ribbon 2-knots have deficiency-one Wirtinger presentations, hence principal ideals
        if K.genus == 0:
            conclusions.append(NOT_RIBBON)
    cls = class_canonical(I)
    return ObstructionReport(
        name=K.name,
        genus=K.genus,
        ideal=I,
        ideal_class=LaurentIdeal(cls.generators).display_generators,
        principal=principal,
        determinant=determinant(K),
        quotient_size=quotient_size(I),
        maximal=is_maximal(I),
        symmetric_under_t_inversion=equals(I, invert_t_ideal(I)),
        conclusions=conclusions,
    )


@dataclass(frozen=True)
class Comparison:
    """Outcome of :func:`distinguish`.

    ``distinguished`` means the knots are provably not 0-concordant.  The
    converse outcome is not a proof of 0-concordance.
    """

    distinguished: bool
    witness: tuple[str, str] | None = None

    def __str__(self):
        if self.distinguished:
            return f"Distinguished: class ({self.witness[0]}) vs class ({self.witness[1]})"
        return "IdealsEquivalent"


def distinguish(K: SurfaceKnot, J: SurfaceKnot) -> Comparison:
    I, L = K.alexander_ideal, J.alexander_ideal
    if class_equivalent(I, L):
        return Comparison(False)
    ci = LaurentIdeal(class_canonical(I).generators)
    cj = LaurentIdeal(class_canonical(L).generators)
    return Comparison(True, (str(ci), str(cj)))


NON_DIVIDING_DETERMINANT = "NonDividingDeterminant"
NON_DIVIDING_CONTENT = "NonDividingContent"
IDEAL_MISMATCH = "IdealMismatch"


@dataclass(frozen=True)
class RibbonCheck:
    """Whether ``Δ(K1) = (f) Δ(K0)`` has a solution ``f``.

    A witness means a ribbon concordance K0 -> K1 is not ruled out by the
    Alexander ideal; ``reason`` is set when one is ruled out.
    """

    compatible: bool
    witness: LaurentPoly | None = None
    reason: str | None = None

    def __str__(self):
        return f"Witness({self.witness})" if self.compatible else f"Incompatible({self.reason})"


def ribbon_compatible(K0: SurfaceKnot, K1: SurfaceKnot) -> RibbonCheck:
    """Decide whether some f has (f)·Δ(K0) = Δ(K1).

    The only candidate is the quotient of contents.  When it exists, any
    failure is reported as ``IdealMismatch``; otherwise the reason is
    ``NonDividingDeterminant`` if det(K0) ∤ det(K1) and ``NonDividingContent``
    if not.
    """
    # evaluating Δ(K1) = (f) Δ(K0) at t = -1 gives det(K0) | det(K1)
    det_ok = determinant(K1) % determinant(K0) == 0
    I0, I1 = K0.alexander_ideal, K1.alexander_ideal
    c0, _ = content_split(I0)
    c1, _ = content_split(I1)
    f = div_exact(c1, c0)
    if f is None:
        return RibbonCheck(False, reason=NON_DIVIDING_CONTENT if det_ok else NON_DIVIDING_DETERMINANT)
    f = normalize_unit(f)
    # the determinant test already rules the candidate out without a Gröbner computation
    if not det_ok or not equals(scale(f, I0), I1):
        return RibbonCheck(False, reason=IDEAL_MISMATCH)
    return RibbonCheck(True, witness=f)


@dataclass
class Certificate:
    """Independence certificate for a family of knots with maximal ideals.

    On success ``entries`` lists ``(p, h)`` with Δ(K_i) = (p, h(t)).  On
    failure ``failure`` names the offending pair; ``(i, i)`` means Δ(K_i)
    is not maximal.
    """

    ok: bool
    entries: list[tuple[int, LaurentPoly]] = field(default_factory=list)
    failure: tuple[int, int] | None = None

    def to_text(self, names: Sequence[str] | None = None) -> str:
        if not self.ok:
            return f"Failure{self.failure}"
        lines = ["Certificate: maximal, pairwise distinct Alexander ideals"]
        for k, (p, h) in enumerate(self.entries):
            label = names[k] if names else str(k)
            lines.append(f"{label}: ({p}; {h})")
        return "\n".join(lines)


def independence_certificate(Ks: Sequence[SurfaceKnot]) -> Certificate:
    ideals = [K.alexander_ideal for K in Ks]
    entries = []
    for i, I in enumerate(ideals):
        data = maximal_data(I)
        if data is None:
            return Certificate(False, entries, (i, i))
        entries.append(data)
    for i, j in combinations(range(len(ideals)), 2):
        if ideals[i] == ideals[j]:
            return Certificate(False, entries, (i, j))
    return Certificate(True, entries)


def _escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def _dot_quote(s: str) -> str:
    return '"' + _escape(s) + '"'


def graph_dot(Ks: Sequence[SurfaceKnot]) -> str:
    """Directed graph of ideal-level ribbon compatibility between the knots."""
    names = []
    seen: dict[str, int] = {}
    for K in Ks:
        nm = K.name
        if nm in seen:
            seen[nm] += 1
            nm = f"{nm} [{seen[nm]}]"
        else:
            seen[nm] = 0
        names.append(nm)
    lines = ["digraph {"]
    for K, nm in zip(Ks, names):
        label = "\\n".join(_escape(part) for part in (nm, f"({K.alexander_ideal})", f"det {determinant(K)}"))
        lines.append(f'  {_dot_quote(nm)} [label="{label}"];')
    for i, K0 in enumerate(Ks):
        for j, K1 in enumerate(Ks):
            if i == j:
                continue
            res = ribbon_compatible(K0, K1)
            if res.compatible:
                lines.append(f"  {_dot_quote(names[i])} -> {_dot_quote(names[j])} [label={_dot_quote(str(res.witness))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
