"""Alexander ideals of surface knots and the 0-concordance obstructions they give.

Polynomials live in :mod:`alexideal.laurent`, ideals of Z[t^{±1}] in
:mod:`alexideal.zideal`, Fox calculus in :mod:`alexideal.fox`, knot
constructions in :mod:`alexideal.knots` and obstruction reports in
:mod:`alexideal.obstruct`.
"""

from .dsl import DSLParseError, format_knot, load_knot, parse_knot, parse_presentation
from .fox import (
    Presentation,
    Word,
    alexander_ideal,
    alexander_matrix,
    bareiss_det,
    elementary_ideal,
    fox_derivative_ab,
)
from .knots import (
    SurfaceKnot,
    catalog,
    colorings_count,
    connect_sum,
    has_nontrivial_coloring,
    determinant,
    kinoshita_realize,
    realize_ideal,
    reverse_ideal,
    spun,
    torus_2,
    twist_spin,
    twist_spin_ideal_formula,
    two_bridge,
    unknot,
)
from .laurent import (
    ONE,
    T,
    ZERO,
    LaurentPoly,
    PolyParseError,
    cyclotomic,
    eval_at,
    gcd,
    invert_t,
    normalize_unit,
    parse_poly,
    unit_equivalent,
)
from .obstruct import (
    distinguish,
    graph_dot,
    independence_certificate,
    report,
    ribbon_compatible,
)
from .zideal import (
    ZERO_IDEAL,
    LaurentIdeal,
    ResourceBoundExceeded,
    class_canonical,
    class_equivalent,
    colon,
    content_split,
    equals,
    factor_maximals,
    hilbert_function,
    ideal_power,
    ideal_sum,
    intersect,
    invert_t_ideal,
    is_maximal,
    is_principal,
    member,
    parse_ideal,
    principal,
    product,
    quotient_size,
    scale,
)

__version__ = "0.1.0"
