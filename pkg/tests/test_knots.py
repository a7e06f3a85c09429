import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from alexideal.fox import format_word
from alexideal.knots import (
    catalog,
    colorings_count,
    connect_sum,
    determinant,
    has_nontrivial_coloring,
    kinoshita_realize,
    kinoshita_relator,
    kinoshita_word,
    realize_generators,
    realize_ideal,
    reverse_ideal,
    spun,
    torus_2,
    twist_spin,
    twist_spin_ideal_formula,
    two_bridge,
    unknot,
)
from alexideal.laurent import ONE, LaurentPoly, eval_at, parse_poly
from alexideal.zideal import LaurentIdeal, parse_ideal, principal, product

from oracles import dihedral_colorings

P = parse_poly
I_ = parse_ideal
NAMES = ("x", "y")

TREF = two_bridge(3, 1, "3_1")
FIG8 = two_bridge(5, 3, "4_1")
STEV = two_bridge(9, 7, "6_1")


def test_two_bridge_examples():
    assert format_word(TREF.presentation.relators[0], NAMES) == "x y x y^-1 x^-1 y^-1"
    assert TREF.alexander_ideal == principal(P("t^2-t+1"))
    assert FIG8.alexander_ideal == principal(P("t^2-3t+1"))
    assert STEV.alexander_ideal == principal(P("2t^2-5t+2"))
    assert TREF.classical and TREF.presentation.is_wirtinger()
    assert torus_2(5).alexander_ideal == principal(P("t^4-t^3+t^2-t+1"))


@pytest.mark.parametrize("p, q", [(4, 1), (5, 5), (9, 3), (1, 1), (7, 0)])
def test_two_bridge_rejects_bad_parameters(p, q):
    with pytest.raises(ValueError):
        two_bridge(p, q)


def test_twist_spin_examples():
    assert twist_spin(TREF, 2).alexander_ideal == I_("3; t+1")
    assert twist_spin(TREF, 5).alexander_ideal.is_unit()
    assert twist_spin(STEV, 2).alexander_ideal == I_("9; t+1")
    assert twist_spin(TREF, 1).alexander_ideal.is_unit()
    assert twist_spin(TREF, -1).alexander_ideal.is_unit()
    K = twist_spin(TREF, 2)
    assert K.genus == 0 and K.presentation.is_wirtinger()
    assert spun(TREF).alexander_ideal == TREF.alexander_ideal


def test_twist_spin_needs_classical_input():
    with pytest.raises(ValueError):
        twist_spin(twist_spin(TREF, 2), 2)


@pytest.mark.parametrize("n", range(-4, 5))
def test_power_and_commutator_forms_agree(n):
    for K in (TREF, FIG8, STEV):
        assert twist_spin(K, n).alexander_ideal == twist_spin(K, n, power_form=True).alexander_ideal


def test_connect_sum_examples():
    t2 = twist_spin(TREF, 2)
    assert connect_sum(TREF, unknot()).alexander_ideal == TREF.alexander_ideal
    assert connect_sum(t2, t2).alexander_ideal == product(I_("3; t+1"), I_("3; t+1"))
    assert connect_sum(t2, spun(TREF)).alexander_ideal == product(principal(P("t^2-t+1")), I_("3; t+1"))
    assert connect_sum(t2, t2).genus == 0
    assert connect_sum(TREF, FIG8).classical
    K = connect_sum(TREF, TREF)
    assert len(set(K.presentation.names)) == 4


def test_kinoshita_examples():
    assert format_word(kinoshita_relator(ONE), NAMES) == "x y^-1"
    assert format_word(kinoshita_word(P("t^2-t+1")), NAMES) == "y x"
    assert format_word(kinoshita_relator(P("t^2-t+1")), NAMES) == "x y x y^-1 x^-1 y^-1"
    assert format_word(kinoshita_word(P("2t-1")), NAMES) == "x y^-1 x"
    assert kinoshita_realize(P("2t-1")).alexander_ideal == principal(P("2t-1"))
    # unit and sign normalization
    assert kinoshita_realize(-P("t^3") * P("t^2-3t+1")).alexander_ideal == principal(P("t^2-3t+1"))


def test_kinoshita_rejects_bad_value_at_one():
    with pytest.raises(ValueError):
        kinoshita_realize(P("t+1"))


def test_realize_ideal_examples():
    I = I_("3; t+1")
    fs = realize_generators(I)
    assert fs == [P("2-t"), P("2t-1"), P("2t-1")]
    K = realize_ideal(I)
    assert K.genus == 2 and K.presentation.n_rels == 3
    assert K.alexander_ideal == I
    f = P("t^2-3t+1")
    assert realize_ideal(principal(f)).presentation == kinoshita_realize(f).presentation
    assert realize_ideal(principal(f)).genus == 0
    assert realize_ideal(I_("2; t")).alexander_ideal.is_unit()


def test_realize_ideal_obstruction():
    with pytest.raises(ValueError, match="t=1"):
        realize_ideal(I_("2; t+1"))


@pytest.mark.parametrize("K, d", [
    (twist_spin(TREF, 2), 3),
    (twist_spin(TREF, 3), 1),
    (twist_spin(STEV, 2), 9),
    (TREF, 3),
    (unknot(), 1),
])
def test_determinant_examples(K, d):
    assert determinant(K) == d


@pytest.mark.parametrize("p", range(3, 20, 2))
def test_two_bridge_determinant_is_p(p):
    for q in range(1, p):
        if math.gcd(p, q) == 1:
            assert determinant(two_bridge(p, q)) == p


def test_twist_spin_ideal_formula_examples():
    assert twist_spin_ideal_formula(TREF, 2) == I_("3; t+1")
    assert twist_spin_ideal_formula(TREF, 1).is_unit()
    assert twist_spin_ideal_formula(FIG8, 2) == I_("5; t+1")
    assert twist_spin_ideal_formula(FIG8, 0) == FIG8.alexander_ideal


@pytest.mark.parametrize("K, p, count", [
    (TREF, 3, 9),
    (twist_spin(TREF, 2), 3, 9),
    (twist_spin(TREF, 3), 3, 3),
    (FIG8, 5, 25),
    (FIG8, 3, 3),
])
def test_coloring_examples(K, p, count):
    assert colorings_count(K, p) == count
    assert has_nontrivial_coloring(K, p) is (count > p)


def test_colorings_reject_non_odd_primes():
    for p in (2, 9, 1):
        with pytest.raises(ValueError):
            colorings_count(TREF, p)


@pytest.mark.parametrize("K", catalog(), ids=lambda K: K.name)
@pytest.mark.parametrize("p", [3, 5, 7])
def test_colorings_match_dihedral_brute_force(K, p):
    assert colorings_count(K, p) == dihedral_colorings(K.presentation, p)


def test_reverse_ideal():
    assert reverse_ideal(twist_spin(TREF, 2)) == twist_spin(TREF, 2).alexander_ideal
    K = realize_ideal(I_("2t-1; 5"))
    assert reverse_ideal(K) == I_("2-t; 5") != K.alexander_ideal
    assert reverse_ideal(TREF) == principal(P("t^2-t+1"))


def test_catalog_is_consistent():
    cat = catalog()
    assert len(cat) == 10
    assert len({K.name for K in cat}) == 10
    for K in cat:
        assert K.presentation.is_wirtinger(), K.name
        assert determinant(K) % 2 == 1


# -- properties ----------------------------------------------------------

value_one = st.lists(st.integers(-4, 4), min_size=1, max_size=6).map(
    lambda cs: LaurentPoly.from_coeffs(cs) * (LaurentPoly.from_coeffs([-1, 1])) + ONE
)


@settings(max_examples=60, deadline=None)
@given(value_one)
def test_kinoshita_round_trip(f):
    assert eval_at(f, 1) == 1
    K = kinoshita_realize(f)
    assert K.alexander_ideal == principal(f)
    assert K.presentation.is_wirtinger()


@settings(max_examples=25, deadline=None)
@given(st.lists(value_one, min_size=1, max_size=2), st.integers(2, 7))
def test_realize_ideal_round_trip(fs, c):
    # (f_1, ..., c) evaluates to 1 at t = 1 because every f_i(1) = 1
    I = LaurentIdeal(fs + [LaurentPoly.const(c)])
    K = realize_ideal(I)
    assert K.alexander_ideal == I


def test_determinant_laws_on_random_two_bridge():
    rng = random.Random(11)
    for _ in range(8):
        p = rng.choice([3, 5, 7, 9, 11, 13])
        q = rng.choice([q for q in range(1, p) if math.gcd(p, q) == 1])
        K = two_bridge(p, q)
        for n in range(-3, 5):
            d = determinant(twist_spin(K, n))
            assert d == (p if n % 2 == 0 else 1)
