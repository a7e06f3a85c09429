"""
Realizing ideals by ribbon knots
================================

Which ideals are Alexander ideals, and how to build a knot for one.
"""

# # One polynomial
#
# Any f with f(1) = 1 is the Alexander polynomial of a ribbon 2-knot with two
# meridional generators.  The relator is built from the coefficients of f.

from alexideal import kinoshita_realize, parse_poly
from alexideal.fox import format_word
from alexideal.knots import kinoshita_relator

f = parse_poly("2t-1")
print(format_word(kinoshita_relator(f), ("x", "y")))
K = kinoshita_realize(f)
print(K.alexander_ideal)

# Units and sign do not matter: -t^3 f is normalized back to f first.

g = parse_poly("t^2-3t+1")
print(kinoshita_realize(-parse_poly("t^3") * g).alexander_ideal)

# # Ideals
#
# An ideal I is realizable exactly when I|_{t=1} = (1).  The construction picks
# f_0 with f_0(1) = 1 by Bezout, then shifts every generator by a multiple of
# f_0 so all of them evaluate to 1.

from alexideal import parse_ideal, realize_ideal
from alexideal.knots import realize_generators

I = parse_ideal("3; t+1")
for h in realize_generators(I):
    print(h)

K = realize_ideal(I)
print("genus", K.genus, "relators", K.presentation.n_rels)
print(K.alexander_ideal == I)

# Both generators of (3, t+1) happen to shift to 2t-1.  The copy is kept, so
# the realizing surface has one handle per input generator.

# # The obstruction
#
# (2, t+1) evaluates to (2) at t = 1, so no surface knot has it as its ideal.

try:
    realize_ideal(parse_ideal("2; t+1"))
except ValueError as exc:
    print("rejected:", exc)

# # Writing the result
#
# Realized knots are ordinary knot files and feed back into every other tool.

from alexideal import format_knot, load_knot

text = format_knot(K)
print(text)
print(load_knot(text).alexander_ideal)
