"""
The 2-twist spun trefoil
========================

From a group presentation to an obstruction report.
"""

# # Reading a presentation
#
# Knot files list generators and relators.  The first relator is the
# trefoil relation, the second says x^2 commutes with y.

from alexideal import load_knot

text = """
name: tau^2 3_1 ;
gens: x y ;
rels: x y x y^-1 x^-1 y^-1 , x^2 y x^-2 y^-1 ;
"""
K = load_knot(text)
print(K.name, K.presentation.names, K.presentation.n_rels)

# # Fox calculus
#
# Each row of the Alexander matrix holds the Fox derivatives of one relator,
# pushed into Z[t, t^-1] by sending both generators to t.

from alexideal.fox import alexander_matrix

A = alexander_matrix(K.presentation)
for row in A.rows:
    print("  ".join(str(a) for a in row))

# Rows sum to zero, so one column can be dropped.  The 1x1 minors of what is
# left generate the Alexander ideal.

I = K.alexander_ideal
print(I)

# (t^2-t+1, t^2-1) looks like two quadratics, but the Groebner basis
# collapses it: t = -1 mod the ideal, so t^2-t+1 becomes 3.

from alexideal import parse_ideal

print(I == parse_ideal("t^2-t+1; t^2-1") == parse_ideal("3; t+1"))

# # Invariants of the ideal

from alexideal import determinant, is_maximal, is_principal, quotient_size

print("principal:", is_principal(I))
print("maximal:  ", is_maximal(I))
print("|R/I| =   ", quotient_size(I))
print("det =     ", determinant(K))

# R/I is the field F_3, hence the quotient of size 3.

# # Report
#
# A nonprincipal Alexander ideal rules out 0-sliceness and invertibility.  For
# a 2-knot it also rules out being ribbon.

from alexideal import report

r = report(K)
print(r.to_text())
print(r.to_json())

# # Other twist spins
#
# Twists prime to 6 have trivial ideal.  Multiples of 2 give (3, t+1) again,
# multiples of 3 give (2, t^2+t+1), and n = 6 brings back the trefoil's own
# principal ideal (t^2-t+1).

from alexideal import two_bridge, twist_spin

tref = two_bridge(3, 1, "3_1")
for n in range(1, 7):
    Kn = twist_spin(tref, n)
    print(n, Kn.alexander_ideal, determinant(Kn), report(Kn).conclusions)
