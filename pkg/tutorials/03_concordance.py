"""
Concordance obstructions
========================

Ideal classes, ribbon compatibility and the free submonoid.
"""

from itertools import combinations

from alexideal import (
    class_equivalent,
    connect_sum,
    distinguish,
    independence_certificate,
    invert_t_ideal,
    is_maximal,
    parse_ideal,
    product,
    ribbon_compatible,
    spun,
    torus_2,
    twist_spin,
    two_bridge,
)

tref = two_bridge(3, 1, "3_1")
stev = two_bridge(9, 7, "6_1")

# # Classes
#
# Two ideals are in the same class when (x)I = (y)J for nonzero x and y.
# Different classes prove the knots are not 0-concordant.

print(distinguish(twist_spin(tref, 2), twist_spin(stev, 2)))

# Adding a principal summand does not change the class.

K = connect_sum(twist_spin(tref, 2), spun(tref))
print(K.alexander_ideal)
print(distinguish(K, twist_spin(tref, 2)))

# # Ribbon concordance
#
# A ribbon concordance K0 -> K1 forces Delta(K1) = (f) Delta(K0).  The only
# candidate f is the quotient of the contents of the two ideals.

T2 = twist_spin(tref, 2)
print(ribbon_compatible(T2, K))
print(ribbon_compatible(K, T2))
print(ribbon_compatible(T2, twist_spin(two_bridge(5, 3, "4_1"), 2)))

# # A free submonoid
#
# Maximal ideals (p, t+1) from 2-twist spun torus knots are pairwise distinct,
# and their products stay apart in the class monoid.

Ks = [twist_spin(torus_2(p), 2) for p in (3, 5, 7, 11, 13)]
cert = independence_certificate(Ks)
print(cert.to_text([K.name for K in Ks]))

ms = [K.alexander_ideal for K in Ks[:3]]
pairs = [product(a, b) for a, b in combinations(ms, 2)]
print(any(class_equivalent(a, b) for a, b in combinations(pairs, 2)))

# # Nonreversible ideals
#
# Reversing a knot replaces t by t^-1.  For p = 5 the ideal (2t-1, 5) is
# maximal and differs from its reverse, so the class tells them apart.

for p in (3, 5, 7):
    I = parse_ideal(f"2t-1; {p}")
    J = invert_t_ideal(I)
    print(p, I, J, is_maximal(I), I == J, class_equivalent(I, J))

# At p = 3 the two coincide, because 2t - 1 = 2(t + 1) mod 3.
