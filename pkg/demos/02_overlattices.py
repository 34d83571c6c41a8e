"""Even overlattices of U + D4^5 and how the Artin invariant drops.

The discriminant group of U + D4^5 is (Z/2)^10 with a quadratic form of
Arf invariant 1. Each totally singular line glues to an overlattice whose
determinant is four times smaller, each plane to one sixteen times smaller.
"""
from kummer2.f2quad import overlattice_count, totally_singular_subspaces
from kummer2.lattice import (GlueGroup, artin_sigma, direct_sum, discriminant_form_f2,
                             hyperbolic_U, overlattice_from_glue, root_lattice)

L = direct_sum([hyperbolic_U()] + [root_lattice("D", 4)] * 5)
q = discriminant_form_f2(L)
print(f"U + D4^5: rank {L.rank}, det {L.det}, sigma {artin_sigma(L)}")
print(f"q on the discriminant group: {q}")


def bits(v):
    return [(v >> i) & 1 for i in range(q.dim)]


for d in (1, 2):
    H = totally_singular_subspaces(q, d)[0]
    M = overlattice_from_glue(L, GlueGroup([bits(v) for v in H]))
    print(f"glue dim {d}: det {M.det}, sigma {artin_sigma(M)}, even {M.is_even()}")

print()
print("index-2 overlattices of a rank-22 lattice with Artin invariant sigma:")
for sigma in range(1, 6):
    print(f"  sigma {sigma}: {overlattice_count(22, sigma)}")
