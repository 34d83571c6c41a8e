"""The thirty (-2)-curves on the supersingular Kummer surface.

Builds the dual graph, spans its lattice, looks at two elliptic
fibrations with five I0* fibres each, and finishes with the twelve
curves whose contraction lands on 8A1 + D4.
"""
from kummer2.curveconfig import (builtin_figure1, contraction_check_sec6, fibers_f,
                                 fibers_f_prime, intersection_number, is_fiber,
                                 lattice_generated_by, trivial_lattice)
from kummer2.lattice import artin_sigma

G = builtin_figure1()
print(f"{len(G.vertices)} curves, {sum(G.edges.values())} intersection points")

L = lattice_generated_by(G)
print(f"span: rank {L.rank}, det {L.det}, sigma {artin_sigma(L)}")

f, fp = fibers_f(), fibers_f_prime()
print("fibres of f :", [str(is_fiber(G, d)) for d in f])
print("fibres of f':", [str(is_fiber(G, d)) for d in fp])
print("F . F' =", intersection_number(G, f[0], fp[0]))

T = trivial_lattice(G, f, "Cp1")
print(f"trivial lattice of f: rank {T.rank}, det {T.det}")
print(f"index of trivial lattice in span: {int((T.det // L.det) ** 0.5)}")

rep = contraction_check_sec6(G)
print(f"contracting {rep['contracted']} curves gives {rep['contracted_type']}, "
      f"total Tjurina number {rep['tjurina_total']}")
