"""Three vector fields over GF(16), one for each possible value of m.

For each field we print the quotient's singularities, the number of
rational points of the fixed locus, and the Artin invariant read off
from that count.
"""
from kummer2.gf2k import FieldSpec
from kummer2.kummer import DeltaField, m_witnesses, rational_points, surface_report

F = FieldSpec.parse("gf16:0x13")

for m, delta in sorted(m_witnesses(F).items()):
    rep = surface_report(delta)
    print(f"delta = ({delta.hex()})  type {rep.group_type}")
    print(f"  singularities {rep.singularity_string()}, K3: {rep.k3}")
    pts, found_m = rational_points(delta)
    print(f"  m = {found_m}, {len(pts)} points, sigma = {rep.artin_sigma}")
    assert found_m == m

# with tau = 0 the line is of type alpha_2 and no Artin invariant is attached
a2 = surface_report(DeltaField.from_bits(F, 1, 0, 0, 1, 0, 0, 0))
print(f"tau = 0: type {a2.group_type}, singularities {a2.singularity_string()}")
