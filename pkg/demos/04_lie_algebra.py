"""The restricted Lie algebra a x| b over GF(4).

Every nonzero vector spans a p-closed line. In the square only pairs
with matching e-coefficient (or a zero side) stay p-closed.
"""
import itertools

from kummer2.gf2k import FieldSpec
from kummer2.liealg import (LieElement, ProductLieElement, all_elements, bracket,
                            classify_line, is_p_closed, p_map)

F = FieldSpec.parse("gf4:0x7")
x = LieElement.from_bits(F, 1, 2, 0, 3)
y = LieElement.from_bits(F, 0, 1, 1, 0)
print(f"x = {x.to_json()}  y = {y.to_json()}")
print(f"[x, y] = {bracket(x, y).to_json()}")
print(f"x^[2]  = {p_map(x).to_json()}  eigenvalue {is_p_closed(x).bits:#x}")
print(f"x spans {classify_line(x).value}, y spans {classify_line(y).value}")

els = [e for e in all_elements(F) if not e.is_zero()]
closed = sum(1 for a, b in itertools.product(els, repeat=2)
             if is_p_closed(ProductLieElement(a, b)) is not None)
print(f"{closed} of {len(els) ** 2} pairs with both sides nonzero are p-closed")
