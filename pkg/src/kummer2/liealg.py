"""The restricted Lie algebra g = a x| b in characteristic 2, and g + g.

``a`` is three-dimensional with zero bracket and zero 2-map; ``b`` is spanned
by ``e`` with ``e^[2] = e``.  On the semidirect product

    [a + l e, a' + l' e] = l a' - l' a,      (a + l e)^[2] = l (a + l e).

Coordinates of ``a`` are the coefficients of u^-4 D, u^-2 D, D (D = d/du^-1),
so a vector (l4, l2, l0, l) is the vector field
(l4 u^-4 + l2 u^-2 + l0) D + l u D_u on the cuspidal curve.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import product

from .gf2k import FieldElement, FieldSpec


class GroupType(str, Enum):
    MU2 = "Mu2"
    ALPHA2 = "Alpha2"


@dataclass(frozen=True)
class LieElement:
    a: tuple
    lam: FieldElement

    def __post_init__(self):
        if len(self.a) != 3:
            raise ValueError("a-part must have three coordinates")
        object.__setattr__(self, "a", tuple(self.a))
        F = self.lam.spec
        for c in self.a:
            if c.spec is not F and c.spec != F:
                raise ValueError("coordinates from different fields")

    @classmethod
    def _unchecked(cls, a: tuple, lam: FieldElement) -> "LieElement":
        # internal results are valid by construction; skip the field checks
        obj = object.__new__(cls)
        obj.__dict__.update(a=a, lam=lam)
        return obj

    @classmethod
    def from_bits(cls, field: FieldSpec, l4, l2, l0, lam):
        return cls(tuple(field.element(b) for b in (l4, l2, l0)), field.element(lam))

    @classmethod
    def zero(cls, field):
        return cls.from_bits(field, 0, 0, 0, 0)

    @property
    def field(self):
        return self.lam.spec

    def coords(self):
        return (*self.a, self.lam)

    def __add__(self, other):
        a, b = self.a, other.a
        return LieElement._unchecked((a[0] + b[0], a[1] + b[1], a[2] + b[2]), self.lam + other.lam)

    def scale(self, c: FieldElement):
        a = self.a
        return LieElement._unchecked((c * a[0], c * a[1], c * a[2]), c * self.lam)

    def __rmul__(self, c):
        return self.scale(c)

    def is_zero(self):
        return not any(self.coords())

    def in_a(self):
        return not self.lam

    def to_json(self):
        return json.dumps([c.hex() for c in self.coords()])

    @classmethod
    def from_json(cls, text, field):
        vals = json.loads(text)
        if len(vals) != 4:
            raise ValueError("expected [l4, l2, l0, tau]")
        return cls.from_bits(field, *(int(v, 16) for v in vals))


@dataclass(frozen=True)
class ProductLieElement:
    left: LieElement
    right: LieElement

    def coords(self):
        return self.left.coords() + self.right.coords()

    def __add__(self, other):
        return ProductLieElement(self.left + other.left, self.right + other.right)

    def scale(self, c):
        return ProductLieElement(self.left.scale(c), self.right.scale(c))

    def __rmul__(self, c):
        return self.scale(c)

    def is_zero(self):
        return self.left.is_zero() and self.right.is_zero()


def bracket(x, y):
    """Lie bracket; componentwise on products."""
    if isinstance(x, ProductLieElement):
        return ProductLieElement(bracket(x.left, y.left), bracket(x.right, y.right))
    # l a' - l' a, and minus is plus in characteristic 2
    lx, ly = x.lam, y.lam
    a, b = x.a, y.a
    a = (lx * b[0] + ly * a[0], lx * b[1] + ly * a[1], lx * b[2] + ly * a[2])
    return LieElement._unchecked(a, lx.spec._el(0))


def p_map(x: LieElement) -> LieElement:
    """x^[2] = l x, since l^(p-1) = l for p = 2."""
    return x.scale(x.lam)


def p_map_product(x: ProductLieElement) -> ProductLieElement:
    return ProductLieElement(p_map(x.left), p_map(x.right))


def _p_image(x):
    return p_map_product(x) if isinstance(x, ProductLieElement) else p_map(x)


def is_p_closed(x):
    """Eigenvalue c with x^[2] = c x, or ``None`` if x^[2] is off the line kx.

    Decided by a rank test on {x, x^[2]}, not by the closed-form p-map shape.
    """
    if x.is_zero():
        raise ValueError("p-closedness is defined for nonzero vectors only")
    xs = x.coords()
    ys = _p_image(x).coords()
    pivot = next(i for i, c in enumerate(xs) if c)
    c = ys[pivot] / xs[pivot]
    if all(y == c * v for v, y in zip(xs, ys)):
        return c
    return None


def classify_line(x) -> GroupType:
    """Alpha2 for eigenvalue 0, Mu2 otherwise."""
    c = is_p_closed(x)
    if c is None:
        raise ValueError("vector is not p-closed")
    return GroupType.ALPHA2 if not c else GroupType.MU2


def all_elements(field: FieldSpec):
    els = field.elements()
    for l4, l2, l0, lam in product(els, repeat=4):
        yield LieElement((l4, l2, l0), lam)


def all_product_elements(field: FieldSpec):
    lie = list(all_elements(field))
    for x in lie:
        for y in lie:
            yield ProductLieElement(x, y)
