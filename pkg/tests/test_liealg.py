import itertools

import pytest

from kummer2.gf2k import FieldSpec
from kummer2.liealg import (GroupType, LieElement, ProductLieElement, all_elements,
                            all_product_elements, bracket, classify_line, is_p_closed, p_map,
                            p_map_product)

GF2 = FieldSpec.default(1)
GF4 = FieldSpec.parse("gf4:0x7")


def L(F, *bits):
    return LieElement.from_bits(F, *bits)


def test_bracket_a_with_e():
    x, y = L(GF2, 1, 0, 0, 0), L(GF2, 0, 0, 0, 1)
    assert bracket(x, y) == L(GF2, 1, 0, 0, 0)


def test_bracket_is_alternating_and_zero_on_a():
    for x in all_elements(GF4):
        assert bracket(x, x).is_zero()
    a_part = [x for x in all_elements(GF4) if x.in_a()]
    for x, y in itertools.product(a_part, repeat=2):
        assert bracket(x, y).is_zero()


def test_bracket_lands_in_a():
    for x, y in itertools.product(all_elements(GF2), repeat=2):
        assert bracket(x, y).in_a()


def test_p_map_examples():
    assert p_map(L(GF2, 1, 0, 0, 0)).is_zero()
    x = L(GF2, 1, 1, 0, 1)
    assert p_map(x) == x
    t = GF4.element(2)
    assert p_map(L(GF4, 0, 0, 0, 2)) == LieElement((GF4.zero(),) * 3, t * t)


def test_p_map_product_examples():
    zero = ProductLieElement(L(GF2, 0, 0, 0, 0), L(GF2, 0, 0, 0, 0))
    assert p_map_product(zero) == zero
    fixed = ProductLieElement(L(GF2, 1, 0, 1, 1), L(GF2, 0, 1, 1, 1))
    assert p_map_product(fixed) == fixed
    in_a = ProductLieElement(L(GF2, 1, 1, 0, 0), L(GF2, 0, 1, 0, 0))
    assert p_map_product(in_a).is_zero()


@pytest.mark.parametrize("F", [GF2, GF4], ids=["gf2", "gf4"])
def test_restricted_axioms_exhaustive(F):
    els = list(all_elements(F))
    for x in els:
        px = p_map(x)
        for c in F.elements():
            assert p_map(x.scale(c)) == px.scale(c * c)
    for x, y in itertools.product(els, repeat=2):
        px = p_map(x)
        assert bracket(px, y) == bracket(x, bracket(x, y))
        assert p_map(x + y) == px + p_map(y) + bracket(x, y)


def test_jacobi_exhaustive_gf2():
    els = list(all_elements(GF2))
    for x, y, z in itertools.product(els, repeat=3):
        s = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert s.is_zero()


@pytest.mark.parametrize("F", [GF2, GF4], ids=["gf2", "gf4"])
def test_every_nonzero_vector_is_p_closed(F):
    for x in all_elements(F):
        if not x.is_zero():
            assert is_p_closed(x) == x.lam


def test_p_closed_zero_raises():
    with pytest.raises(ValueError):
        is_p_closed(L(GF2, 0, 0, 0, 0))


def test_product_examples():
    closed = ProductLieElement(L(GF2, 1, 0, 0, 1), L(GF2, 0, 1, 0, 1))
    assert is_p_closed(closed) == GF2.one()
    open_ = ProductLieElement(L(GF2, 1, 0, 0, 1), L(GF2, 0, 1, 0, 0))
    assert is_p_closed(open_) is None


def test_product_closed_set_is_union_of_three_subalgebras_gf2():
    for pair in all_product_elements(GF2):
        if pair.is_zero():
            continue
        x, y = pair.left, pair.right
        in_union = x.is_zero() or y.is_zero() or (x.lam == y.lam)
        # (a + a) x| b means both e-coefficients agree
        assert (is_p_closed(pair) is not None) == in_union


def test_product_criterion_gf4_both_nonzero():
    nonzero = [x for x in all_elements(GF4) if not x.is_zero()]
    for x in nonzero[::7]:
        for y in nonzero:
            c = is_p_closed(ProductLieElement(x, y))
            assert (c is not None) == (x.lam == y.lam)
            if c is not None:
                assert c == x.lam


def test_classify_line():
    assert classify_line(L(GF2, 1, 1, 0, 0)) is GroupType.ALPHA2
    assert classify_line(L(GF2, 1, 0, 0, 1)) is GroupType.MU2
    t = GF4.element(2)
    diag = ProductLieElement(LieElement((t, GF4.zero(), GF4.one()), t),
                             LieElement((GF4.one(), t, GF4.zero()), t))
    assert classify_line(diag) is GroupType.MU2
    with pytest.raises(ValueError):
        classify_line(ProductLieElement(L(GF2, 1, 0, 0, 1), L(GF2, 0, 1, 0, 0)))


def test_json_round_trip():
    x = L(GF4, 1, 2, 3, 2)
    assert x.to_json() == '["0x1", "0x2", "0x3", "0x2"]'
    assert LieElement.from_json(x.to_json(), GF4) == x
    with pytest.raises(ValueError):
        LieElement.from_json('["0x1"]', GF4)


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        LieElement((GF4.one(), GF2.one(), GF4.one()), GF4.one())
