from unirack.gf import fq_make
from unirack.matgrp import Mat, group_closure
from unirack.rack import (
    FiniteRack,
    austere_check,
    class_rack,
    product_rack_type_d,
    type_c_pair,
    type_d_pair,
    type_f_quad,
)


def _sl2(q):
    field = fq_make(2, 1) if q == 2 else fq_make(3, 1)
    a = Mat.from_int_rows(field, [[1, 1], [0, 1]])
    b = Mat.from_int_rows(field, [[1, 0], [1, 1]])
    return field, group_closure([a, b])


def test_rack_axioms_on_class_rack():
    field, G = _sl2(3)
    x = Mat.from_int_rows(field, [[1, 1], [0, 1]])
    rack = class_rack(G, x)
    els = rack.elements
    for a in els:
        imgs = {rack.op(a, b) for b in els}
        assert imgs == set(els)
        for b in els:
            assert rack.inv_op(a, rack.op(a, b)) == b
            for c in els:
                assert rack.op(a, rack.op(b, c)) == rack.op(rack.op(a, b), rack.op(a, c))


def test_singleton_rack_is_austere():
    field = fq_make(2, 1)
    rack = FiniteRack.conjugation([Mat.identity(field, 2)])
    assert austere_check(rack).outcome == "austere-verified"


def test_type_d_pair_negative_on_commuting():
    field = fq_make(3, 1)
    r = Mat.from_int_rows(field, [[1, 1], [0, 1]])
    s = Mat.from_int_rows(field, [[1, 2], [0, 1]])
    ok, wit = type_d_pair(r, s)
    assert not ok


def test_type_c_pair_negative_on_equal_class_reps():
    field = fq_make(3, 1)
    r = Mat.from_int_rows(field, [[1, 1], [0, 1]])
    ok, wit = type_c_pair(r, r)
    assert not ok


def test_type_f_quad_negative_on_commuting_quad():
    field = fq_make(5, 1)
    quad = [Mat.from_int_rows(field, [[1, k], [0, 1]]) for k in (1, 2, 3, 4)]
    ok, wit = type_f_quad(quad)
    assert not ok


def test_product_rack_type_d_witnesses():
    field = fq_make(5, 1)
    x1 = Mat.from_int_rows(field, [[1, 1], [0, 1]])
    sigma = Mat.from_int_rows(field, [[0, 1], [-1, 0]])
    x2 = sigma * x1 * sigma.inv()
    y1 = x1
    y2 = Mat.from_int_rows(field, [[1, 4], [0, 1]])
    assert product_rack_type_d(x1, x2, y1, y2)
    assert not product_rack_type_d(x1, x1, y1, y2)
    assert not product_rack_type_d(x1, x2, y1, y1)


def test_abelian_rack_austere():
    field = fq_make(2, 2)
    # commuting unipotent matrices form an abelian conjugation rack
    els = [Mat(field, [[field.one, c], [field.zero, field.one]]) for c in field.elements()]
    rack = FiniteRack.conjugation(els)
    assert austere_check(rack).outcome == "austere-verified"
