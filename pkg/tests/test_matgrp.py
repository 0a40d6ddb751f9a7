import pytest

from unirack.chevalley import structure_constants, word
from unirack.gf import fq_make
from unirack.matgrp import (
    GroupSpec,
    Mat,
    antidiag_ones,
    chev_to_matrix,
    group_closure,
    jordan_partition,
    sp_label,
    su_spec,
    su_uf_elements,
)


def _jordan_matrix(field, parts):
    n = sum(parts)
    rows = [[0] * n for _ in range(n)]
    i = 0
    for p in parts:
        for k in range(p):
            rows[i + k][i + k] = 1
            if k + 1 < p:
                rows[i + k][i + k + 1] = 1
        i += p
    return Mat(field, rows)


@pytest.mark.parametrize("parts", [(1,), (2,), (2, 1), (3, 1), (2, 2), (4,), (3, 2, 1)])
@pytest.mark.parametrize("pm", [(2, 1), (3, 1), (2, 2)])
def test_jordan_partition_on_jordan_matrices(parts, pm):
    field = fq_make(*pm)
    assert jordan_partition(_jordan_matrix(field, parts)) == tuple(sorted(parts, reverse=True))


def test_jordan_partition_rejects_non_unipotent():
    field = fq_make(3, 1)
    m = Mat.from_int_rows(field, [[2, 0], [0, 2]])
    with pytest.raises(ValueError):
        jordan_partition(m)


def test_group_closure_sl2():
    field = fq_make(3, 1)
    a = Mat.from_int_rows(field, [[1, 1], [0, 1]])
    b = Mat.from_int_rows(field, [[1, 0], [1, 1]])
    assert len(group_closure([a, b])) == 24


def test_sp4_membership_and_label():
    spec = GroupSpec("Sp", 4, 2)
    field = spec.field
    sc = structure_constants("C", 2)
    for r in sc.rs.positive_roots:
        g = chev_to_matrix("C", word(sc, field, (r, field.one)))
        assert spec.is_member(g)
        lab = sp_label(g, spec)
        assert sum(size * (2 if kind == "W" else 1) * 1 for kind, size, _ in lab) >= 2


def test_su_generators_are_members():
    for n, q in ((3, 2), (4, 2), (3, 3)):
        spec = su_spec(n, q)
        for g in su_uf_elements(n, q):
            assert spec.is_member(g)


def test_antidiag_is_symplectic_in_char2():
    spec = GroupSpec("Sp", 4, 2)
    assert spec.is_member(antidiag_ones(spec.field, 4))


def test_frobenius_and_det():
    field = fq_make(2, 2)
    z = field.zeta
    m = Mat(field, [[z, field.one], [field.zero, z]])
    assert m.det() == z * z
    assert m.frobenius(2).entry(0, 0) == z**2
