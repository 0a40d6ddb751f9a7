import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unirack.gf import embed, fq_make

FIELDS = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (2, 6), (3, 3)]


@pytest.fixture(params=FIELDS, ids=lambda pm: f"GF({pm[0] ** pm[1]})")
def field(request):
    p, m = request.param
    return fq_make(p, m)


def test_sizes(field):
    assert len(field.elements()) == field.q
    assert len(field.units()) == field.q - 1


def test_field_axioms_exhaustive():
    f = fq_make(2, 2)
    els = f.elements()
    for a in els:
        for b in els:
            assert a + b == b + a
            assert a * b == b * a
            for c in els:
                assert (a + b) + c == a + (b + c)
                assert a * (b + c) == a * b + a * c


def test_units_inverses(field):
    for u in field.units():
        assert u * u.inv() == field.one
        assert u ** (field.q - 1) == field.one


def test_frobenius_is_additive(field):
    p = field.p
    els = field.elements()
    for a in els[: min(len(els), 16)]:
        for b in els[: min(len(els), 16)]:
            assert (a + b) ** p == a**p + b**p


def test_zeta_generates(field):
    if field.q == 2:
        return
    powers = {field.zeta**k for k in range(field.q - 1)}
    assert len(powers) == field.q - 1


def test_parse_roundtrip(field):
    for c in field.elements():
        assert field.parse(repr(c).split(":")[1]) == c


def test_negative_powers():
    f = fq_make(3, 2)
    z = f.zeta
    assert z**-1 == z.inv()
    assert z**-3 == (z * z * z).inv()


def test_embed_is_homomorphism():
    small = fq_make(2, 2)
    big = fq_make(2, 6)
    for a in small.elements():
        for b in small.elements():
            assert embed(a + b, big) == embed(a, big) + embed(b, big)
            assert embed(a * b, big) == embed(a, big) * embed(b, big)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 26), st.integers(0, 26), st.integers(0, 26))
def test_distributivity_gf27(i, j, k):
    f = fq_make(3, 3)
    a, b, c = f.elements()[i], f.elements()[j], f.elements()[k]
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
