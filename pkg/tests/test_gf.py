"""Finite-field layer: axioms, Frobenius, primitive elements."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from regclass.gf import make_field

FIELDS = [(2, 1), (2, 4), (2, 7), (3, 1), (3, 2), (3, 4), (5, 1), (5, 2),
          (7, 1), (13, 1), (17, 1), (2, 5)]


@pytest.fixture(scope="module", params=FIELDS, ids=lambda p: f"GF({p[0]}^{p[1]})")
def field(request):
    ell, f = request.param
    return make_field(ell, f)


def _elem(F, n):
    return F.from_int(n % F.q)


@given(data=st.data())
def test_field_axioms(field, data):
    F = field
    a = _elem(F, data.draw(st.integers(0, F.q - 1)))
    b = _elem(F, data.draw(st.integers(0, F.q - 1)))
    c = _elem(F, data.draw(st.integers(0, F.q - 1)))
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.zero) == a
    assert F.mul(a, F.one) == a
    assert F.add(a, F.neg(a)) == F.zero
    if a != F.zero:
        assert F.mul(a, F.inv(a)) == F.one


def test_element_enumeration(field):
    F = field
    elems = list(F.elements())
    assert len(elems) == F.q == len(set(elems))
    assert all(F.from_int(F.to_int(a)) == a for a in elems)


def test_frobenius_is_automorphism(field):
    F = field
    elems = list(F.elements())[: min(F.q, 32)]
    for a in elems:
        for b in elems[:8]:
            assert F.frobenius(F.add(a, b), 1) == \
                F.add(F.frobenius(a, 1), F.frobenius(b, 1))
            assert F.frobenius(F.mul(a, b), 1) == \
                F.mul(F.frobenius(a, 1), F.frobenius(b, 1))
        assert F.frobenius(a, F.f) == a  # order divides f
        assert F.frobenius(a, 1) == F.pow(a, F.ell)


def test_primitive_element(field):
    F = field
    g = F.primitive_element()
    assert F.element_order(g) == F.q - 1
    # powers of g enumerate all nonzero elements
    seen = set()
    x = F.one
    for _ in range(F.q - 1):
        seen.add(x)
        x = F.mul(x, g)
    assert len(seen) == F.q - 1


def test_fermat_identity(field):
    F = field
    for a in list(F.elements()):
        assert F.pow(a, F.q) == a  # x^q = x for every element


def test_make_field_rejects_bad_input():
    with pytest.raises(Exception):
        make_field(4, 1)  # 4 is not prime
    with pytest.raises(Exception):
        make_field(2, 0)
