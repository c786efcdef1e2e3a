"""Catalog constructions: orders, outer actions, matrix helpers."""

from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from regclass import gf
from regclass.catalog import (default_catalog, entry_by_key, extended_catalog,
                              family_order, mat_identity, mat_inv, mat_mul,
                              mat_transpose, projective_points, sl2_center)
from regclass.permgroup import compose, conjugate, inverse, is_identity

SMALL_ORDER = 30_000


def test_catalog_size_and_uniqueness():
    entries = default_catalog()
    assert len(entries) >= 60
    keys = [e.key for e in entries]
    assert len(keys) == len(set(keys))
    assert set(e.key for e in extended_catalog()) > set(keys)


@pytest.mark.parametrize(
    "key", [e.key for e in default_catalog() if e.order <= SMALL_ORDER])
def test_build_order_matches_formula(key):
    entry = entry_by_key(key)
    group, conjs = entry.build()
    assert group.order == entry.order
    for c in conjs:
        assert group.normalized_by(c)


def test_family_order_values():
    assert family_order("psl2", (7,)) == 168
    assert family_order("psl2", (8,)) == 504
    assert family_order("pgl2", (5,)) == 120
    assert family_order("sl2", (5,)) == 120
    assert family_order("psl3_with_duality", (4,)) == 20160
    assert family_order("sp4", (3,)) == 25920
    assert family_order("sym", (6,)) == 720
    assert family_order("frobenius", (17, 4)) == 68
    with pytest.raises(ValueError):
        family_order("unknown", (1,))


def test_entry_by_key_errors():
    with pytest.raises(KeyError):
        entry_by_key("psl2(6)")
    # extended entries invisible in default-only lookup
    with pytest.raises(KeyError):
        entry_by_key("psl2(243)", extended=False)
    assert entry_by_key("psl2(243)").order == 243 * (243**2 - 1) // 2


def test_simple_and_solvable_flags():
    assert entry_by_key("alt(5)").simple
    assert not entry_by_key("alt(4)").simple
    assert entry_by_key("alt(4)").solvable
    assert entry_by_key("sym(4)").solvable
    assert not entry_by_key("sym(5)").solvable
    assert entry_by_key("sl2(3)").solvable
    assert not entry_by_key("sl2(5)").solvable


def test_sl2_center_is_central():
    for q in (5, 9):
        group, _ = entry_by_key(f"sl2({q})").build()
        (z,) = sl2_center(q)
        assert group.contains(z)
        assert not is_identity(z)
        assert is_identity(compose(z, z))
        for g in group.generators:
            assert (conjugate(g, z, inverse(g)) == z).all()


def test_frobenius_conjugator_is_outer():
    # |PGammaL2(8) : PSL2(8)| = 3: the field conjugator is not in the group
    group, conjs = entry_by_key("psl2(8)").build()
    assert len(conjs) == 1
    assert not group.contains(conjs[0])


def test_psl3_duality_conjugator_swaps_points_and_lines():
    group, conjs = entry_by_key("psl3_with_duality(2)").build()
    duality = conjs[-1]
    n = group.degree // 2
    assert all(int(duality[i]) == n + i for i in range(n))


def test_projective_point_count():
    for ell, f, dim in [(2, 1, 2), (3, 1, 2), (2, 2, 3), (5, 1, 3)]:
        F = gf.make_field(ell, f)
        q = F.q
        expected = (q**dim - 1) // (q - 1)
        assert len(projective_points(F, dim)) == expected


@given(st.integers(0, 5**9 - 1))
def test_mat_inv_over_gf5(code):
    F = gf.make_field(5, 1)
    entries = []
    c = code
    for _ in range(9):
        c, r = divmod(c, 5)
        entries.append(F.from_int(r))
    A = tuple(tuple(entries[3 * i + j] for j in range(3)) for i in range(3))
    try:
        Ainv = mat_inv(F, A)
    except ZeroDivisionError:
        return  # singular
    assert mat_mul(F, A, Ainv) == mat_identity(F, 3)
    assert mat_transpose(mat_transpose(A)) == A
