import random

import pytest
from hypothesis import given, settings, strategies as st

from gkm_cherednik.exactfrac import FracElem, PolyElem
from gkm_cherednik.gkmmodel import GkmClass, Reflection, cs_apply, membership, random_class
from gkm_cherednik.sl2 import (
    BasisLabel,
    NonMembershipError,
    admissible_labels,
    element_to_index,
    entry,
    index_to_element,
    is_admissible,
    label_for_index,
    leading_index,
    resum,
    sl2_basis_element,
    sl2_expand,
    verify_sl2,
)


def recip(*forms):
    f = FracElem.one(2)
    for c in forms:
        f = f * FracElem.reciprocal_linear(c)
    return f


def by_index(xi):
    return {element_to_index(x): f for x, f in xi.entries.items()}


def test_index_roundtrip():
    for l in range(-9, 10):
        assert element_to_index(index_to_element(l)) == l


def test_b0_is_indicator():
    b = sl2_basis_element(0, (0, 5))
    assert by_index(b) == {5: FracElem.one(2)}


def test_b1_0():
    assert by_index(sl2_basis_element(1, (1, 0))) == {0: recip((1, 0)), 1: -recip((1, 0))}


def test_b2_0_entries():
    b = by_index(sl2_basis_element(2, (2, 0)))
    a = recip((1, 0), (1, 1))
    c = recip((1, 1), (1, 2))
    assert b == {0: a, 1: -a, 2: -c, 3: c}
    assert membership(sl2_basis_element(2, (2, 0)))


def test_binomial_r_choose_m_is_not_a_class():
    # with C(r, m) in place of C(r-1, m) the middle poles no longer cancel
    a = recip((1, 0), (1, 1))
    c = recip((1, 1), (1, 2)).scale(2)
    vals = {0: a, 1: -a, 2: -c, 3: c}
    xi = GkmClass(index_to_element(0).rs, 2, {index_to_element(l): f for l, f in vals.items()})
    assert not membership(xi)
    with pytest.raises(NonMembershipError):
        sl2_expand(xi, 2)


def test_inadmissible_label():
    with pytest.raises(ValueError):
        sl2_basis_element(1, (0, 1))
    with pytest.raises(ValueError):
        sl2_basis_element(1, (2, 0))


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_leading_index_bijective(d):
    for l in range(-15, 16):
        lab = label_for_index(l, d)
        assert is_admissible(lab, d)
        assert leading_index(lab) == l
    labs = admissible_labels(d, -15, 15)
    assert len(set(labs)) == len(labs) == 31


def test_expand_single_label():
    for d in (1, 2, 3):
        for lab in admissible_labels(d, -5, 5):
            assert sl2_expand(sl2_basis_element(d, lab), d) == {lab: PolyElem.one(2)}


def test_expand_indicator_d1():
    ae = sl2_basis_element(0, (0, 0))
    ae = GkmClass(ae.rs, 1, ae.entries)
    coeffs = sl2_expand(ae, 1)
    assert resum(coeffs, 1) == ae
    assert all(lab.r == 1 or lab == BasisLabel(0, 0) for lab in coeffs)


def test_expand_reflected_indicator():
    ae = GkmClass.indicator(index_to_element(0), 1)
    sae = cs_apply(Reflection(1), ae)
    assert resum(sl2_expand(sae, 1), 1) == sae


@pytest.mark.parametrize("d", [1, 2, 3])
def test_verify_sl2(d):
    rep = verify_sl2(d, sample_count=30)
    assert all(c["status"] == "pass" for c in rep["checks"])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 3), st.integers(0, 10**6))
def test_roundtrip_random(d, seed):
    xi = random_class(index_to_element(0).rs, d, random.Random(seed))
    assert resum(sl2_expand(xi, d), d) == xi


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(-6, 6), st.integers(-3, 3), st.integers(-3, 3))
def test_expand_is_linear(d, l, a, b):
    lab = label_for_index(l, d)
    p = PolyElem.linear([a, b])
    xi = sl2_basis_element(d, lab).scale(p)
    got = sl2_expand(xi, d)
    assert got == ({lab: p} if not p.is_zero() else {})


def test_entry_outside_support_is_zero():
    assert entry(BasisLabel(2, 0), 4).is_zero()
    assert entry(BasisLabel(2, 0), -1).is_zero()
