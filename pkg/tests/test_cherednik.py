from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gkm_cherednik.cherednik import (
    DEFAULT_CONVENTION,
    HBAR,
    CherednikParams,
    DivisibilityError,
    LaurentElem,
    TrigConvention,
    check_algebra_relations,
    compare_dunkl_truncated,
    divide_by_binomial,
    polynomial_window,
    rational_hbar,
    rational_dunkl,
    regular_difference,
    search_conventions,
    singular_coefficient,
    trig_dunkl,
)
from gkm_cherednik.exactfrac import PolyElem
from gkm_cherednik.rootsys import build_root_system

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)
B2 = build_root_system("B", 2)


def ok(report):
    return report["ok"] and all(c["status"] == "pass" for c in report["checks"])


# -- Laurent arithmetic and division ------------------------------------------------

@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.integers(-3, 3), st.integers(-3, 3))
def test_geometric_sum(n, b0, b1):
    beta = (b0, b1) if (b0, b1) != (0, 0) else (1, 0)
    one = LaurentElem.one(2)
    g = one - LaurentElem.monomial(tuple(n * b for b in beta))
    expected = LaurentElem.zero(2)
    for j in range(n):
        expected = expected + LaurentElem.monomial(tuple(j * b for b in beta))
    assert divide_by_binomial(g, beta) == expected


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
                       st.integers(-5, 5), max_size=5),
       st.sampled_from([(1, 0), (0, 1), (1, -1), (2, 1)]))
def test_division_inverts_multiplication(coeffs, beta):
    f = LaurentElem.zero(2)
    for lam, c in coeffs.items():
        f = f + LaurentElem.monomial(lam, c)
    g = f * (LaurentElem.one(2) - LaurentElem.monomial(beta))
    assert divide_by_binomial(g, beta) == f


def test_not_divisible():
    with pytest.raises(DivisibilityError):
        divide_by_binomial(LaurentElem.monomial((1,)), (2,))


# -- trigonometric Dunkl ---------------------------------------------------------

def test_zero_parameter_is_derivative():
    zero = CherednikParams.uniform(0)
    for lam in range(-3, 4):
        f = LaurentElem.monomial((lam,))
        assert trig_dunkl(A1, (1,), f, zero) == f.scale(HBAR.scale(lam))


def test_dunkl_of_one():
    # only the constant shift survives on W-invariants
    c = Fraction(3, 7)
    out = trig_dunkl(A1, (1,), LaurentElem.one(1), CherednikParams.uniform(c))
    assert out == LaurentElem.one(1).scale(HBAR.scale(c * Fraction(1, 2) * A1.pair(A1.simple_coroots[0], (1,))))


def test_dunkl_a1_by_hand():
    # X = e^{ω}, coroot lattice coordinate 1 corresponds to α∨
    c = Fraction(1, 3)
    p = CherednikParams.uniform(c)
    f = LaurentElem.monomial((1,))
    out = trig_dunkl(A1, (1,), f, p)
    lam = A1.pair((1,), (1,))
    k = A1.pair(A1.simple_coroots[0], (1,))
    # (f - s f)/(1 - e^{-α∨}) with s f = e^{-1}: equals e^{1} + e^{0}
    q = LaurentElem.monomial((1,)) + LaurentElem.one(1)
    expected = (f.scale(HBAR.scale(lam)) - q.scale(HBAR.scale(c * k))
                + f.scale(HBAR.scale(c * k * Fraction(1, 2))))
    assert out == expected


@pytest.mark.parametrize("rs", [A1, A2], ids=lambda r: r.label())
def test_trig_relations(rs):
    assert ok(check_algebra_relations(rs, "trigonometric", bound=2 if rs.rank == 1 else 1))


def test_trig_relations_b2_long_short():
    p = CherednikParams({"long": Fraction(2, 5), "short": Fraction(-1, 3)})
    assert ok(check_algebra_relations(B2, "trigonometric", p, bound=1))


def test_trig_relations_a1_bound4():
    assert ok(check_algebra_relations(A1, "trigonometric", bound=4))


def test_convention_search():
    found = search_conventions(A1)
    assert DEFAULT_CONVENTION in found
    assert len(found) == 2
    other = next(c for c in found if c != DEFAULT_CONVENTION)
    assert (other.a, other.sigma, other.epsilon) == (-1, 1, 1)


def test_opposite_signs_fail():
    conv = TrigConvention(1, 1, -1, Fraction(-1), 1)
    rep = check_algebra_relations(A1, "trigonometric", bound=2, conv=conv)
    assert not rep["ok"]
    assert singular_coefficient(conv) == 2


# -- rational Dunkl ---------------------------------------------------------------

@pytest.mark.parametrize("rs", [A1, A2, B2], ids=lambda r: r.label())
def test_rational_relations(rs):
    assert ok(check_algebra_relations(rs, "rational", bound=3))


def test_rational_integer_parameter_a2():
    assert ok(check_algebra_relations(A2, "rational", CherednikParams.uniform(1), bound=3))


def test_rational_zero_parameter():
    zero = CherednikParams.uniform(0)
    h = rational_hbar(A2)
    for g in polynomial_window(A2, 3):
        expected = (g.derivative(0).scale(2) - g.derivative(1)) * h
        assert rational_dunkl(A2, (2, -1), g, zero) == expected


def test_rational_a1_by_hand():
    c = Fraction(2, 9)
    x = PolyElem.var(2, 0)
    h = rational_hbar(A1)
    k = A1.pair(A1.simple_coroots[0], (1,))
    out = rational_dunkl(A1, (1,), x, CherednikParams.uniform(c))
    assert out == h.scale(1 - 2 * c * k)


def test_gkm_flavors():
    assert ok(check_algebra_relations(A1, "CS-on-GKM", bound=1, samples=10))
    assert ok(check_algebra_relations(A1, "ECM-on-GKM", bound=1, samples=10))
    with pytest.raises(ValueError):
        check_algebra_relations(A1, "quantum")


# -- truncated comparison -----------------------------------------------------------

def test_compare_zero_parameter():
    zero = CherednikParams.uniform(0)
    assert ok(compare_dunkl_truncated(A1, None, 6, zero))
    for g in polynomial_window(A1, 3):
        assert regular_difference(A1, (1,), g, zero, 6).is_zero()


def test_compare_a1_order6():
    assert ok(compare_dunkl_truncated(A1, None, 6))
    one = PolyElem.one(polynomial_window(A1, 0)[0].nvars)
    diff = regular_difference(A1, (1,), one, CherednikParams.generic(), 6)
    assert not diff.is_zero()


def test_compare_a2_order4():
    assert ok(compare_dunkl_truncated(A2, None, 4))


def test_compare_opposite_convention_has_pole():
    conv = TrigConvention(1, 1, -1, Fraction(-1), 1)
    rep = compare_dunkl_truncated(A1, None, 4, conv=conv)
    assert not rep["ok"]
    assert rep["checks"][0]["status"] == "fail"


def test_order_limit():
    with pytest.raises(ValueError):
        compare_dunkl_truncated(A1, None, 13)
