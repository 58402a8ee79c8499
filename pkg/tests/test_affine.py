import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gkm_cherednik.affine import (
    AffineCharacter,
    act_affine_root,
    act_char,
    affine_reflection,
    alcove_profile,
    ball,
    braid_orders,
    char_length,
    finite,
    identity,
    interior_point,
    length,
    length_zero_elements,
    multiply,
    negate,
    node_permutation,
    reduced_decomposition,
    simple_affine_reflections,
    translation,
)
from gkm_cherednik.rootsys import build_root_system

A1 = build_root_system("A", 1)
SYSTEMS = [("A", 1, "coroot"), ("A", 2, "coroot"), ("B", 2, "coroot"), ("G", 2, "coroot"),
           ("A", 1, "coweight"), ("A", 2, "coweight"), ("B", 2, "coweight")]


def systems():
    return [build_root_system(*s) for s in SYSTEMS]


def gens_of(rs):
    g = simple_affine_reflections(rs) + length_zero_elements(rs)[1:]
    g += [translation(rs, tuple(int(i == j) for j in range(rs.rank))) for i in range(rs.rank)]
    return g


@st.composite
def elements(draw, rs):
    gens = gens_of(rs)
    x = identity(rs)
    for i in draw(st.lists(st.integers(0, len(gens) - 1), max_size=8)):
        x = x * gens[i]
    return x


def test_a1_examples():
    s = finite(A1, A1.simple_reflection(0))
    t = translation(A1, A1.simple_coroots[0])
    alpha = A1.simple_roots[0]
    assert s * t * s == t.inverse()
    assert s * s == identity(A1)
    assert identity(A1) * t == t
    assert act_char(t, AffineCharacter(alpha, 0)) == AffineCharacter(alpha, 2)
    assert act_char(s, AffineCharacter(alpha, -1)) == AffineCharacter((-alpha[0],), -1)
    assert s * affine_reflection(A1, alpha, -1) == t
    assert affine_reflection(A1, alpha, 0) == s


def test_a1_profiles():
    s = finite(A1, A1.simple_reflection(0))
    t = translation(A1, A1.simple_coroots[0])
    assert alcove_profile(identity(A1)).profile == (0,)
    assert alcove_profile(t).profile == (2,)
    assert alcove_profile(s).profile == (-1,)


def test_interior_point_not_on_a_wall():
    for rs in systems():
        p = interior_point(rs)
        for a in rs.positive_roots:
            v = sum(x * y for x, y in zip(a, p))
            assert 0 < v < 1


@pytest.mark.parametrize("k", range(-2, 3))
def test_affine_reflections_are_involutions(k):
    for rs in systems():
        for a in rs.positive_roots:
            r = affine_reflection(rs, a, k)
            assert (r * r).is_identity()
            # s_{α,k} negates α + kħ
            assert act_char(r, AffineCharacter(a, k)) == AffineCharacter(tuple(-c for c in a), -k)


def test_mixed_systems_rejected():
    with pytest.raises(ValueError):
        multiply(identity(A1), identity(build_root_system("A", 2)))


def test_non_root_rejected():
    with pytest.raises(ValueError):
        affine_reflection(A1, (4,), 0)


@pytest.mark.parametrize("spec", SYSTEMS)
def test_group_law_properties(spec):
    rs = build_root_system(*spec)

    @settings(max_examples=40, deadline=None)
    @given(elements(rs), elements(rs), elements(rs))
    def check(x, y, z):
        assert (x * y) * z == x * (y * z)
        assert (x * x.inverse()).is_identity()
        chis = [AffineCharacter(tuple(int(i == j) for j in range(rs.rank)), 0) for i in range(rs.rank)]
        chis.append(AffineCharacter((0,) * rs.rank, 1))
        for chi in chis:
            assert act_char(x * y, chi) == act_char(x, act_char(y, chi))
            assert act_affine_root(x, chi) == act_char(negate(x), chi)
        assert negate(x * y) == negate(x) * negate(y)
        assert char_length(x) == length(negate(x))

    check()


@pytest.mark.parametrize("spec", SYSTEMS[:4])
def test_profile_injective_and_faithful(spec):
    rs = build_root_system(*spec)
    elems = ball(rs, 6)
    profiles = {alcove_profile(x).profile for x in elems}
    assert len(profiles) == len(elems)
    chis = [AffineCharacter(tuple(int(i == j) for j in range(rs.rank)), 0) for i in range(rs.rank)]
    images = {tuple(act_char(x, c) for c in chis) for x in elems}
    assert len(images) == len(elems)


@pytest.mark.parametrize("spec", SYSTEMS[:4])
def test_wall_crossing(spec):
    rs = build_root_system(*spec)
    for x in ball(rs, 4):
        p = alcove_profile(x).profile
        for s in simple_affine_reflections(rs, "alcove"):
            q = alcove_profile(x * s).profile
            diffs = [b - a for a, b in zip(p, q) if a != b]
            assert len(diffs) == 1 and abs(diffs[0]) == 1
            assert abs(length(x * s) - length(x)) == 1


@pytest.mark.parametrize("spec", SYSTEMS)
def test_reduced_decomposition(spec):
    rs = build_root_system(*spec)
    gens = simple_affine_reflections(rs)
    for x in ball(rs, 4, "character", extended=True):
        pi, word = reduced_decomposition(x)
        assert char_length(pi) == 0 and len(word) == char_length(x)
        y = pi
        for i in word:
            y = y * gens[i]
        assert y == x


@pytest.mark.parametrize("spec", SYSTEMS)
def test_length_zero_group(spec):
    rs = build_root_system(*spec)
    pis = length_zero_elements(rs)
    assert pis[0].is_identity()
    assert all(char_length(p) == 0 for p in pis)
    n = rs.rank + 1
    for p in pis:
        perm = node_permutation(p)
        assert sorted(perm) == list(range(n))
    if rs.lattice == "coroot":
        assert len(pis) == 1


def test_braid_orders():
    assert braid_orders(A1) == {(0, 1): None}
    a2 = braid_orders(build_root_system("A", 2))
    assert set(a2.values()) == {3}
    g2 = braid_orders(build_root_system("G", 2))
    assert sorted(v for v in g2.values()) == [2, 3, 6]
    gens = simple_affine_reflections(build_root_system("B", 2))
    rs = build_root_system("B", 2)
    for (i, j), m in braid_orders(rs).items():
        x = identity(rs)
        for _ in range(m):
            x = x * gens[i] * gens[j]
        assert x.is_identity()


def test_canonical_string():
    x = translation(A1, (1,)) * finite(A1, A1.simple_reflection(0))
    assert str(x) == "w:[1];t:[-1]"
    assert str(identity(A1)) == "w:[];t:[0]"
