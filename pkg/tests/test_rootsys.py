import json

import pytest

from gkm_cherednik.rootsys import (
    ConfigurationError,
    build_root_system,
    coxeter_number,
    weyl_order_formula,
)

SYSTEMS = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4), ("G", 2)]


@pytest.mark.parametrize("t,n,npos,h", [("A", 1, 1, 2), ("A", 2, 3, 3), ("B", 2, 4, 4), ("G", 2, 6, 6),
                                        ("B", 3, 9, 6), ("D", 4, 12, 6)])
def test_counts(t, n, npos, h):
    rs = build_root_system(t, n)
    assert len(rs.positive_roots) == npos
    assert coxeter_number(rs) == h == rs.coxeter_number


@pytest.mark.parametrize("t,n", SYSTEMS)
def test_structure(t, n):
    rs = build_root_system(t, n)
    h = rs.coxeter_number
    assert 2 * len(rs.positive_roots) == n * h
    assert len(rs.roots) == h * n
    for a in rs.positive_roots:
        coords = rs.to_simple(a)
        assert all(c >= 0 and int(c) == c for c in coords)
    for i in range(n):
        for j in range(n):
            assert rs.pair(rs.simple_coroots[i], rs.simple_roots[j]) == rs.cartan[i][j]
    # θ dominates every positive root
    th = rs.to_simple(rs.highest_root)
    for a in rs.positive_roots:
        assert all(x >= y for x, y in zip(th, rs.to_simple(a)))
    assert rs.order == weyl_order_formula(t, n) == len(rs.weyl)


@pytest.mark.parametrize("t,n", SYSTEMS)
def test_simple_reflection_flips_one_root(t, n):
    rs = build_root_system(t, n)
    pos = set(rs.positive_roots)
    for i in range(n):
        s = rs.simple_reflection(i)
        images = [rs.act_weight(s, a) for a in rs.positive_roots]
        flipped = [a for a, b in zip(rs.positive_roots, images) if b not in pos]
        assert flipped == [rs.simple_roots[i]]


@pytest.mark.parametrize("t,n", SYSTEMS)
def test_sign_and_words(t, n):
    rs = build_root_system(t, n)
    for w in rs.weyl[:50]:
        m = rs.identity
        for i in w.word:
            m = rs.mul(m, rs.simple_reflection(i))
        assert m == w
        assert w.sign == (-1) ** len(w.word)


def test_b_and_c_differ_in_root_lengths():
    b2, c2 = build_root_system("B", 2), build_root_system("C", 2)
    assert b2.root_length_class(b2.simple_roots[1]) == "short"
    assert c2.root_length_class(c2.simple_roots[1]) == "long"
    g2 = build_root_system("G", 2)
    assert g2.root_length_class(g2.simple_roots[0]) == "short"


def test_coweight_lattice_is_larger():
    rs = build_root_system("A", 2, "coweight")
    assert rs.label() == "A2/adj"
    assert not all(rs.in_coroot_lattice(e) for e in [(1, 0), (0, 1)])


@pytest.mark.parametrize("t,n", [("E", 6), ("A", 0), ("G", 3), ("D", 2)])
def test_unsupported(t, n):
    with pytest.raises(ConfigurationError):
        build_root_system(t, n)


def test_json_is_canonical():
    rs = build_root_system("B", 2)
    text = rs.dumps()
    assert text == build_root_system("B", 2).dumps()
    data = json.loads(text)
    assert data["rank"] == 2 and len(data["positive_roots"]) == 4
