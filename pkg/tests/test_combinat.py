import csv
import io

import pytest

from gkm_cherednik.affine import length, translation
from gkm_cherednik.combinat import (
    alcove_ideal,
    bruhat_cover_violations,
    bruhat_covers,
    equivalence_classes,
    in_region,
    orbit_statistics,
    perm_module_character,
    weak_order_violations,
)
from gkm_cherednik.rootsys import build_root_system


def rs(t, r, lattice="coroot"):
    return build_root_system(t, r, lattice)


@pytest.mark.parametrize("spec,d,n", [
    (("A", 1), 0, 1), (("A", 1), 1, 3), (("A", 1), 2, 5), (("A", 1), 3, 7),
    (("A", 2), 1, 16), (("A", 2), 2, 49), (("B", 2), 1, 25), (("C", 2), 1, 25),
    (("G", 2), 1, 49),
])
def test_alcove_counts(spec, d, n):
    ideal = alcove_ideal(rs(*spec), d)
    assert ideal.count == ideal.expected == n


def test_coweight_lattice_uses_coroot_ideal():
    assert alcove_ideal(rs("A", 2, "coweight"), 1).count == 16


def test_ideal_members_in_region():
    ideal = alcove_ideal(rs("B", 2), 1)
    assert all(in_region(x, 1) for x in ideal.elements)
    lengths = [length(x) for x in ideal.elements]
    assert lengths == sorted(lengths) and lengths[0] == 0


@pytest.mark.parametrize("spec", [("A", 2), ("B", 2), ("G", 2)])
def test_right_weak_order_closed(spec):
    assert weak_order_violations(alcove_ideal(rs(*spec), 1), "right") == []


def test_region_not_bruhat_closed():
    a2 = rs("A", 2)
    ideal = alcove_ideal(a2, 1)
    x = translation(a2, (-1, -1))
    assert x in ideal
    left = weak_order_violations(ideal, "left")
    assert (str(x), "w:[2];t:[-1,-1]") in left
    assert len(bruhat_cover_violations(ideal)) == 6


def test_bruhat_covers_shorter_by_one():
    g2 = rs("G", 2)
    for x in alcove_ideal(g2, 1).elements:
        for y in bruhat_covers(x):
            assert length(y) == length(x) - 1


def test_csv_profiles():
    ideal = alcove_ideal(rs("A", 1), 2)
    rows = list(csv.reader(io.StringIO(ideal.to_csv())))
    assert rows[0][:2] == ["element", "length"]
    assert len(rows) == 6
    assert [p["element"] for p in ideal.profiles()] == [r[0] for r in rows[1:]]


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_classes_a1(d):
    s = equivalence_classes(rs("A", 1), d, 10)
    assert s.failures == []
    assert s.visible_count == 2 * d + 1


@pytest.mark.parametrize("spec,d,radius", [(("A", 2), 1, 8), (("A", 2), 2, 8), (("B", 2), 1, 8)])
def test_classes_rank2(spec, d, radius):
    s = equivalence_classes(rs(*spec), d, radius)
    js = s.to_json()
    assert js["failures"] == []
    assert js["visible_meeting_ideal"] == js["visible_classes"] <= js["bound"]
    assert sum(len(c) for c in s.classes) == s.ball_size


def test_classes_d0_single():
    s = equivalence_classes(rs("A", 2), 0, 6)
    assert s.visible_count == 1


@pytest.mark.parametrize("spec,d,dim,inv", [
    (("A", 1), 1, 3, 2), (("A", 1), 2, 5, 3), (("A", 2), 1, 16, 5), (("B", 2), 1, 25, 6),
])
def test_character_examples(spec, d, dim, inv):
    t = perm_module_character(rs(*spec), d)
    assert (t.dim, t.invariants) == (dim, inv)


@pytest.mark.parametrize("spec", [("A", 1), ("A", 2), ("B", 2), ("C", 2), ("G", 2)])
@pytest.mark.parametrize("d", [0, 1, 2])
def test_character_matches_orbits(spec, d):
    r = rs(*spec)
    t = perm_module_character(r, d)
    o = orbit_statistics(r, d)
    assert t.dim == o["points"]
    assert t.invariants == o["orbits"]
    assert t.sign_multiplicity == o["sign_orbits"]
    assert sum(row["size"] for row in t.rows) == r.order
    assert next(row["chi"] for row in t.rows if row["representative"] == []) == t.dim


def test_character_serialization():
    t = perm_module_character(rs("A", 2), 1)
    js = t.to_json()
    assert js["dim"] == 16 and js["modulus"] == 4
    assert t.to_csv().splitlines()[0] == "representative,size,sign,chi"
