"""Alcove counts, the cell equivalence relation and the permutation character.

Everything here works in the alcove model of the affine Weyl group
``W ⋉ Λ0`` (coroot lattice).  Questions about tangent weights are answered by
:mod:`gkm_cherednik.gkmmodel` in the character model, through the
automorphism :func:`gkm_cherednik.affine.negate`.
"""

from __future__ import annotations

import csv
import io
import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .affine import (
    AffineWeylElement,
    affine_reflection,
    alcove_profile,
    ball,
    identity,
    length,
    negate,
    simple_affine_reflections,
    simple_affine_roots,
)
from .gkmmodel import swap_condition
from .rootsys import RootSystem, build_root_system


class CountMismatch(AssertionError):
    pass


def _simply_connected(rs: RootSystem) -> RootSystem:
    if rs.lattice == "coroot":
        return rs
    return build_root_system(rs.cartan_type, rs.rank, "coroot")


class UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def add(self, x) -> None:
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def groups(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


# -- the ideal ------------------------------------------------------------------

def in_region(x: AffineWeylElement, d: int) -> bool:
    """``k_{α_i}(x) >= -d`` for simple ``α_i`` and ``k_θ(x) <= d``."""
    rs = x.rs
    prof = alcove_profile(x).profile
    idx = {a: i for i, a in enumerate(rs.positive_roots)}
    if any(prof[idx[a]] < -d for a in rs.simple_roots):
        return False
    return prof[idx[rs.highest_root]] <= d


@dataclass
class AlcoveIdeal:
    rs: RootSystem
    d: int
    elements: list[AffineWeylElement]
    expected: int

    @property
    def count(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        s = self.__dict__.get("_set")
        if s is None:
            s = self.__dict__["_set"] = frozenset(self.elements)
        return x in s

    def profiles(self) -> list[dict]:
        return [{"element": str(x), "length": length(x), "profile": list(alcove_profile(x).profile)}
                for x in self.elements]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["element", "length"] + [f"k{list(a)}" for a in self.rs.positive_roots])
        for x in self.elements:
            w.writerow([str(x), length(x)] + list(alcove_profile(x).profile))
        return buf.getvalue()


def alcove_ideal(rs: RootSystem, d: int, check: bool = True) -> AlcoveIdeal:
    """Alcoves with ``k_{α_i} >= -d`` and ``k_θ <= d``, by wall-crossing BFS."""
    rs = _simply_connected(rs)
    gens = simple_affine_reflections(rs, "alcove")
    e = identity(rs)
    seen = {e}
    order = [e]
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = x * s
            if y not in seen and in_region(y, d):
                seen.add(y)
                order.append(y)
                queue.append(y)
    expected = (d * rs.coxeter_number + 1) ** rs.rank
    order.sort(key=lambda x: (length(x), alcove_profile(x).profile))
    ideal = AlcoveIdeal(rs, d, order, expected)
    if check:
        if ideal.count != expected:
            raise CountMismatch(f"{rs.label()} d={d}: found {ideal.count} alcoves, expected {expected}")
        bad = weak_order_violations(ideal, "right")
        if bad:
            raise CountMismatch(f"{rs.label()} d={d}: not closed under right descents, e.g. {bad[0]}")
    return ideal


def bruhat_covers(x: AffineWeylElement) -> list[AffineWeylElement]:
    """Elements ``r_H x`` of length ``ℓ(x) - 1``, ``H`` a wall separating ``A`` from ``x(A)``."""
    rs = x.rs
    lx = length(x)
    out = []
    for a, k in zip(rs.positive_roots, alcove_profile(x).profile):
        js = range(1, k + 1) if k > 0 else range(k + 1, 1)
        for j in js:
            y = affine_reflection(rs, a, j) * x
            if length(y) == lx - 1:
                out.append(y)
    return out


def bruhat_cover_violations(ideal: AlcoveIdeal) -> list[tuple[str, str]]:
    """Covering pairs ``y < x`` with ``x`` in the ideal and ``y`` outside it."""
    return [(str(x), str(y)) for x in ideal.elements for y in bruhat_covers(x) if y not in ideal]


def weak_order_violations(ideal: AlcoveIdeal, side: str = "right") -> list[tuple[str, str]]:
    """Pairs ``(x, y)``, ``x`` in the ideal, ``y = x s_i`` (or ``s_i x``) shorter and outside."""
    gens = simple_affine_reflections(ideal.rs, "alcove")
    bad = []
    for x in ideal.elements:
        lx = length(x)
        for s in gens:
            y = x * s if side == "right" else s * x
            if length(y) < lx and y not in ideal:
                bad.append((str(x), str(y)))
    return bad


# -- equivalence classes ------------------------------------------------------

def linked(y: AffineWeylElement, i: int, d: int) -> bool:
    """Whether ``y`` is identified with the shorter ``s_i y``.

    The condition is tested at the longer endpoint, in the character model.
    """
    a = simple_affine_roots(y.rs)[i]
    return swap_condition(negate(y), a, d)


@dataclass
class ClassSummary:
    rs: RootSystem
    d: int
    radius: int
    ball_size: int
    classes: list[list[AffineWeylElement]]
    visible: list[bool]  # minimal elements strictly inside the ball
    ideal: AlcoveIdeal
    failures: list[dict] = field(default_factory=list)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def visible_count(self) -> int:
        return sum(self.visible)

    @property
    def bound(self) -> int:
        return self.ideal.expected

    def ideal_hits(self) -> list[int]:
        return [sum(1 for x in c if x in self.ideal) for c in self.classes]

    def to_json(self) -> dict:
        hits = self.ideal_hits()
        return {
            "system": self.rs.label(),
            "d": self.d,
            "radius": self.radius,
            "ball_size": self.ball_size,
            "classes": self.class_count,
            "visible_classes": self.visible_count,
            "bound": self.bound,
            "visible_meeting_ideal": sum(1 for v, h in zip(self.visible, hits) if v and h),
            "equality_observed": self.visible_count == self.bound,
            "failures": self.failures,
        }


def equivalence_classes(rs: RootSystem, d: int, ball_radius: int) -> ClassSummary:
    """Partition the length ball by the relation ``x ~ s_i x`` (condition at the longer one)."""
    rs = _simply_connected(rs)
    gens = simple_affine_reflections(rs, "alcove")
    elems = ball(rs, ball_radius, "alcove")
    lengths = {x: length(x) for x in elems}
    uf = UnionFind()
    for x in elems:
        uf.add(x)
    has_lower = set()
    for y in elems:
        ly = lengths[y]
        if ly == 0:
            continue
        for i, s in enumerate(gens):
            x = s * y
            if lengths.get(x, ly) < ly and linked(y, i, d):
                uf.union(x, y)
                has_lower.add(y)
    groups = sorted(uf.groups().values(), key=lambda g: min((lengths[x], x.key()) for x in g))
    groups = [sorted(g, key=lambda x: (lengths[x], x.key())) for g in groups]
    # a class is visible when all its minimal elements sit strictly inside the ball
    visible = [all(lengths[x] < ball_radius for x in g if x not in has_lower) for g in groups]
    ideal = alcove_ideal(rs, d)
    summary = ClassSummary(rs, d, ball_radius, len(elems), groups, visible, ideal)
    for g, vis in zip(groups, visible):
        if vis and not any(x in ideal for x in g):
            summary.failures.append({"class_min": str(g[0]), "size": len(g)})
    return summary


# -- permutation character ----------------------------------------------------

def _points(rs: RootSystem, n: int):
    return itertools.product(range(n), repeat=rs.rank)


def _act_mod(rs: RootSystem, w, v, n: int) -> tuple[int, ...]:
    return tuple(c % n for c in rs.act_lattice(w, v))


@dataclass
class CharacterTable:
    rs: RootSystem
    d: int
    modulus: int
    rows: list[dict]
    dim: int
    invariants: Fraction
    sign_multiplicity: Fraction

    def to_json(self) -> dict:
        return {
            "system": self.rs.label(),
            "d": self.d,
            "modulus": self.modulus,
            "dim": self.dim,
            "invariants": int(self.invariants),
            "sign_multiplicity": int(self.sign_multiplicity),
            "classes": self.rows,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["representative", "size", "sign", "chi"])
        for r in self.rows:
            w.writerow([r["representative"], r["size"], r["sign"], r["chi"]])
        return buf.getvalue()


def perm_module_character(rs: RootSystem, d: int) -> CharacterTable:
    """Character of ``W`` on ``Λ0/(dh+1)Λ0`` by fixed-point counts, with Burnside sums."""
    rs = _simply_connected(rs)
    n = d * rs.coxeter_number + 1
    pts = list(_points(rs, n))
    rows = []
    total = Fraction(0)
    total_sign = Fraction(0)
    for cls in rs.conjugacy_classes():
        w = cls[0]
        chi = sum(1 for v in pts if _act_mod(rs, w, v, n) == v)
        rows.append({"representative": [i + 1 for i in w.word], "size": len(cls),
                     "sign": w.sign, "chi": chi})
        total += len(cls) * chi
        total_sign += len(cls) * chi * w.sign
    return CharacterTable(rs, d, n, rows, len(pts), total / rs.order, total_sign / rs.order)


def orbit_statistics(rs: RootSystem, d: int) -> dict:
    """Orbit count and sign multiplicity from explicit orbits (independent of characters)."""
    rs = _simply_connected(rs)
    n = d * rs.coxeter_number + 1
    gens = [rs.simple_reflection(i) for i in range(rs.rank)]
    seen: set = set()
    orbits = 0
    sign_orbits = 0
    for v in _points(rs, n):
        if v in seen:
            continue
        orbits += 1
        orb = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for g in gens:
                t = _act_mod(rs, g, u, n)
                if t not in orb:
                    orb.add(t)
                    queue.append(t)
        seen |= orb
        # the sign character occurs once in C[orbit] iff the stabilizer is even
        if all(w.sign == 1 for w in rs.weyl if _act_mod(rs, w, v, n) == v):
            sign_orbits += 1
    return {"orbits": orbits, "sign_orbits": sign_orbits, "points": n**rs.rank}
