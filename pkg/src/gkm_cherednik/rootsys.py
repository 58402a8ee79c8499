"""Finite root systems and Weyl groups for types A, B, C, D and G2.

Coordinates
-----------
A root system is built together with a lattice ``Λ`` of cocharacters, either
the coroot lattice (the default) or the coweight lattice.  Elements of ``Λ``
are integer vectors in a fixed basis of ``Λ``; characters are integer vectors
in the dual basis.  The pairing between the two is the plain dot product.

Roots are additionally kept in simple-root coordinates, which is the basis
used for polynomial variables elsewhere in the package.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

Vec = tuple[int, ...]
Mat = tuple[tuple[int, ...], ...]


class ConfigurationError(ValueError):
    """Unsupported root system type, rank or lattice."""


def _cartan_matrix(cartan_type: str, rank: int) -> list[list[int]]:
    # a[i][j] = <alpha_i^vee, alpha_j>
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if cartan_type == "A" and n >= 1:
        for i in range(n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
    elif cartan_type in ("B", "C") and n >= 2:
        for i in range(n - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        # the last simple root is short for B, long for C
        if cartan_type == "B":
            a[n - 2][n - 1], a[n - 1][n - 2] = -1, -2
        else:
            a[n - 2][n - 1], a[n - 1][n - 2] = -2, -1
    elif cartan_type == "D" and n >= 3:
        for i in range(n - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif cartan_type == "G" and n == 2:
        # alpha_1 short, alpha_2 long
        a[0][1], a[1][0] = -3, -1
    else:
        raise ConfigurationError(f"unsupported root system ({cartan_type}, {rank})")
    return a


def _weyl_order_formula(cartan_type: str, n: int) -> int:
    if cartan_type == "A":
        return math.factorial(n + 1)
    if cartan_type in ("B", "C"):
        return 2**n * math.factorial(n)
    if cartan_type == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return 12


def _matvec(m: Mat, v: Sequence[int]) -> Vec:
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in m)


def _matmul(a: Mat, b: Mat) -> Mat:
    n = len(b[0])
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(n))
        for i in range(len(a))
    )


def _identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _inverse(m: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True, eq=False)
class WeylElement:
    """An element of the finite Weyl group.

    ``xmat`` acts on character coordinates, ``lmat`` on lattice coordinates,
    both as integer matrices applied to column vectors.  ``word`` is a reduced
    word in the simple reflections (0-based indices).
    """

    index: int
    word: tuple[int, ...]
    xmat: Mat
    lmat: Mat

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1

    def __repr__(self) -> str:
        return f"WeylElement({list(self.word)})"


@dataclass(eq=False)
class RootSystem:
    """Cartan datum together with an explicit Weyl group.

    Use :func:`build_root_system` to construct instances.
    """

    cartan_type: str
    rank: int
    lattice: str
    cartan: tuple[tuple[int, ...], ...]
    positive_roots_simple: tuple[Vec, ...]
    positive_coroots_simple: tuple[Vec, ...]
    positive_roots: tuple[Vec, ...]
    positive_coroots: tuple[Vec, ...]
    simple_roots: tuple[Vec, ...]
    simple_coroots: tuple[Vec, ...]
    highest_root: Vec
    highest_root_coroot: Vec
    coroot_lattice_basis: tuple[Vec, ...]
    coxeter_number: int
    weyl: tuple[WeylElement, ...] = field(repr=False)
    _char_to_simple: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    _lat_to_coroot: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    _by_xmat: dict = field(repr=False, default_factory=dict)
    _mul_cache: dict = field(repr=False, default_factory=dict)
    _inv_cache: dict = field(repr=False, default_factory=dict)
    _refl_cache: dict = field(repr=False, default_factory=dict)

    # -- basic data ---------------------------------------------------------

    @property
    def roots(self) -> tuple[Vec, ...]:
        return self.positive_roots + tuple(tuple(-c for c in a) for a in self.positive_roots)

    @property
    def minimal_coroot(self) -> Vec:
        """The coroot of ``-θ`` in lattice coordinates (the affine simple coroot)."""
        return tuple(-c for c in self.highest_root_coroot)

    @property
    def order(self) -> int:
        return len(self.weyl)

    @property
    def identity(self) -> WeylElement:
        return self.weyl[0]

    def label(self) -> str:
        suffix = "" if self.lattice == "coroot" else "/adj"
        return f"{self.cartan_type}{self.rank}{suffix}"

    def coroot_of(self, root: Sequence[int]) -> Vec:
        root = tuple(root)
        for a, c in zip(self.positive_roots, self.positive_coroots):
            if a == root:
                return c
            if all(x == -y for x, y in zip(a, root)):
                return tuple(-x for x in c)
        raise ValueError(f"{root} is not a root")

    def is_positive_root(self, root: Sequence[int]) -> bool:
        return tuple(root) in self._positive_set

    @property
    def _positive_set(self) -> frozenset:
        s = self.__dict__.get("_pos_set")
        if s is None:
            s = frozenset(self.positive_roots)
            self.__dict__["_pos_set"] = s
        return s

    def root_length_class(self, root: Sequence[int]) -> str:
        """``'long'`` or ``'short'``; the highest root is long."""
        long = self.__dict__.get("_long")
        if long is None:
            long = frozenset(self.act_weight(w, self.highest_root) for w in self.weyl)
            self.__dict__["_long"] = long
        return "long" if tuple(root) in long else "short"

    def pair(self, mu: Sequence[int], lam: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(mu, lam))

    def to_simple(self, lam: Sequence[int]) -> tuple[Fraction, ...]:
        """Character coordinates to simple-root coordinates (rational)."""
        out = []
        for r in self._char_to_simple:
            c = sum(r[j] * lam[j] for j in range(self.rank))
            out.append(c.numerator if c.denominator == 1 else c)
        return tuple(out)

    def lattice_to_coroot(self, mu: Sequence) -> tuple[Fraction, ...]:
        """Lattice coordinates to simple-coroot coordinates (rational)."""
        return tuple(sum(mu[i] * self._lat_to_coroot[i][j] for i in range(self.rank))
                     for j in range(self.rank))

    def in_coroot_lattice(self, mu: Sequence[int]) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.lattice_to_coroot(mu))

    # -- Weyl group ---------------------------------------------------------

    def weyl_from_xmat(self, m: Mat) -> WeylElement:
        return self.weyl[self._by_xmat[m]]

    def mul(self, u: WeylElement, v: WeylElement) -> WeylElement:
        key = (u.index, v.index)
        r = self._mul_cache.get(key)
        if r is None:
            r = self._by_xmat[_matmul(u.xmat, v.xmat)]
            self._mul_cache[key] = r
        return self.weyl[r]

    def inverse(self, u: WeylElement) -> WeylElement:
        r = self._inv_cache.get(u.index)
        if r is None:
            w = self.identity
            for i in reversed(u.word):
                w = self.mul(w, self.simple_reflection(i))
            r = w.index
            self._inv_cache[u.index] = r
        return self.weyl[r]

    def simple_reflection(self, i: int) -> WeylElement:
        return self.weyl[1 + i]

    def reflection(self, root: Sequence[int]) -> WeylElement:
        root = tuple(root)
        r = self._refl_cache.get(root)
        if r is None:
            cor = self.coroot_of(root)
            n = self.rank
            m = tuple(tuple(int(i == j) - root[i] * cor[j] for j in range(n)) for i in range(n))
            r = self._by_xmat[m]
            self._refl_cache[root] = r
        return self.weyl[r]

    def act_weight(self, w: WeylElement, lam: Sequence[int]) -> Vec:
        return _matvec(w.xmat, lam)

    def act_lattice(self, w: WeylElement, mu: Sequence[int]) -> Vec:
        return _matvec(w.lmat, mu)

    def conjugacy_classes(self) -> list[list[WeylElement]]:
        seen: set[int] = set()
        classes = []
        for w in self.weyl:
            if w.index in seen:
                continue
            cls = {self.mul(self.mul(g, w), self.inverse(g)).index for g in self.weyl}
            seen |= cls
            classes.append([self.weyl[i] for i in sorted(cls)])
        return classes

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "type": self.cartan_type,
            "rank": self.rank,
            "lattice": self.lattice,
            "cartan": [list(r) for r in self.cartan],
            "simple_roots": [list(a) for a in self.simple_roots],
            "simple_coroots": [list(a) for a in self.simple_coroots],
            "positive_roots": [list(a) for a in self.positive_roots],
            "positive_roots_simple": [list(a) for a in self.positive_roots_simple],
            "highest_root": list(self.highest_root),
            "minimal_coroot": list(self.minimal_coroot),
            "coxeter_number": self.coxeter_number,
            "weyl_order": self.order,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


_CACHE: dict[tuple[str, int, str], RootSystem] = {}


def build_root_system(cartan_type: str, rank: int, lattice: str = "coroot") -> RootSystem:
    """Return the (cached) root system of the given type and rank.

    ``lattice`` is ``'coroot'`` (simply connected group) or ``'coweight'``
    (adjoint group).

    >>> rs = build_root_system("A", 2)
    >>> len(rs.positive_roots), rs.coxeter_number
    (3, 3)
    """
    cartan_type = str(cartan_type).upper()
    if not isinstance(rank, int) or rank < 1:
        raise ConfigurationError(f"unsupported root system ({cartan_type}, {rank})")
    if lattice not in ("coroot", "coweight"):
        raise ConfigurationError(f"unknown lattice {lattice!r}")
    key = (cartan_type, rank, lattice)
    if key not in _CACHE:
        _CACHE[key] = _build(cartan_type, rank, lattice)
    return _CACHE[key]


def _build(cartan_type: str, n: int, lattice: str) -> RootSystem:
    a = _cartan_matrix(cartan_type, n)

    def refl_root(i: int, b: Vec) -> Vec:
        c = sum(a[i][j] * b[j] for j in range(n))
        return tuple(b[j] - c * (j == i) for j in range(n))

    def refl_coroot(i: int, b: Vec) -> Vec:
        c = sum(b[j] * a[j][i] for j in range(n))
        return tuple(b[j] - c * (j == i) for j in range(n))

    unit = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    pairs = {(u, u) for u in unit}
    queue = deque(pairs)
    while queue:
        b, bv = queue.popleft()
        for i in range(n):
            p = (refl_root(i, b), refl_coroot(i, bv))
            if p not in pairs:
                pairs.add(p)
                queue.append(p)
    pos = sorted((p for p in pairs if all(c >= 0 for c in p[0])),
                 key=lambda p: (sum(p[0]), p[0]))
    pos_simple = tuple(p[0] for p in pos)
    pos_cor_simple = tuple(p[1] for p in pos)

    if lattice == "coroot":
        # lattice basis = simple coroots, characters = fundamental weights
        def root_x(b):
            return tuple(sum(a[j][k] * b[k] for k in range(n)) for j in range(n))

        def coroot_l(bv):
            return tuple(bv)

        char_to_simple = _inverse(a)
        lat_to_coroot = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        coroot_basis = tuple(unit)
    else:
        # lattice basis = fundamental coweights, characters = root lattice
        def root_x(b):
            return tuple(b)

        def coroot_l(bv):
            return tuple(sum(bv[k] * a[k][j] for k in range(n)) for j in range(n))

        char_to_simple = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        lat_to_coroot = _inverse(a)
        coroot_basis = tuple(tuple(a[i]) for i in range(n))

    pos_x = tuple(root_x(b) for b in pos_simple)
    pos_l = tuple(coroot_l(bv) for bv in pos_cor_simple)
    simple_x = tuple(root_x(u) for u in unit)
    simple_l = tuple(coroot_l(u) for u in unit)
    theta_idx = len(pos) - 1
    h = 2 * len(pos) // n

    def xrefl(i: int) -> Mat:
        return tuple(tuple(int(r == c) - simple_x[i][r] * simple_l[i][c] for c in range(n))
                     for r in range(n))

    def lrefl(i: int) -> Mat:
        return tuple(tuple(int(r == c) - simple_l[i][r] * simple_x[i][c] for c in range(n))
                     for r in range(n))

    gens = [(xrefl(i), lrefl(i)) for i in range(n)]
    ident = _identity(n)
    elems: list[WeylElement] = [WeylElement(0, (), ident, ident)]
    by_x: dict[Mat, int] = {ident: 0}
    # the simple reflections get indices 1..n
    for i, (xm, lm) in enumerate(gens):
        by_x[xm] = len(elems)
        elems.append(WeylElement(len(elems), (i,), xm, lm))
    head = 1
    while head < len(elems):
        w = elems[head]
        head += 1
        for i, (xm, lm) in enumerate(gens):
            nx = _matmul(w.xmat, xm)
            if nx not in by_x:
                by_x[nx] = len(elems)
                elems.append(WeylElement(len(elems), w.word + (i,), nx, _matmul(w.lmat, lm)))

    rs = RootSystem(
        cartan_type=cartan_type,
        rank=n,
        lattice=lattice,
        cartan=tuple(tuple(r) for r in a),
        positive_roots_simple=pos_simple,
        positive_coroots_simple=pos_cor_simple,
        positive_roots=pos_x,
        positive_coroots=pos_l,
        simple_roots=simple_x,
        simple_coroots=simple_l,
        highest_root=pos_x[theta_idx],
        highest_root_coroot=pos_l[theta_idx],
        coroot_lattice_basis=coroot_basis,
        coxeter_number=h,
        weyl=tuple(elems),
        _char_to_simple=tuple(tuple(r) for r in char_to_simple),
        _lat_to_coroot=tuple(tuple(r) for r in lat_to_coroot),
        _by_xmat=by_x,
    )
    if len(elems) != _weyl_order_formula(cartan_type, n):
        raise AssertionError("Weyl group enumeration does not match the order formula")
    return rs


def coxeter_number(rs: RootSystem) -> int:
    """``|R| / rank``."""
    return 2 * len(rs.positive_roots) // rs.rank


def weyl_order_formula(cartan_type: str, rank: int) -> int:
    """Closed-form order of the Weyl group."""
    _cartan_matrix(cartan_type, rank)
    return _weyl_order_formula(cartan_type, rank)
