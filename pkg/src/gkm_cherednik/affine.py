"""The extended affine Weyl group ``W ⋉ Λ`` and its actions.

An element ``x = (w, μ)`` stands for ``w·t^μ``.  The group law is

    (w1, μ1)·(w2, μ2) = (w1 w2, w2^{-1} μ1 + μ2).

Two actions are used.

* On affine characters ``λ + kħ`` (the *character model*):
  ``t^μ`` sends ``λ + kħ`` to ``λ + (k + <μ, λ>)ħ`` and ``w`` acts linearly
  on ``λ``.  GKM hyperplanes and the Cherednik actions use this model.
* On points of ``Λ ⊗ R`` (the *alcove model*): ``x(p) = w(p + μ)``.  Alcove
  profiles, lengths and the cell combinatorics use this model.

The map ``(w, μ) -> (w, -μ)`` is a group automorphism exchanging the two
models; :func:`negate` implements it.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import NamedTuple, Sequence

from .rootsys import RootSystem, WeylElement, Vec


class AffineCharacter(NamedTuple):
    """``λ + kħ`` with ``λ`` in character coordinates."""

    lam: Vec
    k: int

    def __neg__(self) -> "AffineCharacter":
        return AffineCharacter(tuple(-c for c in self.lam), -self.k)

    def __add__(self, other) -> "AffineCharacter":  # type: ignore[override]
        return AffineCharacter(tuple(a + b for a, b in zip(self.lam, other.lam)), self.k + other.k)


def delta(rank: int) -> AffineCharacter:
    """The pure loop character ``ħ``."""
    return AffineCharacter((0,) * rank, 1)


class AffineWeylElement:
    """``w·t^μ``; immutable, hashable."""

    __slots__ = ("rs", "w", "mu", "_hash")

    def __init__(self, rs: RootSystem, w: WeylElement, mu: Sequence[int]):
        self.rs = rs
        self.w = w
        self.mu = tuple(mu)
        self._hash = hash((w.index, self.mu))

    def __eq__(self, other) -> bool:
        return (isinstance(other, AffineWeylElement) and self.w.index == other.w.index
                and self.mu == other.mu)

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        return multiply(self, other)

    def inverse(self) -> "AffineWeylElement":
        rs = self.rs
        return AffineWeylElement(rs, rs.inverse(self.w), tuple(-c for c in rs.act_lattice(self.w, self.mu)))

    def is_identity(self) -> bool:
        return self.w.index == 0 and not any(self.mu)

    def key(self) -> tuple:
        """Deterministic sort key."""
        return (self.w.length, self.w.word, self.mu)

    def __str__(self) -> str:
        word = ",".join(str(i + 1) for i in self.w.word)
        mu = ",".join(str(c) for c in self.mu)
        return f"w:[{word}];t:[{mu}]"

    def __repr__(self) -> str:
        return f"AffineWeylElement({self})"


def identity(rs: RootSystem) -> AffineWeylElement:
    return AffineWeylElement(rs, rs.identity, (0,) * rs.rank)


def translation(rs: RootSystem, mu: Sequence[int]) -> AffineWeylElement:
    return AffineWeylElement(rs, rs.identity, mu)


def finite(rs: RootSystem, w: WeylElement) -> AffineWeylElement:
    return AffineWeylElement(rs, w, (0,) * rs.rank)


def multiply(x: AffineWeylElement, y: AffineWeylElement) -> AffineWeylElement:
    """Group law ``(w1,μ1)(w2,μ2) = (w1w2, w2^{-1}μ1 + μ2)``."""
    rs = x.rs
    if y.rs is not rs:
        raise ValueError("elements of different root systems")
    if not any(x.mu):
        mu = y.mu
    else:
        m = rs.act_lattice(rs.inverse(y.w), x.mu)
        mu = tuple(a + b for a, b in zip(m, y.mu))
    return AffineWeylElement(rs, rs.mul(x.w, y.w), mu)


def negate(x: AffineWeylElement) -> AffineWeylElement:
    """The automorphism ``(w, μ) -> (w, -μ)`` relating the two models."""
    return AffineWeylElement(x.rs, x.w, tuple(-c for c in x.mu))


def act_char(x: AffineWeylElement, chi: AffineCharacter) -> AffineCharacter:
    """``w(t^μ χ)``: ``λ + kħ -> wλ + (k + <μ,λ>)ħ``.

    >>> from gkm_cherednik.rootsys import build_root_system
    >>> rs = build_root_system("A", 1)
    >>> act_char(translation(rs, (1,)), AffineCharacter((2,), 0))
    AffineCharacter(lam=(2,), k=2)
    """
    rs = x.rs
    lam, k = chi
    k = k + sum(a * b for a, b in zip(x.mu, lam))
    return AffineCharacter(rs.act_weight(x.w, lam), k)


def act_affine_root(x: AffineWeylElement, root: AffineCharacter) -> AffineCharacter:
    """Alcove-model action on affine functions ``p -> λ(p) + k``."""
    lam, k = root
    flipped = act_char(x, AffineCharacter(tuple(-c for c in lam), k))
    return AffineCharacter(tuple(-c for c in flipped.lam), flipped.k)


def affine_reflection(rs: RootSystem, alpha: Sequence[int], k: int) -> AffineWeylElement:
    """``s_{α,k} = t^{kα∨} s_α``; it sends ``α + kħ`` to its negative."""
    alpha = tuple(alpha)
    if not rs.is_positive_root(alpha):
        raise ValueError(f"{alpha} is not a positive root")
    cor = rs.coroot_of(alpha)
    return AffineWeylElement(rs, rs.reflection(alpha), tuple(-k * c for c in cor))


# -- simple affine reflections ------------------------------------------------

def simple_affine_roots(rs: RootSystem) -> list[AffineCharacter]:
    """``[ħ - θ, α_1, ..., α_r]`` (index 0 is the affine node)."""
    out = [AffineCharacter(tuple(-c for c in rs.highest_root), 1)]
    out += [AffineCharacter(a, 0) for a in rs.simple_roots]
    return out


def simple_affine_reflections(rs: RootSystem, model: str = "character") -> list[AffineWeylElement]:
    """``[s_0, s_1, ..., s_r]`` in the requested model.

    In the character model ``s_0 = t^{-θ∨} s_θ`` reflects the character
    ``ħ - θ``; in the alcove model ``s_0`` reflects in the wall ``θ = 1``.
    """
    key = "_sar_" + model
    cached = rs.__dict__.get(key)
    if cached is not None:
        return cached
    theta = rs.highest_root
    if model == "character":
        s0 = affine_reflection(rs, theta, -1)
    elif model == "alcove":
        s0 = affine_reflection(rs, theta, 1)
    else:
        raise ValueError(f"unknown model {model!r}")
    out = [s0] + [finite(rs, rs.simple_reflection(i)) for i in range(rs.rank)]
    rs.__dict__[key] = out
    return out


def affine_cartan_matrix(rs: RootSystem) -> list[list[int]]:
    """``<a_i∨, a_j>`` over the affine nodes ``0..r``; the coroot of node 0 is ``-θ∨``."""
    cor = [rs.minimal_coroot] + list(rs.simple_coroots)
    roots = [tuple(-c for c in rs.highest_root)] + list(rs.simple_roots)
    return [[rs.pair(c, a) for a in roots] for c in cor]


def braid_orders(rs: RootSystem) -> dict[tuple[int, int], int | None]:
    """Coxeter orders ``m_ij`` of the affine Dynkin diagram (``None`` for infinity)."""
    a = affine_cartan_matrix(rs)
    table = {0: 2, 1: 3, 2: 4, 3: 6}
    out = {}
    n = rs.rank + 1
    for i in range(n):
        for j in range(i + 1, n):
            out[(i, j)] = table.get(a[i][j] * a[j][i])
    return out


# -- alcoves ------------------------------------------------------------------

class Alcove(NamedTuple):
    element: AffineWeylElement
    profile: tuple[int, ...]


def _scaled_point(rs: RootSystem) -> tuple[tuple[int, ...], int]:
    # p = rho∨/(h+1); return (N p, N) with N p integral
    cached = rs.__dict__.get("_alcove_point")
    if cached is None:
        two_rho = tuple(sum(c[i] for c in rs.positive_coroots) for i in range(rs.rank))
        cached = (two_rho, 2 * (rs.coxeter_number + 1))
        rs.__dict__["_alcove_point"] = cached
    return cached


def interior_point(rs: RootSystem) -> tuple[Fraction, ...]:
    """``ρ∨/(h+1)`` in lattice coordinates."""
    p, n = _scaled_point(rs)
    return tuple(Fraction(c, n) for c in p)


def alcove_profile(x: AffineWeylElement) -> Alcove:
    """``k_α = floor(α(x(p)))`` over the positive roots, with ``x(p) = w(p + μ)``."""
    rs = x.rs
    p, n = _scaled_point(rs)
    q = rs.act_lattice(x.w, tuple(a + n * b for a, b in zip(p, x.mu)))
    prof = tuple(sum(a * b for a, b in zip(alpha, q)) // n for alpha in rs.positive_roots)
    return Alcove(x, prof)


def length(x: AffineWeylElement) -> int:
    """Alcove-model length: number of affine walls between ``A_e`` and ``A_x``."""
    return sum(abs(k) for k in alcove_profile(x).profile)


def char_length(x: AffineWeylElement) -> int:
    """Length for the character-model Coxeter generators."""
    return length(negate(x))


def model_length(x: AffineWeylElement, model: str) -> int:
    return length(x) if model == "alcove" else char_length(x)


def reduced_decomposition(x: AffineWeylElement, model: str = "character"
                          ) -> tuple[AffineWeylElement, list[int]]:
    """Write ``x = π·s_{i_1}···s_{i_l}`` with ``π`` of length zero."""
    gens = simple_affine_reflections(x.rs, model)
    word: list[int] = []
    cur = x
    ell = model_length(cur, model)
    while ell > 0:
        for i, s in enumerate(gens):
            y = cur * s
            ly = model_length(y, model)
            if ly < ell:
                word.append(i)
                cur, ell = y, ly
                break
        else:
            raise AssertionError("no descent found for an element of positive length")
    word.reverse()
    return cur, word


# -- length-zero elements -----------------------------------------------------

def lattice_coset_representatives(rs: RootSystem) -> list[Vec]:
    """Representatives of ``Λ/Λ0`` (lattice coordinates), starting with 0."""
    def key(mu):
        return tuple(c - (c.numerator // c.denominator) for c in map(Fraction, rs.lattice_to_coroot(mu)))

    zero = (0,) * rs.rank
    reps = {key(zero): zero}
    queue = deque([zero])
    basis = [tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank)]
    while queue:
        mu = queue.popleft()
        for b in basis:
            nu = tuple(x + y for x, y in zip(mu, b))
            k = key(nu)
            if k not in reps:
                reps[k] = nu
                queue.append(nu)
    return sorted(reps.values(), key=lambda v: (sum(map(abs, v)), v))


def length_zero_elements(rs: RootSystem, model: str = "character") -> list[AffineWeylElement]:
    """One length-zero element per class in ``Λ/Λ0``; the identity comes first.

    Each is obtained from ``t^μ`` for a coset representative ``μ`` by
    left multiplication with length-decreasing simple affine reflections.
    """
    key = "_pi_" + model
    cached = rs.__dict__.get(key)
    if cached is not None:
        return cached
    gens = simple_affine_reflections(rs, model)
    out = []
    for mu in lattice_coset_representatives(rs):
        x = translation(rs, mu)
        ell = model_length(x, model)
        while ell > 0:
            for s in gens:
                y = s * x
                ly = model_length(y, model)
                if ly < ell:
                    x, ell = y, ly
                    break
        out.append(x)
    rs.__dict__[key] = out
    return out


def node_permutation(pi: AffineWeylElement, model: str = "character") -> list[int]:
    """``σ`` with ``π s_i π^{-1} = s_{σ(i)}``."""
    gens = simple_affine_reflections(pi.rs, model)
    inv = pi.inverse()
    out = []
    for s in gens:
        c = pi * s * inv
        out.append(gens.index(c))
    return out


# -- balls --------------------------------------------------------------------

def ball(rs: RootSystem, radius: int, model: str = "alcove", extended: bool = False,
         side: str = "left") -> list[AffineWeylElement]:
    """Elements of length at most ``radius``, in BFS order.

    With ``extended`` the length-zero elements are included, otherwise only
    the affine Weyl group ``W ⋉ Λ0`` is enumerated.
    """
    gens = simple_affine_reflections(rs, model)
    starts = length_zero_elements(rs, model) if extended else [identity(rs)]
    seen = {x: 0 for x in starts}
    order = list(starts)
    frontier = list(starts)
    for r in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for s in gens:
                y = s * x if side == "left" else x * s
                if y not in seen and model_length(y, model) == r:
                    seen[y] = r
                    nxt.append(y)
                    order.append(y)
        frontier = nxt
    return order

