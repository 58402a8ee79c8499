"""Explicit basis for the rank-one GKM module and the reduction algorithm.

The extended affine Weyl group of ``SL_2`` is identified with ``Z`` by
``2m -> t^{mα∨}`` and ``2m+1 -> t^{mα∨} s``.  Two indices are joined by an
edge of level ``d`` iff they differ by an odd number of absolute value at most
``2d - 1``; the edge between ``ℓ`` and ``ℓ'`` carries the hyperplane
``y + ((ℓ + ℓ' - 1)/2) ħ``, where ``y = α``.

For ``r >= 1`` the class ``b^r_k`` is supported on ``[k, k + 2r - 1]`` with

    b^r_{k, k+2m+ε} = (-1)^{m+ε} C(r-1, m) / prod_{i=1}^{r} (y + (k+m+i-1) ħ)

for ``0 <= m <= r-1`` and ``ε ∈ {0, 1}``; ``b^0_k`` is the indicator of ``k``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, NamedTuple

from .affine import AffineWeylElement, finite, translation
from .exactfrac import FracElem, PolyElem
from .gkmmodel import Check, GkmClass, ecm_apply, membership, random_class
from .rootsys import RootSystem, build_root_system


class NonMembershipError(ValueError):
    """The class is not in the GKM module (a reduction step left a pole)."""


class BasisLabel(NamedTuple):
    r: int
    k: int


def default_system() -> RootSystem:
    return build_root_system("A", 1)


def index_to_element(l: int, rs: RootSystem | None = None) -> AffineWeylElement:
    rs = rs or default_system()
    m, eps = divmod(l, 2)
    cor = rs.simple_coroots[0]
    t = translation(rs, tuple(m * c for c in cor))
    return t * finite(rs, rs.simple_reflection(0)) if eps else t


def element_to_index(x: AffineWeylElement) -> int:
    rs = x.rs
    cor = rs.simple_coroots[0][0]
    mu = x.mu[0]
    if x.w.index == 0:
        if mu % cor:
            raise ValueError(f"{x} is not on the identity component")
        return 2 * (mu // cor)
    if mu % cor:
        raise ValueError(f"{x} is not on the identity component")
    return 2 * (-mu // cor) + 1


def hyperplane(l: int, lp: int) -> tuple[int, int]:
    """Coefficients ``(1, c)`` of the hyperplane ``y + cħ`` on the edge ``{ℓ, ℓ'}``."""
    if (l + lp) % 2 == 0:
        raise ValueError("indices of equal parity are never adjacent")
    return (1, (l + lp - 1) // 2)


def is_admissible(label: BasisLabel, d: int) -> bool:
    r, k = label
    if d == 0:
        return r == 0
    if r == 0:
        return k == 0
    if r < d:
        return k in (0, 1)
    return r == d


def leading_index(label: BasisLabel) -> int:
    r, k = label
    if r == 0 or k < 0:
        return k
    return k + 2 * r - 1


def label_for_index(l: int, d: int) -> BasisLabel:
    """Inverse of :func:`leading_index` on admissible labels of level ``d``."""
    if d == 0:
        return BasisLabel(0, l)
    if l < 0:
        return BasisLabel(d, l)
    if l > 2 * d - 2:
        return BasisLabel(d, l - 2 * d + 1)
    if l == 0:
        return BasisLabel(0, 0)
    return BasisLabel((l + 1) // 2, (l + 1) % 2)


def order_key(l: int, d: int) -> tuple[int, int]:
    """Partial order in which every basis element has a unique maximal entry."""
    if l < 0:
        return (1, -l)
    if l > 2 * d - 2:
        return (1, l)
    return (0, l)


def entry(label: BasisLabel, l: int) -> FracElem:
    r, k = label
    if r == 0:
        return FracElem.one(2) if l == k else FracElem.zero(2)
    off = l - k
    if off < 0 or off > 2 * r - 1:
        return FracElem.zero(2)
    m, eps = divmod(off, 2)
    f = FracElem.const(2, (-1) ** (m + eps) * comb(r - 1, m))
    for i in range(1, r + 1):
        f = f * FracElem.reciprocal_linear((1, k + m + i - 1))
    return f


def support(label: BasisLabel) -> range:
    r, k = label
    return range(k, k + 1) if r == 0 else range(k, k + 2 * r)


def sl2_basis_element(d: int, label: BasisLabel | tuple, rs: RootSystem | None = None) -> GkmClass:
    """The class ``b^r_k`` at level ``d``."""
    label = BasisLabel(*label)
    if not is_admissible(label, d):
        raise ValueError(f"label {tuple(label)} is not admissible at level {d}")
    rs = rs or default_system()
    return GkmClass(rs, d, {index_to_element(l, rs): entry(label, l) for l in support(label)})


def resum(coeffs: Mapping[BasisLabel, PolyElem], d: int, rs: RootSystem | None = None) -> GkmClass:
    """``Σ coeff · b`` over the given labels."""
    rs = rs or default_system()
    total = GkmClass.zero(rs, d)
    for lab, c in coeffs.items():
        total = total + sl2_basis_element(d, lab, rs).scale(c)
    return total


def sl2_expand(xi: GkmClass, d: int | None = None) -> dict[BasisLabel, PolyElem]:
    """Coefficients of ``ξ`` in the basis ``{b^r_k}``.

    Entries outside ``[0, 2d-2]`` are cleared with multiples of ``b^d_k``
    (most negative first, then largest first); the remaining window is then
    reduced from the top with ``b^r_0``, ``b^r_1`` and ``b^0_0``.
    """
    d = xi.d if d is None else d
    vals: dict[int, FracElem] = {element_to_index(x): f for x, f in xi.entries.items()}
    out: dict[BasisLabel, PolyElem] = {}

    def step(l: int) -> None:
        lab = label_for_index(l, d)
        lead = entry(lab, l)
        c = vals[l] * _den_poly(lead) * _inv_const(lead)
        if not c.is_polynomial():
            raise NonMembershipError(f"entry at index {l} is not a polynomial multiple of the "
                                     f"leading entry of b^{lab.r}_{lab.k}")
        for j in support(lab):
            e = entry(lab, j)
            v = vals.get(j, FracElem.zero(2)) - e * c.num
            if v.is_zero():
                vals.pop(j, None)
            else:
                vals[j] = v
        out[lab] = out.get(lab, PolyElem.zero(2)) + c.num

    guard = 0
    while vals:
        guard += 1
        if guard > 100000:
            raise RuntimeError("reduction did not terminate")
        neg = [l for l in vals if l < 0]
        if neg:
            step(min(neg))
            continue
        high = [l for l in vals if l > 2 * d - 2]
        if high:
            step(max(high))
            continue
        step(max(vals))
    return {k: v for k, v in out.items() if not v.is_zero()}


def _den_poly(f: FracElem) -> PolyElem:
    p = PolyElem.one(f.nvars)
    for L, m in f.den.items():
        for _ in range(m):
            p = p * L.poly()
    return p


def _inv_const(f: FracElem):
    # f = c / prod(forms) with constant c
    if not f.num.is_constant() or f.num.is_zero():
        raise ValueError("leading entry must have a constant numerator")
    return Fraction(1) / f.num.constant_term()


def admissible_labels(d: int, kmin: int, kmax: int) -> list[BasisLabel]:
    """Admissible labels whose leading index lies in ``[kmin, kmax]``."""
    return [label_for_index(l, d) for l in range(kmin, kmax + 1)]


def basis_dump(d: int, labels: Iterable[BasisLabel]) -> list[dict]:
    out = []
    for lab in labels:
        out.append({
            "r": lab.r,
            "k": lab.k,
            "entries": [{"index": l, "frac": entry(lab, l).render()} for l in support(lab)],
        })
    return out


def transport(xi: GkmClass, g: AffineWeylElement) -> GkmClass:
    """Move a class to another component: entries at ``x`` go to ``g x``, twisted by ``g``."""
    return ecm_apply(xi, g.inverse())


def verify_sl2(d: int, kmax: int = 6, sample_count: int = 100, seed: int = 0) -> dict:
    """Membership, triangularity and the expand/re-sum round trip at level ``d``."""
    rs = default_system()
    labels = [lab for lab in admissible_labels(d, -kmax - 2 * d, kmax + 2 * d) if abs(lab.k) <= kmax]
    labels = sorted(set(labels))
    mem = Check("sl2.membership")
    tri = Check("sl2.triangular")
    own = Check("sl2.expand_basis")
    for lab in labels:
        b = sl2_basis_element(d, lab, rs)
        m = membership(b)
        mem.record(bool(m), lambda lab=lab, m=m: {"label": list(lab), "violations": m.violations})
        lead = leading_index(lab)
        ok = not entry(lab, lead).is_zero() and all(
            order_key(j, d) < order_key(lead, d) for j in support(lab) if j != lead)
        tri.record(ok, lambda lab=lab: {"label": list(lab)})
        exp = sl2_expand(b, d)
        own.record(exp == {lab: PolyElem.one(2)}, lambda lab=lab, exp=exp: {
            "label": list(lab), "expansion": {str(tuple(k)): v.render() for k, v in exp.items()}})
    rt = Check("sl2.roundtrip")
    rng = random.Random(f"sl2:{d}:{seed}")
    for idx in range(sample_count):
        xi = random_class(rs, d, rng)
        try:
            back = resum(sl2_expand(xi, d), d, rs)
            ok, err = back == xi, None
        except NonMembershipError as exc:
            ok, err = False, str(exc)
        rt.record(ok, lambda xi=xi, err=err: {"sample": idx, "class": xi.to_json(), "error": err})
    return {"d": d, "labels": len(labels), "checks": [c.to_json() for c in (mem, tri, own, rt)]}
