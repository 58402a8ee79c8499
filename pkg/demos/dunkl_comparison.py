"""Trigonometric against rational Dunkl operators in rank one.

Prints D_y on a few Laurent monomials, then expands both operators around
the identity and shows that their difference on low-degree monomials is a
power series with no pole.
"""

from fractions import Fraction

from gkm_cherednik.cherednik import (
    CherednikParams,
    LaurentElem,
    compare_dunkl_truncated,
    polynomial_window,
    regular_difference,
    search_conventions,
    trig_dunkl,
)
from gkm_cherednik.rootsys import build_root_system

rs = build_root_system("A", 1)
params = CherednikParams.uniform(Fraction(1, 3))

print("D_y e^λ with c = 1/3:")
for lam in range(-2, 3):
    out = trig_dunkl(rs, (1,), LaurentElem.monomial((lam,)), params)
    print(f"  λ={lam:>2}:  {out.render()}")

print("\nsign conventions satisfying the relations:")
for conv in search_conventions(rs):
    print("  ", conv.to_json())

ORDER = 6
print(f"\ndifference through order {ORDER - 1}:")
for g in polynomial_window(rs, 2):
    diff = regular_difference(rs, (1,), g, params, ORDER)
    print(f"  on {g.render(['X', 'h']):<6} -> {diff.render(['X', 'h'])}")

rep = compare_dunkl_truncated(rs, None, ORDER, params)
for c in rep["checks"]:
    print(f"{c['status']:>5}  {c['name']}")
