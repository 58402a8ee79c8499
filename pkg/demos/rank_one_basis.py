"""Walk through the rank-one GKM module at level 2.

Builds the explicit basis classes, checks that each is a genuine class,
then decomposes the indicator of the identity and its image under the
simple reflection, printing the coefficients.
"""

from gkm_cherednik.gkmmodel import GkmClass, Reflection, cs_apply, membership
from gkm_cherednik.sl2 import (
    admissible_labels,
    element_to_index,
    index_to_element,
    resum,
    sl2_basis_element,
    sl2_expand,
)

NAMES = ["y", "h"]
D = 2


def show(xi: GkmClass) -> None:
    for x in sorted(xi.support, key=element_to_index):
        print(f"    {element_to_index(x):>3}  {str(x):<18} {xi[x].render(NAMES)}")


print(f"Basis classes at level {D} with leading index in [-3, 4]:")
for lab in admissible_labels(D, -3, 4):
    b = sl2_basis_element(D, lab)
    print(f"  b^{lab.r}_{lab.k}   member: {bool(membership(b))}")
    show(b)

ae = GkmClass.indicator(index_to_element(0), D)
for name, xi in (("a^e", ae), ("s.a^e", cs_apply(Reflection(1), ae))):
    coeffs = sl2_expand(xi, D)
    print(f"\n{name} =")
    show(xi)
    print("  expansion:")
    for lab, c in sorted(coeffs.items()):
        print(f"    b^{lab.r}_{lab.k}  * ({c.render(NAMES)})")
    print("  re-sum matches:", resum(coeffs, D) == xi)
